#pragma once

// Size edge-ordered Ramsey numbers: upper bounds from witness hosts, exact
// values from exhaustive sweeps backed by an on-disk ledger, closed-form
// bound evaluators and the cross-check suites.

#include "reo/arrowing.hpp"
#include "reo/errors.hpp"
#include "reo/graph.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace reo {

inline constexpr const char* kToolVersion = "0.3.0";

/// Thrown by size_redge_upper when the host does not arrow.
class NotAnUpperBoundWitness : public Error {
 public:
  explicit NotAnUpperBoundWitness(Coloring counterexample)
      : Error(ErrorKind::NotAnUpperBoundWitness, "host does not arrow; counterexample " + counterexample.to_rb()),
        counterexample_(std::move(counterexample)) {}

  const Coloring& counterexample() const { return counterexample_; }

 private:
  Coloring counterexample_;
};

/// Returns |edges(host)| after confirming host -> (red, blue).
std::size_t size_redge_upper(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                             const EdgeOrderedGraph& host, const ArrowOptions& options = {});

// ---------------------------------------------------------------------------
// Ledger.

struct LedgerEntry {
  std::size_t m = 0;
  std::string canon;  // canonical digest, hex
  bool arrows = false;
  std::optional<std::string> cex;  // RB string over the canonical host's ranks

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

std::string ledger_line(const LedgerEntry& entry);
LedgerEntry parse_ledger_line(std::string_view line);

/// Summary of one ledger file. Entries stay on disk; read them back with
/// read_ledger when needed.
struct SweepLedger {
  std::size_t m = 0;
  std::filesystem::path path;
  std::size_t entries = 0;
  std::size_t total = 0;  // class count for m
  std::size_t arrowing = 0;
  bool complete = false;
};

/// Layout: <root>/<red digest hex>__<blue digest hex>/m<k>.jsonl plus a
/// m<k>.cursor.json checkpoint per level.
class LedgerStore {
 public:
  explicit LedgerStore(std::filesystem::path root);

  const std::filesystem::path& root() const { return root_; }
  std::filesystem::path pair_dir(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue) const;
  std::filesystem::path ledger_path(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                                    std::size_t m) const;
  std::filesystem::path cursor_path(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                                    std::size_t m) const;

 private:
  std::filesystem::path root_;
};

/// All well-formed lines; a malformed final line (torn write) is ignored,
/// a malformed earlier line is a ParseError.
std::vector<LedgerEntry> read_ledger(const std::filesystem::path& path);

struct SweepOptions {
  std::size_t threads = 1;
  std::optional<std::uint64_t> node_budget;
  /// Stop after this many new verdicts in one call (simulated interruption).
  std::optional<std::uint64_t> max_hosts;
  /// Called after each chunk with (m, entries so far, class count).
  std::function<void(std::size_t, std::size_t, std::size_t)> progress;
};

struct SweepOutcome {
  SweepLedger ledger;
  /// First arrowing host in enumeration order, if one was reached.
  std::optional<EdgeOrderedGraph> first_arrowing;
  std::size_t written = 0;  // verdicts appended by this call
  bool interrupted = false;
};

/// Sweeps every edge-ordered graph with m edges, appending verdicts to the
/// ledger. Resumes from the cursor and skips digests already recorded. With
/// `stop_at_arrowing` the sweep ends at the first arrowing host.
SweepOutcome sweep_level(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue, std::size_t m,
                         const LedgerStore& store, const SweepOptions& options, bool stop_at_arrowing);

// ---------------------------------------------------------------------------
// Results.

enum class ResultStatus { Exact, UpperOnly, Aborted };
std::string_view to_string(ResultStatus s);

struct SizeRamseyResult {
  EdgeOrderedGraph red_pattern;
  EdgeOrderedGraph blue_pattern;
  std::optional<std::size_t> value;
  std::optional<EdgeOrderedGraph> witness_host;
  std::vector<SweepLedger> ledgers;  // lower-bound evidence, by level
  ResultStatus status = ResultStatus::Aborted;
};

/// Sweeps m = 1, 2, ... up to m_max (at most 8) and stops at the first level
/// holding an arrowing host.
SizeRamseyResult size_redge_exact(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue, std::size_t m_max,
                                  const LedgerStore& store, const SweepOptions& options = {});

/// Confirms `witness` arrows, then sweeps the level one below it. Since
/// adding edges preserves arrowing, a complete non-arrowing sweep there rules
/// out every smaller host. EXACT on success, UPPER_ONLY when the sweep is
/// interrupted; if a smaller arrowing host turns up it becomes the witness
/// and the status is UPPER_ONLY.
SizeRamseyResult certify_exact(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                               const EdgeOrderedGraph& witness, const LedgerStore& store,
                               const SweepOptions& options = {});

std::string result_json(const SizeRamseyResult& result);

/// Re-checks an EXACT or UPPER_ONLY result from its artifacts: the witness
/// arrows (arrows_naive within its cap), and for EXACT the ledger one level
/// below the value is complete against a fresh class count, has unique
/// digests, no arrowing entry and valid counterexamples.
bool recheck_result(const SizeRamseyResult& result);

// ---------------------------------------------------------------------------
// Closed forms.

struct BoundReport {
  std::string formula_id;
  std::map<std::string, std::int64_t> parameters;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// Bounds on r(mK2, K_{s,t}) for m >= 3, t >= s >= 1:
/// lower = max{m, st, cs - C(m-1,2)}, c = t+m-1 if t >= m else 2m-2;
/// upper = min{mst, m^2 + m(s+t-2) + (s-1)(t-1)}.
BoundReport matching_vs_bipartite_bounds(std::int64_t m, std::int64_t s, std::int64_t t);

/// s^2(n-1) + st, the edge count of K_{s, s(n-1)+t}.
std::int64_t star_vs_bipartite_upper(std::int64_t n, std::int64_t s, std::int64_t t);

struct DiagonalHost {
  std::uint64_t part_a = 0;       // 2s^2
  std::uint64_t part_b = 0;       // ceil(e * 2^{s+1} * t)
  std::uint64_t edge_bound = 0;   // part_a * part_b
};

/// Host sizes for the diagonal K_{s,t} bound, t >= s >= 2.
DiagonalHost bipartite_diagonal_host(std::uint64_t s, std::uint64_t t);

// ---------------------------------------------------------------------------
// Check reports.

struct SubCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  std::chrono::nanoseconds elapsed{0};
  bool indeterminate = false;  // failed only because work was cut short
};

struct CheckReport {
  std::string target;
  std::vector<SubCheck> checks;

  bool passed() const;
  /// Not passed, and every failing check is indeterminate.
  bool indeterminate() const;
  /// Runs `fn`, recording its verdict and time; a thrown Error fails the check
  /// (an Indeterminate error marks it indeterminate).
  void run(const std::string& name, const std::function<bool(std::string&)>& fn);
};

std::string report_json(const CheckReport& report);
std::string report_text(const CheckReport& report);

/// Short name such as "2K2", "P4<1" or "K2,2"; other graphs get their digest.
std::string pattern_label(const EdgeOrderedGraph& g);

/// Inequalities over EXACT values: for mK2 red patterns
/// max{m, |E(H)|} <= r <= m|E(H)|; r(mG, nH) <= (m+n-1) r(G, H) whenever both
/// sides were computed; diagonal monotonicity under ordered containment; and
/// r >= |E(G)|, |E(H)|. Throws ClaimViolated on the first violation.
CheckReport verify_inequalities(const std::vector<SizeRamseyResult>& results);

/// The explicit colorings behind the value 6 for (2K2, P4): each drawn
/// five-edge host with v1v2, v2v3 red under all 120 edge orders and all
/// three path orders, and the case split on C5.
CheckReport verify_small_path_colorings();

}  // namespace reo
