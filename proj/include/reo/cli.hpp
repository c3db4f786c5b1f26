#pragma once

// Command-line surface and the per-target verification routines behind
// `verify`.

#include "reo/ramsey.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNotArrowing = 3;
inline constexpr int kExitIndeterminate = 4;

struct RunConfig {
  std::size_t threads = 1;
  std::optional<std::uint64_t> node_budget;
  std::filesystem::path cache_dir;
  std::uint64_t seed = 0;
  bool json = false;
  std::optional<std::uint64_t> samples;
  std::optional<std::uint64_t> max_hosts;
  std::ostream* progress = nullptr;  // sweep progress lines, if set

  ArrowOptions arrow_options() const;
  SweepOptions sweep_options() const;
};

struct VerifyParams {
  std::optional<std::size_t> m;
  std::optional<std::size_t> n;
  std::optional<std::size_t> s;
  std::optional<std::size_t> t;
  std::optional<int> variant;
};

inline constexpr std::string_view kVerifyTargets[] = {
    "lemma-3.1", "thm-3.1", "thm-3.3", "thm-3.5", "thm-4.1", "thm-4.2-sample", "prop-ineq", "book-count"};

/// Runs one verification target. Parameters outside the target's envelope
/// throw InvalidParameter.
///   lemma-3.1       no parameters; optional --variant.
///   thm-3.1         --m in {2, 3}; optional --variant. m = 3 sweeps all 8-edge hosts.
///   thm-3.3         t >= s >= 2 with st+s+t <= 20; exact (lower sweep) only at s = t = 2.
///   thm-3.5         optional --m in [3, 6]; default all four.
///   thm-4.1         no parameters: every (n, s, t) with s^2(n-1)+st <= 12.
///   thm-4.2-sample  --s = --t = 2 by default; t >= s >= 2, host at most 4096 edges.
///   prop-ineq       no parameters.
///   book-count      optional --m, --n in [1, 10]; default the full grid.
CheckReport verify_target(std::string_view target, const VerifyParams& params, const RunConfig& config);

/// Color-swap symmetry and host monotonicity on each EXACT witness (one
/// more pendant edge at every rank still arrows, every one-edge deletion
/// does not), followed by verify_inequalities.
CheckReport structural_checks(const std::vector<SizeRamseyResult>& results, const ArrowOptions& options = {});

/// Graph argument: an EOG file path if one exists, else a family expression.
EdgeOrderedGraph load_graph_argument(const std::string& arg);

/// Full CLI. `args` excludes the program name. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reo
