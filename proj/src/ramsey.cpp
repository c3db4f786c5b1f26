#include "reo/ramsey.hpp"

#include "reo/enumerate.hpp"
#include "reo/iso.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_set>

namespace reo {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

EdgeOrderedGraph normalized(const EdgeOrderedGraph& g, const char* what) {
  if (g.empty()) throw Error(ErrorKind::InvalidParameter, std::string(what) + " pattern has no edges");
  return g.without_isolated_vertices();
}

std::string digest_hex(const EdgeOrderedGraph& g) {
  return canonical_form(g, std::numeric_limits<std::size_t>::max()).digest_hex();
}

EdgeOrderedGraph canonical_graph(const EdgeOrderedGraph& g) { return graph_from_digest_hex(digest_hex(g)); }

std::uint64_t packed_key(const EdgeOrderedGraph& g) {
  const auto key = packed_canonical_key(g);
  if (!key) throw Error(ErrorKind::TooLarge, "ledger hosts are limited to 8 edges");
  return *key;
}

// Reads a ledger, returning the byte length of its well-formed prefix.
std::vector<LedgerEntry> load_ledger(const fs::path& path, std::uintmax_t& good_bytes) {
  good_bytes = 0;
  std::vector<LedgerEntry> out;
  std::ifstream in(path, std::ios::binary);
  if (!in) return out;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    ++line_no;
    const auto nl = text.find('\n', pos);
    const bool last = nl == std::string::npos || nl + 1 == text.size();
    if (nl == std::string::npos) break;  // torn final write
    try {
      out.push_back(parse_ledger_line(std::string_view(text).substr(pos, nl - pos)));
    } catch (const Error&) {
      if (last) break;
      throw Error(ErrorKind::ParseError, path.string() + ": malformed ledger line " + std::to_string(line_no));
    }
    pos = nl + 1;
    good_bytes = pos;
  }
  return out;
}

void write_file_atomically(const fs::path& path, const std::string& content) {
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp);
    out << content;
  }
  fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::vector<ArrowVerdict> evaluate(const std::vector<EdgeOrderedGraph>& hosts, const EdgeOrderedGraph& red,
                                   const EdgeOrderedGraph& blue, const SweepOptions& options) {
  std::vector<ArrowVerdict> out(hosts.size());
  ArrowOptions arrow_options;
  arrow_options.node_budget = options.node_budget;
  const auto threads = std::min(options.threads, hosts.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < hosts.size(); ++i) out[i] = arrows(hosts[i], red, blue, arrow_options);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < threads; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i; !failed && (i = next.fetch_add(1)) < hosts.size();) {
          try {
            out[i] = arrows(hosts[i], red, blue, arrow_options);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            failed = true;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace

std::size_t size_redge_upper(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                             const EdgeOrderedGraph& host, const ArrowOptions& options) {
  const auto verdict = arrows(host, normalized(red, "red"), normalized(blue, "blue"), options);
  if (!verdict.arrows) throw NotAnUpperBoundWitness(*verdict.counterexample);
  return host.edge_count();
}

// ---------------------------------------------------------------------------

std::string ledger_line(const LedgerEntry& entry) {
  json j;
  j["m"] = entry.m;
  j["canon"] = entry.canon;
  j["arrows"] = entry.arrows;
  j["cex"] = entry.cex ? json(*entry.cex) : json(nullptr);
  return j.dump();
}

LedgerEntry parse_ledger_line(std::string_view line) {
  try {
    const auto j = json::parse(line);
    LedgerEntry e;
    e.m = j.at("m").get<std::size_t>();
    e.canon = j.at("canon").get<std::string>();
    e.arrows = j.at("arrows").get<bool>();
    if (!j.at("cex").is_null()) e.cex = j.at("cex").get<std::string>();
    return e;
  } catch (const json::exception& ex) {
    throw Error(ErrorKind::ParseError, std::string("ledger line: ") + ex.what());
  }
}

std::vector<LedgerEntry> read_ledger(const fs::path& path) {
  std::uintmax_t good = 0;
  return load_ledger(path, good);
}

LedgerStore::LedgerStore(fs::path root) : root_(std::move(root)) {
  if (root_.empty()) throw Error(ErrorKind::InvalidParameter, "ledger store needs a directory");
}

fs::path LedgerStore::pair_dir(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue) const {
  return root_ / (digest_hex(red.without_isolated_vertices()) + "__" + digest_hex(blue.without_isolated_vertices()));
}

fs::path LedgerStore::ledger_path(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue, std::size_t m) const {
  return pair_dir(red, blue) / ("m" + std::to_string(m) + ".jsonl");
}

fs::path LedgerStore::cursor_path(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue, std::size_t m) const {
  return pair_dir(red, blue) / ("m" + std::to_string(m) + ".cursor.json");
}

SweepOutcome sweep_level(const EdgeOrderedGraph& red0, const EdgeOrderedGraph& blue0, std::size_t m,
                         const LedgerStore& store, const SweepOptions& options, bool stop_at_arrowing) {
  const auto red = normalized(red0, "red");
  const auto blue = normalized(blue0, "blue");
  const auto& graphs = enumerate_underlying(m);
  const auto total = count_eographs(m);

  const auto path = store.ledger_path(red, blue, m);
  const auto cursor_file = store.cursor_path(red, blue, m);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + path.parent_path().string() + ": " + ec.message());

  std::uintmax_t good_bytes = 0;
  const auto existing = load_ledger(path, good_bytes);
  if (fs::exists(path) && fs::file_size(path) != good_bytes) fs::resize_file(path, good_bytes);

  SweepOutcome out;
  out.ledger.m = m;
  out.ledger.path = path;
  out.ledger.total = total;

  std::vector<std::uint64_t> known;
  known.reserve(existing.size());
  for (const auto& e : existing) {
    if (e.m != m) throw Error(ErrorKind::ParseError, path.string() + ": entry for m=" + std::to_string(e.m));
    const auto g = graph_from_digest_hex(e.canon);
    if (g.edge_count() != m) throw Error(ErrorKind::ParseError, path.string() + ": digest with wrong edge count");
    known.push_back(packed_key(g));
    if (e.arrows) {
      ++out.ledger.arrowing;
      if (!out.first_arrowing) out.first_arrowing = g;
    }
  }
  std::sort(known.begin(), known.end());
  if (std::adjacent_find(known.begin(), known.end()) != known.end()) {
    throw Error(ErrorKind::ParseError, path.string() + ": duplicate digest");
  }
  out.ledger.entries = existing.size();
  auto finish = [&] {
    out.ledger.complete = out.ledger.entries == total;
    return out;
  };
  if ((stop_at_arrowing && out.first_arrowing) || out.ledger.entries == total) return finish();

  EnumCursor cursor;
  cursor.m = m;
  if (fs::exists(cursor_file)) {
    cursor = cursor_from_json(read_file(cursor_file));
    if (cursor.m != m) throw Error(ErrorKind::ParseError, cursor_file.string() + ": cursor for another level");
  }

  std::ofstream ledger_out(path, std::ios::binary | std::ios::app);
  if (!ledger_out) throw Error(ErrorKind::Io, "cannot append to " + path.string());
  std::uint64_t budget = options.max_hosts.value_or(std::numeric_limits<std::uint64_t>::max());

  for (std::size_t u = cursor.underlying_index; u < graphs.size(); ++u) {
    std::vector<EdgeOrderedGraph> todo;
    for_each_edge_order(graphs[u], [&](const EdgeOrderedGraph& h) {
      if (!std::binary_search(known.begin(), known.end(), packed_key(h))) todo.push_back(canonical_graph(h));
      return true;
    });
    bool cut = false;
    if (todo.size() > budget) {
      todo.resize(budget);
      cut = true;
    }
    const auto verdicts = evaluate(todo, red, blue, options);
    bool stop = false;
    for (std::size_t i = 0; i < todo.size(); ++i) {
      LedgerEntry entry;
      entry.m = m;
      entry.canon = digest_hex(todo[i]);
      entry.arrows = verdicts[i].arrows;
      if (verdicts[i].counterexample) entry.cex = verdicts[i].counterexample->to_rb();
      ledger_out << ledger_line(entry) << '\n';
      ++out.ledger.entries;
      ++out.written;
      --budget;
      if (entry.arrows) {
        ++out.ledger.arrowing;
        if (!out.first_arrowing) {
          out.first_arrowing = todo[i];
          if (stop_at_arrowing) {
            stop = true;
            break;
          }
        }
      }
    }
    ledger_out.flush();
    if (!ledger_out) throw Error(ErrorKind::Io, "write failed on " + path.string());
    if (stop) break;
    if (cut) {
      out.interrupted = true;
      break;
    }
    EnumCursor next{m, u + 1, 0, u + 1 >= graphs.size()};
    write_file_atomically(cursor_file, cursor_to_json(next));
    if (options.progress) options.progress(m, out.ledger.entries, total);
    if (budget == 0 && u + 1 < graphs.size()) {
      out.interrupted = true;
      break;
    }
  }
  return finish();
}

// ---------------------------------------------------------------------------

std::string_view to_string(ResultStatus s) {
  switch (s) {
    case ResultStatus::Exact: return "EXACT";
    case ResultStatus::UpperOnly: return "UPPER_ONLY";
    case ResultStatus::Aborted: return "ABORTED";
  }
  return "?";
}

SizeRamseyResult size_redge_exact(const EdgeOrderedGraph& red0, const EdgeOrderedGraph& blue0, std::size_t m_max,
                                  const LedgerStore& store, const SweepOptions& options) {
  if (m_max > kMaxEnumerationEdges) {
    throw Error(ErrorKind::TooLarge, "exact search is limited to hosts with " +
                                         std::to_string(kMaxEnumerationEdges) + " edges");
  }
  if (m_max == 0) throw Error(ErrorKind::InvalidParameter, "m_max must be positive");
  SizeRamseyResult result;
  result.red_pattern = normalized(red0, "red");
  result.blue_pattern = normalized(blue0, "blue");
  auto level_options = options;
  for (std::size_t m = 1; m <= m_max; ++m) {
    const auto outcome = sweep_level(result.red_pattern, result.blue_pattern, m, store, level_options, true);
    result.ledgers.push_back(outcome.ledger);
    if (outcome.first_arrowing) {
      result.value = m;
      result.witness_host = outcome.first_arrowing;
      result.status = ResultStatus::Exact;
      return result;
    }
    if (outcome.interrupted) break;
    if (level_options.max_hosts) *level_options.max_hosts -= outcome.written;
  }
  result.status = ResultStatus::Aborted;
  return result;
}

SizeRamseyResult certify_exact(const EdgeOrderedGraph& red0, const EdgeOrderedGraph& blue0,
                               const EdgeOrderedGraph& witness, const LedgerStore& store,
                               const SweepOptions& options) {
  SizeRamseyResult result;
  result.red_pattern = normalized(red0, "red");
  result.blue_pattern = normalized(blue0, "blue");
  ArrowOptions arrow_options;
  arrow_options.threads = options.threads;
  arrow_options.node_budget = options.node_budget;
  result.value = size_redge_upper(result.red_pattern, result.blue_pattern, witness, arrow_options);
  result.witness_host = witness;
  const auto level = witness.edge_count() - 1;
  if (level == 0) {
    result.status = ResultStatus::Exact;
    return result;
  }
  if (level > kMaxEnumerationEdges) {
    throw Error(ErrorKind::TooLarge, "lower-bound sweeps are limited to " +
                                         std::to_string(kMaxEnumerationEdges) + " edges");
  }
  const auto outcome = sweep_level(result.red_pattern, result.blue_pattern, level, store, options, true);
  result.ledgers.push_back(outcome.ledger);
  if (outcome.first_arrowing) {
    result.value = level;
    result.witness_host = outcome.first_arrowing;
    result.status = ResultStatus::UpperOnly;
  } else {
    result.status = outcome.ledger.complete ? ResultStatus::Exact : ResultStatus::UpperOnly;
  }
  return result;
}

std::string result_json(const SizeRamseyResult& result) {
  json j;
  j["tool_version"] = kToolVersion;
  j["red_pattern"] = serialize_eog(result.red_pattern);
  j["blue_pattern"] = serialize_eog(result.blue_pattern);
  j["status"] = std::string(to_string(result.status));
  j["value"] = result.value ? json(*result.value) : json(nullptr);
  j["witness_host"] = result.witness_host ? json(serialize_eog(*result.witness_host)) : json(nullptr);
  json proof = json::array();
  for (const auto& l : result.ledgers) {
    proof.push_back({{"m", l.m},
                     {"path", l.path.string()},
                     {"entries", l.entries},
                     {"total", l.total},
                     {"arrowing", l.arrowing},
                     {"complete", l.complete}});
  }
  j["lower_bound_proof"] = proof;
  return j.dump(2);
}

bool recheck_result(const SizeRamseyResult& result) {
  if (result.status == ResultStatus::Aborted) return false;
  if (!result.value || !result.witness_host) return false;
  const auto& w = *result.witness_host;
  if (w.edge_count() != *result.value) return false;
  const auto verdict = w.edge_count() <= kNaiveCap ? arrows_naive(w, result.red_pattern, result.blue_pattern)
                                                    : arrows(w, result.red_pattern, result.blue_pattern);
  if (!verdict.arrows) return false;
  if (result.status != ResultStatus::Exact || *result.value == 1) return true;

  const auto level = *result.value - 1;
  const auto it = std::find_if(result.ledgers.begin(), result.ledgers.end(),
                               [&](const SweepLedger& l) { return l.m == level; });
  if (it == result.ledgers.end()) return false;
  const auto entries = read_ledger(it->path);
  if (entries.size() != count_eographs(level)) return false;
  std::unordered_set<std::string> seen;
  for (const auto& e : entries) {
    if (e.m != level || e.arrows || !e.cex || !seen.insert(e.canon).second) return false;
    const auto host = graph_from_digest_hex(e.canon);
    if (host.edge_count() != level || host.has_isolated_vertices() || digest_hex(host) != e.canon) return false;
    const auto coloring = Coloring::from_rb(*e.cex);
    if (coloring.size() != level || !coloring.complete()) return false;
    if (check_coloring(host, coloring, result.red_pattern, result.blue_pattern)) return false;
  }
  return true;
}

}  // namespace reo
