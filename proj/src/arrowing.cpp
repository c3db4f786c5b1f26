#include "reo/arrowing.hpp"

#include "matcher.hpp"
#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <atomic>
#include <bit>
#include <mutex>
#include <random>
#include <thread>

namespace reo {

bool Coloring::complete() const {
  for (auto c : colors) {
    if (c == Color::Unassigned) return false;
  }
  return true;
}

Coloring Coloring::flipped() const {
  Coloring out = *this;
  for (auto& c : out.colors) {
    if (c == Color::Red) {
      c = Color::Blue;
    } else if (c == Color::Blue) {
      c = Color::Red;
    }
  }
  return out;
}

std::string Coloring::to_rb() const {
  std::string out;
  out.reserve(colors.size());
  for (auto c : colors) out.push_back(c == Color::Red ? 'R' : c == Color::Blue ? 'B' : '?');
  return out;
}

Coloring Coloring::from_rb(std::string_view rb) {
  Coloring out(rb.size());
  for (std::size_t i = 0; i < rb.size(); ++i) {
    switch (rb[i]) {
      case 'R': out.colors[i] = Color::Red; break;
      case 'B': out.colors[i] = Color::Blue; break;
      case '?': out.colors[i] = Color::Unassigned; break;
      default:
        throw Error(ErrorKind::InvalidParameter, std::string("bad coloring character '") + rb[i] + "'");
    }
  }
  return out;
}

EdgeOrderedGraph Coloring::color_class(const EdgeOrderedGraph& host, Color c) const {
  if (colors.size() != host.edge_count()) {
    throw Error(ErrorKind::InvalidParameter, "coloring length does not match host edge count");
  }
  std::vector<Rank> ranks;
  for (std::size_t r = 0; r < colors.size(); ++r) {
    if (colors[r] == c) ranks.push_back(static_cast<Rank>(r));
  }
  return host.edge_subgraph(ranks);
}

bool check_coloring(const EdgeOrderedGraph& host, const Coloring& coloring,
                    const EdgeOrderedGraph& red_pattern, const EdgeOrderedGraph& blue_pattern) {
  if (!coloring.complete()) {
    throw Error(ErrorKind::IncompleteColoring, "coloring has unassigned edges");
  }
  if (contains_ordered(coloring.color_class(host, Color::Red), red_pattern)) return true;
  return contains_ordered(coloring.color_class(host, Color::Blue), blue_pattern).has_value();
}

namespace {

void require_patterns(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue) {
  if (red.empty() || blue.empty()) {
    throw Error(ErrorKind::InvalidParameter, "patterns must have at least one edge");
  }
}

Coloring uniform_coloring(std::size_t m, Color c) { return Coloring(m, c); }

// One worker's state for the incremental search. Edges are coloured in rank
// order, so a new monochromatic copy must end at the edge just coloured:
// each check forces the pattern's last edge onto that rank.
class ColoringSearch {
 public:
  ColoringSearch(const detail::HostIndex& host, const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                 std::optional<std::uint64_t> budget, const std::atomic<bool>* cancel,
                 std::atomic<std::uint64_t>* shared_nodes)
      : host_(host),
        red_plan_(red, static_cast<Rank>(red.edge_count() - 1)),
        blue_plan_(blue, static_cast<Rank>(blue.edge_count() - 1)),
        red_matcher_(host, red_plan_),
        blue_matcher_(host, blue_plan_),
        red_need_(red.edge_count()),
        blue_need_(blue.edge_count()),
        budget_(budget),
        cancel_(cancel),
        shared_nodes_(shared_nodes),
        colors_(host.edge_count(), Color::Unassigned) {}

  /// Colours rank k; false when that choice completes a forbidden copy.
  bool assign(Rank k, Color c) {
    count_node();
    colors_[k] = c;
    const std::uint64_t bit = std::uint64_t{1} << k;
    if (c == Color::Red) {
      red_ |= bit;
      if (std::popcount(red_) >= static_cast<int>(red_need_) &&
          red_matcher_.find({&red_}, k)) {
        unassign(k);
        return false;
      }
    } else {
      blue_ |= bit;
      if (std::popcount(blue_) >= static_cast<int>(blue_need_) &&
          blue_matcher_.find({&blue_}, k)) {
        unassign(k);
        return false;
      }
    }
    return true;
  }

  void unassign(Rank k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    red_ &= ~bit;
    blue_ &= ~bit;
    colors_[k] = Color::Unassigned;
  }

  /// Completes the colouring from rank k on; true when a counterexample is reached.
  bool extend(Rank k) {
    if (k == host_.edge_count()) return true;
    if (cancel_ != nullptr && cancel_->load(std::memory_order_relaxed)) return false;
    for (Color c : {Color::Red, Color::Blue}) {
      if (!assign(k, c)) continue;
      if (extend(k + 1)) return true;
      unassign(k);
    }
    return false;
  }

  /// Collects every viable colouring of the first `depth` ranks, in search order.
  void collect_prefixes(Rank k, Rank depth, std::vector<std::vector<Color>>& out) {
    if (k == depth) {
      out.emplace_back(colors_.begin(), colors_.begin() + depth);
      return;
    }
    for (Color c : {Color::Red, Color::Blue}) {
      if (!assign(k, c)) continue;
      collect_prefixes(k + 1, depth, out);
      unassign(k);
    }
  }

  /// Loads a prefix produced by collect_prefixes.
  void load_prefix(const std::vector<Color>& prefix) {
    red_ = blue_ = 0;
    std::fill(colors_.begin(), colors_.end(), Color::Unassigned);
    for (std::size_t r = 0; r < prefix.size(); ++r) {
      colors_[r] = prefix[r];
      (prefix[r] == Color::Red ? red_ : blue_) |= std::uint64_t{1} << r;
    }
  }

  Coloring coloring() const {
    Coloring out;
    out.colors = colors_;
    return out;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  void count_node() {
    ++nodes_;
    if (!budget_) return;
    const auto total = shared_nodes_ != nullptr
                           ? shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1
                           : nodes_;
    if (total > *budget_) {
      throw Error(ErrorKind::Indeterminate,
                  "node budget of " + std::to_string(*budget_) + " exhausted");
    }
  }

  const detail::HostIndex& host_;
  detail::PatternPlan red_plan_;
  detail::PatternPlan blue_plan_;
  detail::Matcher red_matcher_;
  detail::Matcher blue_matcher_;
  std::size_t red_need_;
  std::size_t blue_need_;
  std::optional<std::uint64_t> budget_;
  const std::atomic<bool>* cancel_;
  std::atomic<std::uint64_t>* shared_nodes_;
  std::uint64_t red_ = 0;
  std::uint64_t blue_ = 0;
  std::uint64_t nodes_ = 0;
  std::vector<Color> colors_;
};

ArrowVerdict run_parallel(const detail::HostIndex& index, const EdgeOrderedGraph& red,
                          const EdgeOrderedGraph& blue, const ArrowOptions& options) {
  const Rank depth = static_cast<Rank>(std::min(options.split_depth, index.edge_count()));
  std::atomic<std::uint64_t> shared_nodes{0};
  std::vector<std::vector<Color>> prefixes;
  {
    ColoringSearch seed(index, red, blue, options.node_budget, nullptr, &shared_nodes);
    seed.collect_prefixes(0, depth, prefixes);
    if (!options.node_budget) shared_nodes.fetch_add(seed.nodes());
  }

  std::atomic<bool> found{false};
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::optional<Coloring> counterexample;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      ColoringSearch search(index, red, blue, options.node_budget, &found, &shared_nodes);
      while (!found.load(std::memory_order_relaxed)) {
        const auto i = next.fetch_add(1);
        if (i >= prefixes.size()) break;
        search.load_prefix(prefixes[i]);
        if (search.extend(depth)) {
          std::lock_guard lock(mutex);
          if (!counterexample) counterexample = search.coloring();
          found.store(true);
        }
      }
      if (!options.node_budget) shared_nodes.fetch_add(search.nodes(), std::memory_order_relaxed);
    } catch (...) {
      std::lock_guard lock(mutex);
      if (!failure) failure = std::current_exception();
      found.store(true);
    }
  };

  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);

  ArrowVerdict verdict;
  verdict.arrows = !counterexample.has_value();
  verdict.counterexample = std::move(counterexample);
  verdict.nodes_explored = shared_nodes.load();
  return verdict;
}

}  // namespace

ArrowVerdict arrows(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                    const EdgeOrderedGraph& blue_pattern, const ArrowOptions& options) {
  require_patterns(red_pattern, blue_pattern);
  const auto cap = std::min<std::size_t>(options.exhaustive_cap, 64);
  if (host.edge_count() > cap) {
    throw Error(ErrorKind::TooLargeForExhaustive,
                "host has " + std::to_string(host.edge_count()) + " edges, exhaustive cap is " +
                    std::to_string(cap));
  }
  const auto start = std::chrono::steady_clock::now();
  ArrowVerdict verdict;
  const auto m = host.edge_count();
  auto finish = [&](ArrowVerdict v) {
    v.elapsed = std::chrono::steady_clock::now() - start;
    return v;
  };

  // A host without a blue (red) copy is beaten by the all-blue (all-red) colouring.
  if (!contains_ordered(host, blue_pattern)) {
    verdict.counterexample = uniform_coloring(m, Color::Blue);
    verdict.nodes_explored = 1;
    return finish(std::move(verdict));
  }
  if (!contains_ordered(host, red_pattern)) {
    verdict.counterexample = uniform_coloring(m, Color::Red);
    verdict.nodes_explored = 1;
    return finish(std::move(verdict));
  }

  const detail::HostIndex index(host);
  if (options.threads > 1 && m > options.split_depth) {
    return finish(run_parallel(index, red_pattern, blue_pattern, options));
  }
  ColoringSearch search(index, red_pattern, blue_pattern, options.node_budget, nullptr, nullptr);
  if (search.extend(0)) verdict.counterexample = search.coloring();
  verdict.arrows = !verdict.counterexample.has_value();
  verdict.nodes_explored = search.nodes();
  return finish(std::move(verdict));
}

ArrowVerdict arrows_naive(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                          const EdgeOrderedGraph& blue_pattern) {
  require_patterns(red_pattern, blue_pattern);
  const auto m = host.edge_count();
  if (m > kNaiveCap) {
    throw Error(ErrorKind::TooLargeForExhaustive,
                "naive enumeration is limited to " + std::to_string(kNaiveCap) + " edges");
  }
  const auto start = std::chrono::steady_clock::now();
  ArrowVerdict verdict;
  Coloring coloring(m);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (std::size_t r = 0; r < m; ++r) {
      coloring.colors[r] = ((bits >> r) & 1U) ? Color::Blue : Color::Red;
    }
    ++verdict.nodes_explored;
    if (!check_coloring(host, coloring, red_pattern, blue_pattern)) {
      verdict.counterexample = coloring;
      break;
    }
  }
  verdict.arrows = !verdict.counterexample.has_value();
  verdict.elapsed = std::chrono::steady_clock::now() - start;
  return verdict;
}

SampleReport sample_colorings(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                              const EdgeOrderedGraph& blue_pattern, std::uint64_t samples,
                              std::uint64_t seed) {
  require_patterns(red_pattern, blue_pattern);
  if (samples == 0) throw Error(ErrorKind::InvalidParameter, "samples must be at least 1");
  // Raw engine output only: distributions are implementation-defined.
  std::mt19937_64 rng(seed);
  const auto m = host.edge_count();
  SampleReport report;
  report.samples = samples;
  report.seed = seed;
  Coloring coloring(m);
  for (std::uint64_t i = 0; i < samples; ++i) {
    std::uint64_t word = 0;
    for (std::size_t r = 0; r < m; ++r) {
      if (r % 64 == 0) word = rng();
      coloring.colors[r] = ((word >> (r % 64)) & 1U) ? Color::Blue : Color::Red;
    }
    if (!check_coloring(host, coloring, red_pattern, blue_pattern)) {
      ++report.failures;
      if (!report.first_failure) report.first_failure = coloring;
    }
  }
  return report;
}

}  // namespace reo
