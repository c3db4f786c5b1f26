#pragma once

// Backtracking engine for order-preserving subgraph search. Shared by the
// public containment queries and the arrowing search, which reuses one
// Matcher per pattern to avoid allocation in its inner loop.

#include "reo/graph.hpp"
#include "reo/iso.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace reo::detail {

inline constexpr Rank kNoRank = std::numeric_limits<Rank>::max();
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

struct Incidence {
  Rank rank;
  Vertex neighbor;
};

class HostIndex {
 public:
  explicit HostIndex(const EdgeOrderedGraph& host);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(Rank r) const { return edges_[r]; }

  /// Incident edges of v sorted by rank.
  std::span<const Incidence> incident(Vertex v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }

  Rank rank_between(Vertex a, Vertex b) const;

 private:
  std::size_t vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Incidence> incidence_;
  std::vector<Rank> matrix_;  // empty for large hosts
};

/// Which host ranks a search may use. Null words means every rank.
struct RankFilter {
  const std::uint64_t* words = nullptr;

  bool allows(Rank r) const { return words == nullptr || ((words[r >> 6] >> (r & 63)) & 1U); }
};

/// Visiting order for pattern edges plus the neighbours in rank order that
/// bound each step's admissible host-rank window.
class PatternPlan {
 public:
  /// `first` is the pattern edge searched first (the forced edge for
  /// must-use queries); remaining edges follow greedily by connectivity.
  PatternPlan(const EdgeOrderedGraph& pattern, Rank first);

  struct Step {
    Rank edge;
    Vertex a;
    Vertex b;
    int lower_step;  // step holding the nearest smaller-rank pattern edge, or -1
    int upper_step;  // nearest larger-rank pattern edge already placed, or -1
  };

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t pattern_vertices() const { return pattern_vertices_; }
  std::size_t pattern_edges() const { return steps_.size(); }
  Rank first_edge() const { return steps_.empty() ? 0 : steps_.front().edge; }

 private:
  std::vector<Step> steps_;
  std::size_t pattern_vertices_ = 0;
};

class Matcher {
 public:
  Matcher(const HostIndex& host, const PatternPlan& plan);

  /// Searches for a copy; when `forced_host_rank` is set the plan's first
  /// pattern edge must land exactly there.
  bool find(RankFilter allowed, std::optional<Rank> forced_host_rank, Embedding* out = nullptr);

 private:
  bool descend(std::size_t step);
  bool try_assign(std::size_t step, Rank r, Vertex x, Vertex y);

  const HostIndex& host_;
  const PatternPlan& plan_;
  RankFilter allowed_;
  Rank forced_ = kNoRank;
  std::vector<Vertex> map_;
  std::vector<std::uint8_t> used_;
  std::vector<Rank> assigned_;
};

}  // namespace reo::detail
