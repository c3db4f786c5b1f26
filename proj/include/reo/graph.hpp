#pragma once

// Edge-ordered graphs. The position of an edge in the edge sequence is its
// rank in the linear order, so ranks are always 0..edge_count()-1.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reo {

using Vertex = std::uint32_t;
using Rank = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool touches(Vertex x) const { return u == x || v == x; }
  Vertex other(Vertex x) const { return x == u ? v : u; }
  bool shares_vertex(const Edge& e) const { return touches(e.u) || touches(e.v); }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class EdgeOrderedGraph {
 public:
  EdgeOrderedGraph() = default;

  /// Validates: endpoints in range, no loops, no repeated pair.
  EdgeOrderedGraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(Rank r) const { return edges_.at(r); }

  std::optional<Rank> rank_of(Vertex a, Vertex b) const;
  std::vector<std::size_t> degrees() const;
  bool has_isolated_vertices() const;

  /// Drops isolated vertices; surviving vertices keep their relative order.
  EdgeOrderedGraph without_isolated_vertices() const;

  /// `relabel[v]` is the new name of v; must be a permutation of 0..n-1.
  EdgeOrderedGraph relabeled(std::span<const Vertex> relabel) const;

  /// Edges at `ranks` (strictly increasing) with ranks compacted; all vertices kept.
  EdgeOrderedGraph edge_subgraph(std::span<const Rank> ranks) const;

  /// Inserts `e` so that it receives rank `position`; later ranks shift up.
  EdgeOrderedGraph with_edge_inserted(Edge e, Rank position) const;

  friend bool operator==(const EdgeOrderedGraph&, const EdgeOrderedGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
};

// Named families.

EdgeOrderedGraph family_matching(std::size_t m);
/// variant 1: e1<e2<e3, 2: e1<e3<e2, 3: e2<e1<e3 on the path 0-1-2-3.
EdgeOrderedGraph family_path4(int variant);
/// Center 0, leaf i joined at rank i-1.
EdgeOrderedGraph family_star(std::size_t n);
/// Parts {0..s-1} and {s..s+t-1}, edges in lexicographic (left, right) order.
EdgeOrderedGraph family_complete_bipartite(std::size_t s, std::size_t t);
/// Spine K_m on 0..m-1, pages m..m+n-1. Spine edges first (lexicographic),
/// then page edges ordered by (page, spine vertex).
EdgeOrderedGraph family_book(std::size_t m, std::size_t n);
/// Cycle 0-1-...-(n-1)-0; the i-th cycle edge (i, i+1 mod n) gets rank `rank_of[i]`.
EdgeOrderedGraph family_cycle(std::size_t n, std::span<const Rank> rank_of);

/// Parts placed on disjoint vertex ranges; all edges of part i precede part i+1.
EdgeOrderedGraph disjoint_union(std::span<const EdgeOrderedGraph> parts);
EdgeOrderedGraph disjoint_copies(const EdgeOrderedGraph& g, std::size_t copies);

/// Removes edge {a,b}, compacting ranks. Isolated vertices stay.
EdgeOrderedGraph delete_edge(const EdgeOrderedGraph& g, Vertex a, Vertex b);

enum class Family { Matching, Path4, Star, CompleteBipartite, Book, Cycle, Complete };

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// Routing record for the family constructors. Unused fields are ignored.
struct FamilyParams {
  Family family = Family::Matching;
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  std::size_t t = 0;
  int variant = 0;
  std::vector<Rank> ranks;  // cycle only; empty means identity
};

EdgeOrderedGraph make_family(const FamilyParams& params);

/// Parses compact family expressions such as "matching:2", "path4:3",
/// "star:4", "kbip:2,3", "book:3,2", "cycle:5" or "cycle:5:4,3,2,1,0", "complete:4".
FamilyParams parse_family_expression(std::string_view text);

using u128 = unsigned __int128;

/// Edge count of the book host built from B_{2mn, 2^{m+1} n}; cross-checked
/// against its expanded closed form before returning.
u128 book_host_edge_count(std::uint64_t m, std::uint64_t n);
std::string to_string(u128 value);

// EOG text format.

EdgeOrderedGraph parse_eog(std::string_view text);
std::string serialize_eog(const EdgeOrderedGraph& g);
EdgeOrderedGraph read_eog_file(const std::string& path);

}  // namespace reo
