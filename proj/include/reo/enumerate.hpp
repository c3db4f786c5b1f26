#pragma once

// Every edge-ordered graph with m edges and no isolated vertices, one per
// isomorphism class, in a fixed deterministic order.

#include "reo/graph.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace reo {

inline constexpr std::size_t kMaxEnumerationEdges = 8;

/// Isomorphism classes of simple graphs with m edges and minimum degree >= 1,
/// each canonically labeled with lexicographically sorted edges, ordered by
/// canonical form. Built by edge augmentation from m-1.
const std::vector<EdgeOrderedGraph>& enumerate_underlying(std::size_t m);

/// One representative per orbit of the m! edge orders of `g` under Aut(g),
/// in order of first appearance along lexicographic permutation order.
std::vector<EdgeOrderedGraph> enumerate_edge_orders(const EdgeOrderedGraph& g);

/// Calls `visit` per representative; returning false stops early. Returns
/// the number visited.
std::size_t for_each_edge_order(const EdgeOrderedGraph& g,
                                const std::function<bool(const EdgeOrderedGraph&)>& visit);

struct EnumCursor {
  std::size_t m = 0;
  std::size_t underlying_index = 0;
  std::size_t order_index = 0;
  bool exhausted = false;

  friend bool operator==(const EnumCursor&, const EnumCursor&) = default;
};

std::string cursor_to_json(const EnumCursor& cursor);
EnumCursor cursor_from_json(const std::string& text);

/// Resumable stream over enumerate_underlying(m) x enumerate_edge_orders.
class EdgeOrderedEnumerator {
 public:
  explicit EdgeOrderedEnumerator(std::size_t m, EnumCursor start = {});

  /// Next graph, or nullopt once exhausted.
  std::optional<EdgeOrderedGraph> next();

  /// Position of the next graph to be returned.
  const EnumCursor& cursor() const { return cursor_; }

  /// Index of the underlying graph the last returned graph came from.
  std::size_t last_underlying_index() const { return last_underlying_; }

 private:
  void load_orders();

  EnumCursor cursor_;
  std::vector<EdgeOrderedGraph> orders_;
  std::size_t loaded_for_ = static_cast<std::size_t>(-1);
  std::size_t last_underlying_ = 0;
};

/// Number of edge permutations induced by automorphisms of g.
std::uint64_t edge_automorphism_count(const EdgeOrderedGraph& g);

/// Total class count for m (memoised), by orbit counting over the
/// underlying graphs rather than by walking the order stream.
std::size_t count_eographs(std::size_t m);

}  // namespace reo
