#pragma once

// Brute-force references. Nothing here calls the library's search code;
// only the graph container is shared.

#include "reo/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using reo::Edge;
using reo::EdgeOrderedGraph;
using reo::Rank;
using reo::Vertex;

// Rank of {a,b} in g, or -1.
inline long rank_in(const EdgeOrderedGraph& g, Vertex a, Vertex b) {
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    const auto& e = g.edges()[r];
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) return static_cast<long>(r);
  }
  return -1;
}

inline bool map_works(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern,
                      const std::vector<Vertex>& map) {
  long previous = -1;
  for (const auto& e : pattern.edges()) {
    const long r = rank_in(host, map[e.u], map[e.v]);
    if (r <= previous) return false;
    previous = r;
  }
  return true;
}

// Tries every injective map V(pattern) -> V(host).
inline bool contains(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern) {
  const auto n = host.vertex_count();
  const auto k = pattern.vertex_count();
  if (k > n) return false;
  std::vector<Vertex> map(k);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) return map_works(host, pattern, map);
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      map[i] = v;
      if (self(self, i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// All bijections between the non-isolated vertex sets.
inline bool isomorphic(const EdgeOrderedGraph& g0, const EdgeOrderedGraph& h0) {
  const auto g = g0.without_isolated_vertices();
  const auto h = h0.without_isolated_vertices();
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t r = 0; r < g.edge_count() && ok; ++r) {
      const Edge mapped(perm[g.edges()[r].u], perm[g.edges()[r].v]);
      ok = mapped == h.edges()[r];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline EdgeOrderedGraph color_class(const EdgeOrderedGraph& host, std::uint64_t blue_mask, bool blue) {
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < host.edge_count(); ++r) {
    if (((blue_mask >> r) & 1) == static_cast<std::uint64_t>(blue)) edges.push_back(host.edges()[r]);
  }
  return EdgeOrderedGraph(host.vertex_count(), edges);
}

// Every coloring, checked with the injective-map oracle.
inline bool arrows(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red,
                   const EdgeOrderedGraph& blue) {
  const auto m = host.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (!contains(color_class(host, mask, false), red) && !contains(color_class(host, mask, true), blue)) {
      return false;
    }
  }
  return true;
}

// Isomorphism classes of edge-ordered graphs with m edges and no isolated
// vertices: every ordered m-tuple of distinct edges of K_{2m} whose vertex
// set is an initial segment, deduplicated pairwise with `isomorphic`.
inline std::vector<EdgeOrderedGraph> classes(std::size_t m) {
  const Vertex n = static_cast<Vertex>(2 * m);
  std::vector<Edge> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::vector<EdgeOrderedGraph> reps;
  std::vector<Edge> chosen;
  std::vector<bool> taken(all.size(), false);
  auto rec = [&](auto&& self) -> void {
    if (chosen.size() == m) {
      std::vector<bool> seen(n, false);
      for (const auto& e : chosen) seen[e.u] = seen[e.v] = true;
      const auto used = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
      for (std::size_t v = 0; v < used; ++v) {
        if (!seen[v]) return;
      }
      EdgeOrderedGraph g(used, chosen);
      for (const auto& r : reps) {
        if (isomorphic(r, g)) return;
      }
      reps.push_back(g);
      return;
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (taken[i]) continue;
      taken[i] = true;
      chosen.push_back(all[i]);
      self(self);
      chosen.pop_back();
      taken[i] = false;
    }
  };
  rec(rec);
  return reps;
}

inline EdgeOrderedGraph random_relabel(const EdgeOrderedGraph& g, std::mt19937_64& rng) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

// Random simple graph with m edges on n vertices in a random edge order.
inline EdgeOrderedGraph random_graph(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> all;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) all.emplace_back(a, b);
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min(m, all.size()));
  return EdgeOrderedGraph(n, all);
}

}  // namespace oracle
