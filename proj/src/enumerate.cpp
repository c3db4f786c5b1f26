#include "reo/enumerate.hpp"

#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace reo {

namespace {

void check_edge_count(std::size_t m) {
  if (m < 1 || m > kMaxEnumerationEdges) {
    throw Error(ErrorKind::TooLarge, "enumeration supports 1 to " + std::to_string(kMaxEnumerationEdges) +
                                         " edges, got " + std::to_string(m));
  }
}

std::mutex g_levels_mutex;
std::array<std::unique_ptr<std::vector<EdgeOrderedGraph>>, kMaxEnumerationEdges + 1> g_levels;
std::array<std::size_t, kMaxEnumerationEdges + 1> g_counts{};

// Children of g by one edge: a chord between existing vertices, a pendant
// edge to a new vertex, or a new K2 component.
template <typename Visit>
void augmentations(const EdgeOrderedGraph& g, Visit&& visit) {
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
  auto with = [&](std::size_t vertices, Edge extra) {
    auto edges = g.edges();
    edges.push_back(extra);
    visit(EdgeOrderedGraph(vertices, std::move(edges)));
  };
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      if (!adjacent[i][j]) with(n, Edge(i, j));
    }
  }
  for (Vertex i = 0; i < n; ++i) with(n + 1, Edge(i, n));
  with(n + 2, Edge(n, n + 1));
}

const std::vector<EdgeOrderedGraph>& level_locked(std::size_t m) {
  if (g_levels[m]) return *g_levels[m];
  std::vector<EdgeOrderedGraph> parents;
  if (m == 1) {
    parents.emplace_back();
  } else {
    parents = level_locked(m - 1);
  }
  std::map<UnorderedCanon, EdgeOrderedGraph> seen;
  for (const auto& parent : parents) {
    augmentations(parent, [&](const EdgeOrderedGraph& child) {
      auto canon = unordered_canonical_form(child);
      if (!seen.contains(canon)) {
        auto graph = canon.graph;
        seen.emplace(std::move(canon), std::move(graph));
      }
    });
  }
  auto out = std::make_unique<std::vector<EdgeOrderedGraph>>();
  out->reserve(seen.size());
  for (auto& [canon, graph] : seen) out->push_back(std::move(graph));
  g_levels[m] = std::move(out);
  return *g_levels[m];
}

// Visits the first permutation of each packed-key class; perm[r] is the
// underlying edge placed at rank r.
template <typename Visit>
std::size_t for_each_order_key(const EdgeOrderedGraph& g, Visit&& visit) {
  const auto m = g.edge_count();
  if (m > kMaxEnumerationEdges) {
    throw Error(ErrorKind::TooLarge, "edge order enumeration supports at most " +
                                         std::to_string(kMaxEnumerationEdges) + " edges");
  }
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> edges(m, Edge(0, 1));
  std::unordered_set<std::uint64_t> seen;
  std::size_t visited = 0;
  do {
    for (std::size_t r = 0; r < m; ++r) edges[r] = g.edge(static_cast<Rank>(perm[r]));
    EdgeOrderedGraph ordered(g.vertex_count(), edges);
    const auto key = packed_canonical_key(ordered);
    if (!key) throw Error(ErrorKind::TooLarge, "graph too large for packed canonical keys");
    if (seen.insert(*key).second) {
      ++visited;
      if (!visit(ordered)) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return visited;
}

}  // namespace

const std::vector<EdgeOrderedGraph>& enumerate_underlying(std::size_t m) {
  check_edge_count(m);
  std::lock_guard lock(g_levels_mutex);
  return level_locked(m);
}

std::size_t for_each_edge_order(const EdgeOrderedGraph& g,
                                const std::function<bool(const EdgeOrderedGraph&)>& visit) {
  return for_each_order_key(g, visit);
}

std::vector<EdgeOrderedGraph> enumerate_edge_orders(const EdgeOrderedGraph& g) {
  std::vector<EdgeOrderedGraph> out;
  for_each_order_key(g, [&](const EdgeOrderedGraph& h) {
    out.push_back(h);
    return true;
  });
  return out;
}

namespace {

// Automorphisms of a graph, counted by extending degree-preserving partial maps.
std::uint64_t automorphism_count(const EdgeOrderedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adjacent[e.u][e.v] = adjacent[e.v][e.u] = true;
  const auto degree = g.degrees();
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::uint64_t count = 0;
  auto extend = [&](auto&& self, std::size_t v) -> void {
    if (v == n) {
      ++count;
      return;
    }
    for (std::size_t w = 0; w < n; ++w) {
      if (used[w] || degree[w] != degree[v]) continue;
      bool ok = true;
      for (std::size_t u = 0; u < v && ok; ++u) ok = adjacent[u][v] == adjacent[image[u]][w];
      if (!ok) continue;
      used[w] = true;
      image[v] = w;
      self(self, v + 1);
      used[w] = false;
    }
  };
  extend(extend, 0);
  return count;
}

std::vector<EdgeOrderedGraph> components(const EdgeOrderedGraph& g) {
  const auto n = g.vertex_count();
  std::vector<std::size_t> root(n);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](std::size_t v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const auto& e : g.edges()) root[find(e.u)] = find(e.v);
  std::map<std::size_t, std::vector<Rank>> ranks;
  for (Rank r = 0; r < g.edge_count(); ++r) ranks[find(g.edge(r).u)].push_back(r);
  std::vector<EdgeOrderedGraph> out;
  for (const auto& [_, rs] : ranks) out.push_back(g.edge_subgraph(rs).without_isolated_vertices());
  return out;
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::uint64_t edge_automorphism_count(const EdgeOrderedGraph& g) {
  // Automorphisms of a connected graph with two or more edges act faithfully
  // on edges; a K2 component contributes only its endpoint swap, which fixes
  // the edge. Isomorphic components may also be permuted among themselves.
  std::map<UnorderedCanon, std::pair<std::uint64_t, std::size_t>> classes;
  for (const auto& c : components(g.without_isolated_vertices())) {
    auto& [aut, copies] = classes[unordered_canonical_form(c)];
    aut = c.edge_count() == 1 ? 1 : automorphism_count(c);
    ++copies;
  }
  std::uint64_t total = 1;
  for (const auto& [_, entry] : classes) {
    for (std::size_t i = 0; i < entry.second; ++i) total *= entry.first;
    total *= factorial(entry.second);
  }
  return total;
}

std::size_t count_eographs(std::size_t m) {
  const auto& graphs = enumerate_underlying(m);
  {
    std::lock_guard lock(g_levels_mutex);
    if (g_counts[m]) return g_counts[m];
  }
  // Orbit counting: only the identity fixes an edge order, so each
  // underlying graph carries m!/|edge automorphisms| classes.
  std::size_t total = 0;
  for (const auto& g : graphs) total += factorial(m) / edge_automorphism_count(g);
  std::lock_guard lock(g_levels_mutex);
  g_counts[m] = total;
  return total;
}

std::string cursor_to_json(const EnumCursor& cursor) {
  nlohmann::json j;
  j["m"] = cursor.m;
  j["underlying_index"] = cursor.underlying_index;
  j["order_index"] = cursor.order_index;
  return j.dump();
}

EnumCursor cursor_from_json(const std::string& text) {
  EnumCursor cursor;
  try {
    const auto j = nlohmann::json::parse(text);
    cursor.m = j.at("m").get<std::size_t>();
    cursor.underlying_index = j.at("underlying_index").get<std::size_t>();
    cursor.order_index = j.at("order_index").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("cursor: ") + e.what());
  }
  check_edge_count(cursor.m);
  cursor.exhausted = cursor.underlying_index >= enumerate_underlying(cursor.m).size();
  return cursor;
}

EdgeOrderedEnumerator::EdgeOrderedEnumerator(std::size_t m, EnumCursor start) : cursor_(start) {
  check_edge_count(m);
  if (start.m != 0 && start.m != m) {
    throw Error(ErrorKind::InvalidParameter, "cursor belongs to a different edge count");
  }
  cursor_.m = m;
  cursor_.exhausted = cursor_.underlying_index >= enumerate_underlying(m).size();
}

void EdgeOrderedEnumerator::load_orders() {
  if (loaded_for_ == cursor_.underlying_index) return;
  orders_ = enumerate_edge_orders(enumerate_underlying(cursor_.m)[cursor_.underlying_index]);
  loaded_for_ = cursor_.underlying_index;
}

std::optional<EdgeOrderedGraph> EdgeOrderedEnumerator::next() {
  const auto& graphs = enumerate_underlying(cursor_.m);
  while (!cursor_.exhausted) {
    load_orders();
    if (cursor_.order_index < orders_.size()) {
      auto out = orders_[cursor_.order_index++];
      last_underlying_ = cursor_.underlying_index;
      if (cursor_.order_index == orders_.size()) {
        ++cursor_.underlying_index;
        cursor_.order_index = 0;
        cursor_.exhausted = cursor_.underlying_index >= graphs.size();
      }
      return out;
    }
    ++cursor_.underlying_index;
    cursor_.order_index = 0;
    cursor_.exhausted = cursor_.underlying_index >= graphs.size();
  }
  return std::nullopt;
}

}  // namespace reo
