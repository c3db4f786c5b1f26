#include "reo/graph.hpp"

#include "reo/errors.hpp"

#include <algorithm>
#include <set>

namespace reo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::EdgeNotFound: return "EdgeNotFound";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooLargeForExhaustive: return "TooLargeForExhaustive";
    case ErrorKind::IncompleteColoring: return "IncompleteColoring";
    case ErrorKind::Indeterminate: return "Indeterminate";
    case ErrorKind::NotAnUpperBoundWitness: return "NotAnUpperBoundWitness";
    case ErrorKind::ClaimViolated: return "ClaimViolated";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

EdgeOrderedGraph::EdgeOrderedGraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  std::set<Edge> seen;
  for (const auto& e : edges_) {
    if (e.u == e.v) {
      throw Error(ErrorKind::InvalidParameter, "loop at vertex " + std::to_string(e.u));
    }
    if (e.v >= vertex_count_) {
      throw Error(ErrorKind::InvalidParameter,
                  "endpoint " + std::to_string(e.v) + " out of range for " +
                      std::to_string(vertex_count_) + " vertices");
    }
    if (!seen.insert(e).second) {
      throw Error(ErrorKind::InvalidParameter,
                  "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
  }
}

std::optional<Rank> EdgeOrderedGraph::rank_of(Vertex a, Vertex b) const {
  const Edge key(a, b);
  for (std::size_t r = 0; r < edges_.size(); ++r) {
    if (edges_[r] == key) return static_cast<Rank>(r);
  }
  return std::nullopt;
}

std::vector<std::size_t> EdgeOrderedGraph::degrees() const {
  std::vector<std::size_t> deg(vertex_count_, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool EdgeOrderedGraph::has_isolated_vertices() const {
  const auto deg = degrees();
  return std::find(deg.begin(), deg.end(), 0U) != deg.end();
}

EdgeOrderedGraph EdgeOrderedGraph::without_isolated_vertices() const {
  const auto deg = degrees();
  std::vector<Vertex> rename(vertex_count_, 0);
  Vertex next = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (deg[v] > 0) rename[v] = next++;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(rename[e.u], rename[e.v]);
  return EdgeOrderedGraph(next, std::move(out));
}

EdgeOrderedGraph EdgeOrderedGraph::relabeled(std::span<const Vertex> relabel) const {
  if (relabel.size() != vertex_count_) {
    throw Error(ErrorKind::InvalidParameter, "relabeling has wrong length");
  }
  std::vector<bool> hit(vertex_count_, false);
  for (auto x : relabel) {
    if (x >= vertex_count_ || hit[x]) {
      throw Error(ErrorKind::InvalidParameter, "relabeling is not a permutation");
    }
    hit[x] = true;
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.emplace_back(relabel[e.u], relabel[e.v]);
  return EdgeOrderedGraph(vertex_count_, std::move(out));
}

EdgeOrderedGraph EdgeOrderedGraph::edge_subgraph(std::span<const Rank> ranks) const {
  std::vector<Edge> out;
  out.reserve(ranks.size());
  std::optional<Rank> prev;
  for (auto r : ranks) {
    if (r >= edges_.size() || (prev && r <= *prev)) {
      throw Error(ErrorKind::InvalidParameter, "ranks must be strictly increasing and in range");
    }
    out.push_back(edges_[r]);
    prev = r;
  }
  return EdgeOrderedGraph(vertex_count_, std::move(out));
}

EdgeOrderedGraph EdgeOrderedGraph::with_edge_inserted(Edge e, Rank position) const {
  if (position > edges_.size()) {
    throw Error(ErrorKind::InvalidParameter, "insert position out of range");
  }
  auto out = edges_;
  out.insert(out.begin() + position, e);
  const std::size_t n = std::max<std::size_t>(vertex_count_, std::size_t{e.v} + 1);
  return EdgeOrderedGraph(n, std::move(out));
}

EdgeOrderedGraph disjoint_union(std::span<const EdgeOrderedGraph> parts) {
  if (parts.empty()) {
    throw Error(ErrorKind::InvalidParameter, "disjoint_union needs at least one part");
  }
  std::vector<Edge> out;
  Vertex offset = 0;
  for (const auto& part : parts) {
    for (const auto& e : part.edges()) out.emplace_back(e.u + offset, e.v + offset);
    offset += static_cast<Vertex>(part.vertex_count());
  }
  return EdgeOrderedGraph(offset, std::move(out));
}

EdgeOrderedGraph disjoint_copies(const EdgeOrderedGraph& g, std::size_t copies) {
  std::vector<EdgeOrderedGraph> parts(copies, g);
  return disjoint_union(parts);
}

EdgeOrderedGraph delete_edge(const EdgeOrderedGraph& g, Vertex a, Vertex b) {
  const auto r = g.rank_of(a, b);
  if (!r) {
    throw Error(ErrorKind::EdgeNotFound,
                "no edge " + std::to_string(a) + " " + std::to_string(b));
  }
  auto edges = g.edges();
  edges.erase(edges.begin() + *r);
  return EdgeOrderedGraph(g.vertex_count(), std::move(edges));
}

}  // namespace reo
