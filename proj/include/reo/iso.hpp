#pragma once

// Order-preserving containment, edge-ordered isomorphism and canonical forms.

#include "reo/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace reo {

/// Witness that `pattern` sits inside `host` as an edge-ordered subgraph.
/// Pattern edge of rank k lands on host rank edge_ranks[k]; the ranks
/// strictly increase.
struct Embedding {
  std::vector<Vertex> vertex_map;
  std::vector<Rank> edge_ranks;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Independent re-check of both embedding invariants.
bool is_valid_embedding(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern,
                        const Embedding& embedding);

/// First order-preserving copy of `pattern` in `host`, if any. Isolated
/// pattern vertices are mapped onto unused host vertices.
std::optional<Embedding> contains_ordered(const EdgeOrderedGraph& host,
                                          const EdgeOrderedGraph& pattern);

/// As contains_ordered, restricted to copies that use host edge `must_use`.
std::optional<Embedding> contains_ordered_using(const EdgeOrderedGraph& host,
                                                const EdgeOrderedGraph& pattern, Rank must_use);

/// Complete invariant for edge-ordered isomorphism. Isolated vertices are
/// ignored. Vertices are renamed in order of first appearance along the
/// rank sequence; since isomorphisms must map rank r to rank r, the only
/// freedom is at edges introducing two new vertices, resolved by which
/// endpoint reappears first (the two are interchangeable when neither does).
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  /// Injective byte encoding of (vertex_count, edges).
  std::string digest() const;
  std::string digest_hex() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Inverse of CanonicalForm::digest_hex: the canonical representative.
/// Throws ParseError on malformed input.
EdgeOrderedGraph graph_from_digest_hex(std::string_view hex);

inline constexpr std::size_t kDefaultCanonicalVertexCap = 64;

/// Throws TooLarge when the non-isolated vertex count exceeds `vertex_cap`.
CanonicalForm canonical_form(const EdgeOrderedGraph& g,
                             std::size_t vertex_cap = kDefaultCanonicalVertexCap);

/// Canonical form packed into 64 bits; available when the graph has at most
/// 8 edges and 16 non-isolated vertices.
std::optional<std::uint64_t> packed_canonical_key(const EdgeOrderedGraph& g);

bool is_isomorphic_eo(const EdgeOrderedGraph& g, const EdgeOrderedGraph& h);

/// Canonical labeling of the underlying (unordered) graph, isolated vertices
/// dropped. Individualization/refinement over equitable partitions, keeping
/// the lexicographically smallest row-major adjacency matrix; twin vertices
/// are tried once per cell.
struct UnorderedCanon {
  std::size_t vertex_count = 0;
  std::vector<std::uint64_t> rows;  // column j at bit 63-j
  /// Graph relabeled canonically with edges sorted lexicographically.
  EdgeOrderedGraph graph;

  friend bool operator==(const UnorderedCanon& a, const UnorderedCanon& b) {
    return a.vertex_count == b.vertex_count && a.rows == b.rows;
  }
  friend bool operator<(const UnorderedCanon& a, const UnorderedCanon& b) {
    if (a.vertex_count != b.vertex_count) return a.vertex_count < b.vertex_count;
    return a.rows < b.rows;
  }
};

UnorderedCanon unordered_canonical_form(const EdgeOrderedGraph& g);

std::string to_hex(std::string_view bytes);

}  // namespace reo
