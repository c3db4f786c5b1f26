#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>

namespace reo {

namespace {

constexpr Vertex kUnlabeled = std::numeric_limits<Vertex>::max();
constexpr Rank kNever = std::numeric_limits<Rank>::max();

// Labels non-isolated vertices by first appearance along the rank order.
// Returns the number of labels handed out.
std::size_t first_appearance_labels(const EdgeOrderedGraph& g, std::vector<Vertex>& label) {
  const auto n = g.vertex_count();
  std::vector<Rank> first(n, kNever), second(n, kNever);
  for (Rank r = 0; r < g.edge_count(); ++r) {
    for (Vertex x : {g.edge(r).u, g.edge(r).v}) {
      if (first[x] == kNever) {
        first[x] = r;
      } else if (second[x] == kNever) {
        second[x] = r;
      }
    }
  }
  label.assign(n, kUnlabeled);
  Vertex next = 0;
  for (const auto& e : g.edges()) {
    const bool new_u = label[e.u] == kUnlabeled;
    const bool new_v = label[e.v] == kUnlabeled;
    if (new_u && new_v) {
      // Both endpoints debut here, so `second` is the next edge touching each;
      // the ranks differ unless the edge is an isolated component.
      const bool u_first = second[e.u] <= second[e.v];
      label[u_first ? e.u : e.v] = next++;
      label[u_first ? e.v : e.u] = next++;
    } else if (new_u) {
      label[e.u] = next++;
    } else if (new_v) {
      label[e.v] = next++;
    }
  }
  return next;
}

}  // namespace

std::string to_hex(std::string_view bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

std::string CanonicalForm::digest() const {
  const std::size_t width = vertex_count <= 0xff ? 1 : vertex_count <= 0xffff ? 2 : 4;
  std::string out;
  out.reserve(1 + width * (1 + 2 * edges.size()));
  auto put = [&](std::size_t value) {
    for (std::size_t i = width; i-- > 0;) out.push_back(static_cast<char>((value >> (8 * i)) & 0xff));
  };
  out.push_back(static_cast<char>(width));
  put(vertex_count);
  for (const auto& e : edges) {
    put(e.u);
    put(e.v);
  }
  return out;
}

std::string CanonicalForm::digest_hex() const { return to_hex(digest()); }

EdgeOrderedGraph graph_from_digest_hex(std::string_view hex) {
  auto bad = [&] { return Error(ErrorKind::ParseError, "bad digest '" + std::string(hex) + "'"); };
  if (hex.size() % 2 != 0 || hex.empty()) throw bad();
  std::vector<unsigned> bytes;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    unsigned value = 0;
    for (char c : hex.substr(i, 2)) {
      value <<= 4;
      if (c >= '0' && c <= '9') {
        value |= static_cast<unsigned>(c - '0');
      } else if (c >= 'a' && c <= 'f') {
        value |= static_cast<unsigned>(c - 'a' + 10);
      } else {
        throw bad();
      }
    }
    bytes.push_back(value);
  }
  const std::size_t width = bytes[0];
  if ((width != 1 && width != 2 && width != 4) || (bytes.size() - 1) % width != 0) throw bad();
  std::vector<std::size_t> words;
  for (std::size_t i = 1; i < bytes.size(); i += width) {
    std::size_t w = 0;
    for (std::size_t k = 0; k < width; ++k) w = (w << 8) | bytes[i + k];
    words.push_back(w);
  }
  if (words.empty() || words.size() % 2 != 1) throw bad();
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < words.size(); i += 2) {
    edges.emplace_back(static_cast<Vertex>(words[i]), static_cast<Vertex>(words[i + 1]));
  }
  try {
    return EdgeOrderedGraph(words[0], std::move(edges));
  } catch (const Error&) {
    throw bad();
  }
}

CanonicalForm canonical_form(const EdgeOrderedGraph& g, std::size_t vertex_cap) {
  std::vector<Vertex> label;
  CanonicalForm out;
  out.vertex_count = first_appearance_labels(g, label);
  if (out.vertex_count > vertex_cap) {
    throw Error(ErrorKind::TooLarge, std::to_string(out.vertex_count) +
                                         " non-isolated vertices exceed the canonical form cap of " +
                                         std::to_string(vertex_cap));
  }
  out.edges.reserve(g.edge_count());
  for (const auto& e : g.edges()) out.edges.emplace_back(label[e.u], label[e.v]);
  return out;
}

std::optional<std::uint64_t> packed_canonical_key(const EdgeOrderedGraph& g) {
  if (g.edge_count() > 8) return std::nullopt;
  std::vector<Vertex> label;
  if (first_appearance_labels(g, label) > 16) return std::nullopt;
  std::uint64_t key = 0;
  for (std::size_t r = 0; r < g.edge_count(); ++r) {
    const Edge e(label[g.edge(static_cast<Rank>(r)).u], label[g.edge(static_cast<Rank>(r)).v]);
    key |= std::uint64_t{(e.u << 4) | e.v} << (8 * r);
  }
  return key;
}

bool is_isomorphic_eo(const EdgeOrderedGraph& g, const EdgeOrderedGraph& h) {
  if (g.edge_count() != h.edge_count()) return false;
  const auto cap = std::numeric_limits<std::size_t>::max();
  return canonical_form(g, cap) == canonical_form(h, cap);
}

// ---------------------------------------------------------------------------
// Unordered canonical labeling.

namespace {

using Cells = std::vector<std::vector<Vertex>>;

class UnorderedLabeler {
 public:
  explicit UnorderedLabeler(const EdgeOrderedGraph& g) : n_(g.vertex_count()), adj_(n_, 0) {
    for (const auto& e : g.edges()) {
      adj_[e.u] |= std::uint64_t{1} << e.v;
      adj_[e.v] |= std::uint64_t{1} << e.u;
    }
  }

  std::pair<std::vector<std::uint64_t>, std::vector<Vertex>> run() {
    Cells cells(1);
    for (Vertex v = 0; v < n_; ++v) cells[0].push_back(v);
    refine(cells);
    search(cells);
    return {best_rows_, best_labels_};
  }

 private:
  std::uint64_t cell_mask(const std::vector<Vertex>& cell) const {
    std::uint64_t m = 0;
    for (auto v : cell) m |= std::uint64_t{1} << v;
    return m;
  }

  // Splits cells by neighbour counts into every cell until stable. The new
  // cells keep the old cell's position and are sorted by signature, so the
  // result depends only on the isomorphism type of (graph, partition).
  void refine(Cells& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::uint64_t> masks;
      masks.reserve(cells.size());
      for (const auto& c : cells) masks.push_back(cell_mask(c));
      Cells next;
      next.reserve(cells.size());
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<Vertex>> groups;
        for (auto v : cell) {
          std::vector<int> sig(masks.size());
          for (std::size_t c = 0; c < masks.size(); ++c) sig[c] = std::popcount(adj_[v] & masks[c]);
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) changed = true;
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      cells = std::move(next);
    }
  }

  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (adj_[a] & ~bb) == (adj_[b] & ~ba);
  }

  void search(const Cells& cells) {
    const auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      evaluate_leaf(cells);
      return;
    }
    const auto index = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (auto v : *target) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); })) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + index);
      child.push_back({v});
      std::vector<Vertex> rest;
      for (auto w : *target) {
        if (w != v) rest.push_back(w);
      }
      child.push_back(std::move(rest));
      child.insert(child.end(), cells.begin() + index + 1, cells.end());
      refine(child);
      search(child);
    }
  }

  void evaluate_leaf(const Cells& cells) {
    std::vector<Vertex> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<Vertex>(i);
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      std::uint64_t nb = adj_[v];
      while (nb) {
        const auto w = static_cast<Vertex>(std::countr_zero(nb));
        nb &= nb - 1;
        rows[label[v]] |= std::uint64_t{1} << (63 - label[w]);
      }
    }
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labels_ = std::move(label);
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_labels_;
};

}  // namespace

UnorderedCanon unordered_canonical_form(const EdgeOrderedGraph& g) {
  const auto core = g.without_isolated_vertices();
  if (core.vertex_count() > 64) {
    throw Error(ErrorKind::TooLarge, "unordered canonical labeling is limited to 64 vertices");
  }
  UnorderedCanon out;
  out.vertex_count = core.vertex_count();
  if (core.vertex_count() == 0) return out;
  auto [rows, labels] = UnorderedLabeler(core).run();
  out.rows = std::move(rows);
  std::vector<Edge> edges;
  edges.reserve(core.edge_count());
  for (const auto& e : core.edges()) edges.emplace_back(labels[e.u], labels[e.v]);
  std::sort(edges.begin(), edges.end());
  out.graph = EdgeOrderedGraph(core.vertex_count(), std::move(edges));
  return out;
}

}  // namespace reo
