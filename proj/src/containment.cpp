#include "matcher.hpp"
#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <algorithm>

namespace reo {
namespace detail {

namespace {
constexpr std::size_t kMatrixVertexLimit = 512;
}

HostIndex::HostIndex(const EdgeOrderedGraph& host)
    : vertex_count_(host.vertex_count()), edges_(host.edges()), offsets_(host.vertex_count() + 1, 0) {
  for (const auto& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_[vertex_count_]);
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Ranks are visited in increasing order, so each list comes out sorted.
  for (std::size_t r = 0; r < edges_.size(); ++r) {
    const auto& e = edges_[r];
    incidence_[fill[e.u]++] = {static_cast<Rank>(r), e.v};
    incidence_[fill[e.v]++] = {static_cast<Rank>(r), e.u};
  }
  if (vertex_count_ <= kMatrixVertexLimit) {
    matrix_.assign(vertex_count_ * vertex_count_, kNoRank);
    for (std::size_t r = 0; r < edges_.size(); ++r) {
      const auto& e = edges_[r];
      matrix_[e.u * vertex_count_ + e.v] = static_cast<Rank>(r);
      matrix_[e.v * vertex_count_ + e.u] = static_cast<Rank>(r);
    }
  }
}

Rank HostIndex::rank_between(Vertex a, Vertex b) const {
  if (!matrix_.empty()) return matrix_[a * vertex_count_ + b];
  const auto la = incident(a);
  const auto lb = incident(b);
  const auto& shorter = la.size() <= lb.size() ? la : lb;
  const Vertex target = la.size() <= lb.size() ? b : a;
  for (const auto& inc : shorter) {
    if (inc.neighbor == target) return inc.rank;
  }
  return kNoRank;
}

PatternPlan::PatternPlan(const EdgeOrderedGraph& pattern, Rank first)
    : pattern_vertices_(pattern.vertex_count()) {
  const auto p = pattern.edge_count();
  if (p == 0) return;
  std::vector<bool> placed(p, false);
  std::vector<bool> seen_vertex(pattern.vertex_count(), false);
  std::vector<Rank> order;
  order.reserve(p);
  auto place = [&](Rank i) {
    placed[i] = true;
    order.push_back(i);
    seen_vertex[pattern.edge(i).u] = true;
    seen_vertex[pattern.edge(i).v] = true;
  };
  place(first);
  while (order.size() < p) {
    int best = -1;
    int best_score = -1;
    for (Rank i = 0; i < p; ++i) {
      if (placed[i]) continue;
      const auto& e = pattern.edge(i);
      const int score = int(seen_vertex[e.u]) + int(seen_vertex[e.v]);
      if (score > best_score) {
        best = static_cast<int>(i);
        best_score = score;
      }
    }
    place(static_cast<Rank>(best));
  }

  steps_.reserve(p);
  for (std::size_t s = 0; s < p; ++s) {
    const Rank i = order[s];
    int lower = -1, upper = -1;
    for (std::size_t prior = 0; prior < s; ++prior) {
      const Rank j = order[prior];
      if (j < i && (lower < 0 || j > order[lower])) lower = static_cast<int>(prior);
      if (j > i && (upper < 0 || j < order[upper])) upper = static_cast<int>(prior);
    }
    const auto& e = pattern.edge(i);
    steps_.push_back({i, e.u, e.v, lower, upper});
  }
}

Matcher::Matcher(const HostIndex& host, const PatternPlan& plan)
    : host_(host),
      plan_(plan),
      map_(plan.pattern_vertices(), kNoVertex),
      used_(host.vertex_count(), 0),
      assigned_(plan.pattern_edges(), kNoRank) {}

bool Matcher::find(RankFilter allowed, std::optional<Rank> forced_host_rank, Embedding* out) {
  if (plan_.pattern_edges() == 0) return false;
  if (plan_.pattern_edges() > host_.edge_count()) return false;
  allowed_ = allowed;
  forced_ = forced_host_rank.value_or(kNoRank);
  if (forced_ != kNoRank && (forced_ >= host_.edge_count() || !allowed_.allows(forced_))) return false;
  const bool found = descend(0);
  if (found && out != nullptr) {
    out->vertex_map = map_;
    out->edge_ranks.assign(plan_.pattern_edges(), kNoRank);
    const auto& steps = plan_.steps();
    for (std::size_t s = 0; s < steps.size(); ++s) out->edge_ranks[steps[s].edge] = assigned_[s];
  }
  // Leave the workspace clean for the next query.
  for (auto& v : map_) {
    if (v != kNoVertex) used_[v] = 0;
    v = kNoVertex;
  }
  return found;
}

bool Matcher::try_assign(std::size_t step, Rank r, Vertex x, Vertex y) {
  const auto& s = plan_.steps()[step];
  const bool set_a = map_[s.a] == kNoVertex;
  const bool set_b = map_[s.b] == kNoVertex;
  if (set_a) {
    if (used_[x]) return false;
    map_[s.a] = x;
    used_[x] = 1;
  } else if (map_[s.a] != x) {
    return false;
  }
  if (set_b) {
    if (used_[y]) {
      if (set_a) {
        map_[s.a] = kNoVertex;
        used_[x] = 0;
      }
      return false;
    }
    map_[s.b] = y;
    used_[y] = 1;
  } else if (map_[s.b] != y) {
    if (set_a) {
      map_[s.a] = kNoVertex;
      used_[x] = 0;
    }
    return false;
  }
  assigned_[step] = r;
  if (descend(step + 1)) return true;
  if (set_b) {
    used_[map_[s.b]] = 0;
    map_[s.b] = kNoVertex;
  }
  if (set_a) {
    used_[map_[s.a]] = 0;
    map_[s.a] = kNoVertex;
  }
  return false;
}

bool Matcher::descend(std::size_t step) {
  const auto& steps = plan_.steps();
  if (step == steps.size()) return true;
  const auto& s = steps[step];

  Rank lo = 0;
  Rank hi = static_cast<Rank>(host_.edge_count());
  if (step == 0 && forced_ != kNoRank) {
    lo = forced_;
    hi = forced_ + 1;
  }
  if (s.lower_step >= 0) lo = std::max(lo, assigned_[s.lower_step] + 1);
  if (s.upper_step >= 0) hi = std::min(hi, assigned_[s.upper_step]);
  if (lo >= hi) return false;

  const Vertex ma = map_[s.a];
  const Vertex mb = map_[s.b];
  if (ma != kNoVertex && mb != kNoVertex) {
    const Rank r = host_.rank_between(ma, mb);
    if (r == kNoRank || r < lo || r >= hi || !allowed_.allows(r)) return false;
    assigned_[step] = r;
    return descend(step + 1);
  }
  if (ma != kNoVertex || mb != kNoVertex) {
    const Vertex anchor = ma != kNoVertex ? ma : mb;
    const Vertex loose = ma != kNoVertex ? s.b : s.a;
    const auto inc = host_.incident(anchor);
    auto it = std::lower_bound(inc.begin(), inc.end(), lo,
                               [](const Incidence& x, Rank value) { return x.rank < value; });
    for (; it != inc.end() && it->rank < hi; ++it) {
      if (!allowed_.allows(it->rank) || used_[it->neighbor]) continue;
      map_[loose] = it->neighbor;
      used_[it->neighbor] = 1;
      assigned_[step] = it->rank;
      if (descend(step + 1)) return true;
      used_[it->neighbor] = 0;
      map_[loose] = kNoVertex;
    }
    return false;
  }
  for (Rank r = lo; r < hi; ++r) {
    if (!allowed_.allows(r)) continue;
    const auto& e = host_.edge(r);
    if (used_[e.u] || used_[e.v]) continue;
    if (try_assign(step, r, e.u, e.v)) return true;
    if (try_assign(step, r, e.v, e.u)) return true;
  }
  return false;
}

}  // namespace detail

namespace {

// Isolated pattern vertices go to the lowest unused host vertices.
void place_isolated(const EdgeOrderedGraph& host, Embedding& emb) {
  std::vector<bool> used(host.vertex_count(), false);
  for (auto v : emb.vertex_map) {
    if (v != detail::kNoVertex) used[v] = true;
  }
  Vertex next = 0;
  for (auto& v : emb.vertex_map) {
    if (v != detail::kNoVertex) continue;
    while (used[next]) ++next;
    v = next;
    used[next] = true;
  }
}

Embedding empty_pattern_embedding(std::size_t pattern_vertices) {
  Embedding emb;
  emb.vertex_map.resize(pattern_vertices);
  for (std::size_t i = 0; i < pattern_vertices; ++i) emb.vertex_map[i] = static_cast<Vertex>(i);
  return emb;
}

}  // namespace

bool is_valid_embedding(const EdgeOrderedGraph& host, const EdgeOrderedGraph& pattern,
                        const Embedding& emb) {
  if (emb.vertex_map.size() != pattern.vertex_count()) return false;
  if (emb.edge_ranks.size() != pattern.edge_count()) return false;
  std::vector<bool> hit(host.vertex_count(), false);
  for (auto v : emb.vertex_map) {
    if (v >= host.vertex_count() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t k = 0; k < pattern.edge_count(); ++k) {
    const Rank r = emb.edge_ranks[k];
    if (r >= host.edge_count()) return false;
    if (k > 0 && r <= emb.edge_ranks[k - 1]) return false;
    const auto& pe = pattern.edge(static_cast<Rank>(k));
    if (host.edge(r) != Edge(emb.vertex_map[pe.u], emb.vertex_map[pe.v])) return false;
  }
  return true;
}

std::optional<Embedding> contains_ordered(const EdgeOrderedGraph& host,
                                          const EdgeOrderedGraph& pattern) {
  if (host.vertex_count() < pattern.vertex_count()) return std::nullopt;
  if (pattern.edge_count() == 0) return empty_pattern_embedding(pattern.vertex_count());
  const detail::HostIndex index(host);
  const detail::PatternPlan plan(pattern, 0);
  detail::Matcher matcher(index, plan);
  Embedding emb;
  if (!matcher.find({}, std::nullopt, &emb)) return std::nullopt;
  place_isolated(host, emb);
  return emb;
}

std::optional<Embedding> contains_ordered_using(const EdgeOrderedGraph& host,
                                                const EdgeOrderedGraph& pattern, Rank must_use) {
  if (must_use >= host.edge_count()) {
    throw Error(ErrorKind::InvalidParameter,
                "rank " + std::to_string(must_use) + " out of range for host with " +
                    std::to_string(host.edge_count()) + " edges");
  }
  if (host.vertex_count() < pattern.vertex_count() || pattern.edge_count() == 0) return std::nullopt;
  const detail::HostIndex index(host);
  for (Rank j = 0; j < pattern.edge_count(); ++j) {
    const detail::PatternPlan plan(pattern, j);
    detail::Matcher matcher(index, plan);
    Embedding emb;
    if (matcher.find({}, must_use, &emb)) {
      place_isolated(host, emb);
      return emb;
    }
  }
  return std::nullopt;
}

}  // namespace reo
