#include "reo/errors.hpp"
#include "reo/graph.hpp"

#include <algorithm>
#include <charconv>

namespace reo {

namespace {

void require_positive(std::size_t value, const char* name) {
  if (value == 0) {
    throw Error(ErrorKind::InvalidParameter, std::string(name) + " must be positive");
  }
}

std::vector<std::size_t> parse_numbers(std::string_view text) {
  std::vector<std::size_t> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto token = text.substr(0, comma);
    std::size_t value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw Error(ErrorKind::InvalidParameter, "bad number '" + std::string(token) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

EdgeOrderedGraph family_matching(std::size_t m) {
  require_positive(m, "m");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
  }
  return EdgeOrderedGraph(2 * m, std::move(edges));
}

EdgeOrderedGraph family_path4(int variant) {
  const Edge e1(0, 1), e2(1, 2), e3(2, 3);
  switch (variant) {
    case 1: return EdgeOrderedGraph(4, {e1, e2, e3});
    case 2: return EdgeOrderedGraph(4, {e1, e3, e2});
    case 3: return EdgeOrderedGraph(4, {e2, e1, e3});
    default:
      throw Error(ErrorKind::InvalidParameter,
                  "path4 variant must be 1, 2 or 3, got " + std::to_string(variant));
  }
}

EdgeOrderedGraph family_star(std::size_t n) {
  require_positive(n, "n");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
  return EdgeOrderedGraph(n + 1, std::move(edges));
}

EdgeOrderedGraph family_complete_bipartite(std::size_t s, std::size_t t) {
  require_positive(s, "s");
  require_positive(t, "t");
  std::vector<Edge> edges;
  edges.reserve(s * t);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(s + j));
    }
  }
  return EdgeOrderedGraph(s + t, std::move(edges));
}

EdgeOrderedGraph family_book(std::size_t m, std::size_t n) {
  require_positive(m, "m");
  require_positive(n, "n");
  std::vector<Edge> edges;
  edges.reserve(m * (m - 1) / 2 + m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (std::size_t page = 0; page < n; ++page) {
    for (std::size_t spine = 0; spine < m; ++spine) {
      edges.emplace_back(static_cast<Vertex>(m + page), static_cast<Vertex>(spine));
    }
  }
  return EdgeOrderedGraph(m + n, std::move(edges));
}

EdgeOrderedGraph family_cycle(std::size_t n, std::span<const Rank> rank_of) {
  if (n < 3) throw Error(ErrorKind::InvalidParameter, "cycle needs n >= 3");
  if (rank_of.size() != n) {
    throw Error(ErrorKind::InvalidParameter, "cycle rank list must have n entries");
  }
  std::vector<Edge> edges(n);
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Rank r = rank_of[i];
    if (r >= n || used[r]) {
      throw Error(ErrorKind::InvalidParameter, "cycle ranks must be a permutation of 0..n-1");
    }
    used[r] = true;
    edges[r] = Edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return EdgeOrderedGraph(n, std::move(edges));
}

static EdgeOrderedGraph family_complete(std::size_t n) {
  require_positive(n, "n");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return EdgeOrderedGraph(n, std::move(edges));
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Matching: return "matching";
    case Family::Path4: return "path4";
    case Family::Star: return "star";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Book: return "book";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
  }
  return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
  if (name == "matching") return Family::Matching;
  if (name == "path4") return Family::Path4;
  if (name == "star") return Family::Star;
  if (name == "complete-bipartite" || name == "kbip") return Family::CompleteBipartite;
  if (name == "book") return Family::Book;
  if (name == "cycle") return Family::Cycle;
  if (name == "complete") return Family::Complete;
  return std::nullopt;
}

EdgeOrderedGraph make_family(const FamilyParams& p) {
  switch (p.family) {
    case Family::Matching: return family_matching(p.m);
    case Family::Path4: return family_path4(p.variant);
    case Family::Star: return family_star(p.n);
    case Family::CompleteBipartite: return family_complete_bipartite(p.s, p.t);
    case Family::Book: return family_book(p.m, p.n);
    case Family::Complete: return family_complete(p.n);
    case Family::Cycle: {
      if (p.ranks.empty()) {
        std::vector<Rank> identity(p.n);
        for (std::size_t i = 0; i < p.n; ++i) identity[i] = static_cast<Rank>(i);
        return family_cycle(p.n, identity);
      }
      return family_cycle(p.n, p.ranks);
    }
  }
  throw Error(ErrorKind::InvalidParameter, "unknown family");
}

FamilyParams parse_family_expression(std::string_view text) {
  const auto colon = text.find(':');
  const auto name = text.substr(0, colon);
  const auto family = family_from_string(name);
  if (!family || colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidParameter, "bad family expression '" + std::string(text) + "'");
  }
  auto rest = text.substr(colon + 1);
  std::string_view extra;
  if (const auto second = rest.find(':'); second != std::string_view::npos) {
    extra = rest.substr(second + 1);
    rest = rest.substr(0, second);
  }
  const auto nums = parse_numbers(rest);
  auto expect = [&](std::size_t count) {
    if (nums.size() != count) {
      throw Error(ErrorKind::InvalidParameter,
                  std::string(name) + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  FamilyParams p;
  p.family = *family;
  switch (*family) {
    case Family::Matching: expect(1); p.m = nums[0]; break;
    case Family::Path4: expect(1); p.variant = static_cast<int>(nums[0]); break;
    case Family::Star:
    case Family::Complete: expect(1); p.n = nums[0]; break;
    case Family::CompleteBipartite: expect(2); p.s = nums[0]; p.t = nums[1]; break;
    case Family::Book: expect(2); p.m = nums[0]; p.n = nums[1]; break;
    case Family::Cycle:
      expect(1);
      p.n = nums[0];
      if (!extra.empty()) {
        for (auto r : parse_numbers(extra)) p.ranks.push_back(static_cast<Rank>(r));
      }
      break;
  }
  if (!extra.empty() && *family != Family::Cycle) {
    throw Error(ErrorKind::InvalidParameter, "only cycle takes a rank list");
  }
  return p;
}

namespace {

u128 checked_mul(u128 a, u128 b) {
  u128 out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "book host edge count exceeds 128 bits");
  }
  return out;
}

u128 checked_add(u128 a, u128 b) {
  u128 out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::Overflow, "book host edge count exceeds 128 bits");
  }
  return out;
}

u128 pow2(std::uint64_t k) {
  if (k >= 128) throw Error(ErrorKind::Overflow, "2^" + std::to_string(k) + " exceeds 128 bits");
  return static_cast<u128>(1) << k;
}

}  // namespace

u128 book_host_edge_count(std::uint64_t m, std::uint64_t n) {
  if (m == 0 || n == 0) throw Error(ErrorKind::InvalidParameter, "m and n must be positive");
  // Spine of 2mn vertices, 2^{m+1} n pages.
  const u128 spine = checked_mul(checked_mul(2, m), n);
  const u128 pages = checked_mul(pow2(m + 1), n);
  const u128 spine_edges = checked_mul(spine, spine - 1) / 2;
  const u128 direct = checked_add(spine_edges, checked_mul(spine, pages));

  // (2m^2 + m 2^{m+2}) n^2 - mn
  const u128 coeff = checked_add(checked_mul(checked_mul(2, m), m), checked_mul(m, pow2(m + 2)));
  const u128 expanded = checked_mul(coeff, checked_mul(n, n)) - checked_mul(m, n);
  if (direct != expanded) {
    throw Error(ErrorKind::ClaimViolated, "book host edge count closed forms disagree");
  }
  return direct;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace reo
