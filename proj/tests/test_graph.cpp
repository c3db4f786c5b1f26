#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "reo/errors.hpp"
#include "reo/graph.hpp"
#include "reo/iso.hpp"

#include <random>
#include <set>

using namespace reo;

namespace {

std::vector<Edge> E(std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> out;
  for (auto [a, b] : pairs) out.emplace_back(a, b);
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::Io;
}

void check_invariants(const EdgeOrderedGraph& g) {
  std::set<Edge> seen;
  for (const auto& e : g.edges()) {
    CHECK(e.u < e.v);
    CHECK(e.v < g.vertex_count());
    CHECK(seen.insert(e).second);
  }
}

}  // namespace

TEST_CASE("graph construction validates") {
  CHECK(kind_of([] { EdgeOrderedGraph(2, E({{0, 0}})); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { EdgeOrderedGraph(2, E({{0, 2}})); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { EdgeOrderedGraph(3, E({{0, 1}, {1, 0}})); }) == ErrorKind::InvalidParameter);
  const EdgeOrderedGraph g(3, E({{2, 1}}));
  CHECK(g.edge(0) == Edge(1, 2));
  CHECK(g.edge(0).u == 1);
}

TEST_CASE("matching") {
  CHECK(family_matching(1) == EdgeOrderedGraph(2, E({{0, 1}})));
  CHECK(family_matching(2) == EdgeOrderedGraph(4, E({{0, 1}, {2, 3}})));
  const auto m3 = family_matching(3);
  CHECK(m3.vertex_count() == 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) CHECK_FALSE(m3.edges()[i].shares_vertex(m3.edges()[j]));
  }
  CHECK(kind_of([] { family_matching(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("path4 variants") {
  CHECK(family_path4(1).edges() == E({{0, 1}, {1, 2}, {2, 3}}));
  CHECK(family_path4(2).edges() == E({{0, 1}, {2, 3}, {1, 2}}));
  CHECK(family_path4(3).edges() == E({{1, 2}, {0, 1}, {2, 3}}));
  CHECK(kind_of([] { family_path4(0); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { family_path4(4); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("star") {
  CHECK(family_star(1) == EdgeOrderedGraph(2, E({{0, 1}})));
  CHECK(family_star(2).edges() == E({{0, 1}, {0, 2}}));
  const auto s3 = family_star(3);
  for (Rank r = 0; r < 3; ++r) CHECK(s3.edge(r) == Edge(0, r + 1));
  CHECK(kind_of([] { family_star(0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("complete bipartite") {
  CHECK(family_complete_bipartite(1, 3) == family_star(3));
  CHECK(family_complete_bipartite(2, 2).edges() == E({{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
  const auto k23 = family_complete_bipartite(2, 3);
  CHECK(k23.edge_count() == 6);
  for (Rank r = 0; r < 3; ++r) CHECK(k23.edge(r).touches(0));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_isomorphic_eo(family_complete_bipartite(1, n), family_star(n)));
  CHECK(kind_of([] { family_complete_bipartite(0, 2); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("book") {
  CHECK(is_isomorphic_eo(family_book(1, 3), family_star(3)));
  CHECK(family_book(2, 1).edges() == E({{0, 1}, {0, 2}, {1, 2}}));
  const auto b = family_book(3, 2);
  CHECK(b.edges() == E({{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}, {0, 4}, {1, 4}, {2, 4}}));
  for (std::size_t m = 1; m <= 8; ++m) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto g = family_book(m, n);
      CHECK(g.edge_count() == m * (m - 1) / 2 + m * n);
      check_invariants(g);
    }
  }
  CHECK(kind_of([] { family_book(0, 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("cycle") {
  const std::vector<Rank> id5{0, 1, 2, 3, 4};
  const auto c5 = family_cycle(5, id5);
  CHECK(c5.edges() == E({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));
  const std::vector<Rank> id3{0, 1, 2};
  CHECK(family_cycle(3, id3).edges() == E({{0, 1}, {1, 2}, {0, 2}}));
  const std::vector<Rank> rev{4, 3, 2, 1, 0};
  CHECK(is_isomorphic_eo(family_cycle(5, rev), c5));
  CHECK(oracle::isomorphic(family_cycle(5, rev), c5));
  const std::vector<Rank> bad{0, 0, 1, 2, 3};
  CHECK(kind_of([&] { family_cycle(5, bad); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([&] { family_cycle(2, std::vector<Rank>{0, 1}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("disjoint union") {
  const std::vector<EdgeOrderedGraph> two_k2{family_matching(1), family_matching(1)};
  CHECK(is_isomorphic_eo(disjoint_union(two_k2), family_matching(2)));
  const auto pp = disjoint_copies(family_path4(1), 2);
  CHECK(pp.vertex_count() == 8);
  CHECK(pp.edge_count() == 6);
  for (Rank r = 0; r < 3; ++r) CHECK(pp.edge(r).v < 4);
  for (Rank r = 3; r < 6; ++r) CHECK(pp.edge(r).u >= 4);
  const std::vector<EdgeOrderedGraph> mixed{family_star(2), family_matching(1)};
  const auto u = disjoint_union(mixed);
  CHECK(u.vertex_count() == 5);
  CHECK(u.edge_count() == 3);
  CHECK(kind_of([] { disjoint_union(std::vector<EdgeOrderedGraph>{}); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("disjoint union is associative") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<EdgeOrderedGraph> g;
    for (int i = 0; i < 3; ++i) g.push_back(oracle::random_graph(2 + rng() % 4, 1 + rng() % 3, rng));
    const std::vector<EdgeOrderedGraph> ab{g[0], g[1]};
    const std::vector<EdgeOrderedGraph> bc{g[1], g[2]};
    const std::vector<EdgeOrderedGraph> left{disjoint_union(ab), g[2]};
    const std::vector<EdgeOrderedGraph> right{g[0], disjoint_union(bc)};
    CHECK(is_isomorphic_eo(disjoint_union(left), disjoint_union(right)));
  }
}

TEST_CASE("delete edge") {
  const auto k33 = family_complete_bipartite(3, 3);
  const auto f = delete_edge(k33, 0, 3);
  CHECK(f.edge_count() == 8);
  CHECK(f.edge(0) == Edge(0, 4));
  CHECK(f.vertex_count() == 6);
  const auto empty = delete_edge(family_matching(1), 1, 0);
  CHECK(empty.edge_count() == 0);
  CHECK(empty.vertex_count() == 2);
  CHECK(oracle::contains(k33, f));
  CHECK(contains_ordered(k33, f.without_isolated_vertices()).has_value());
  CHECK(kind_of([&] { delete_edge(k33, 0, 1); }) == ErrorKind::EdgeNotFound);
}

TEST_CASE("book host edge count") {
  CHECK(book_host_edge_count(2, 1) == 38);
  CHECK(book_host_edge_count(2, 2) == 156);
  CHECK(book_host_edge_count(1, 1) == 9);
  CHECK(to_string(book_host_edge_count(2, 1)) == "38");
  // Direct count on the constructed host for small cases.
  for (std::uint64_t m = 1; m <= 2; ++m) {
    for (std::uint64_t n = 1; n <= 2; ++n) {
      const auto host = family_book(2 * m * n, (std::size_t{1} << (m + 1)) * n);
      CHECK(book_host_edge_count(m, n) == host.edge_count());
    }
  }
  CHECK(kind_of([] { book_host_edge_count(200, 1); }) == ErrorKind::Overflow);
  CHECK(kind_of([] { book_host_edge_count(0, 1); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("family expressions") {
  CHECK(make_family(parse_family_expression("matching:2")) == family_matching(2));
  CHECK(make_family(parse_family_expression("path4:3")) == family_path4(3));
  CHECK(make_family(parse_family_expression("kbip:2,3")) == family_complete_bipartite(2, 3));
  CHECK(make_family(parse_family_expression("book:3,2")) == family_book(3, 2));
  const std::vector<Rank> ranks{4, 3, 2, 1, 0};
  CHECK(make_family(parse_family_expression("cycle:5:4,3,2,1,0")) == family_cycle(5, ranks));
  CHECK(make_family(parse_family_expression("complete:4")).edge_count() == 6);
  CHECK(kind_of([] { parse_family_expression("nonsense:1"); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("eog format") {
  CHECK(parse_eog("n=2 m=1\n0 1\n") == family_matching(1));
  CHECK(serialize_eog(family_path4(2)) == "n=4 m=3\n0 1\n2 3\n1 2\n");
  CHECK(parse_eog("# comment\nn=3 m=2\n# mid\n0 1\n\n1 2\n") == family_star(2).relabeled(std::vector<Vertex>{1, 0, 2}));

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_eog(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 999;
  };
  CHECK(line_of("n=1 m=1\n0 0\n") == 2);
  CHECK(line_of("n=2 m=1\n0 2\n") == 2);
  CHECK(line_of("n=3 m=2\n0 1\n0 1\n") == 3);
  CHECK(line_of("n=2 m=1\n1 0\n") == 2);
  CHECK(line_of("n=2 m=1\n0 1") == 0);
  CHECK(line_of("x=2 m=1\n0 1\n") == 1);
  CHECK(line_of("n=3 m=2\n0 1\n") != 999);
  CHECK(line_of("n=3 m=1\n0 1\n1 2\n") != 999);
}

TEST_CASE("eog round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto n = 2 + rng() % 8;
    const auto g = oracle::random_graph(n, rng() % 11, rng);
    CHECK(parse_eog(serialize_eog(g)) == g);
  }
}
