#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "reo/enumerate.hpp"
#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <set>
#include <unordered_set>

using namespace reo;

namespace {

std::vector<EdgeOrderedGraph> stream(std::size_t m) {
  std::vector<EdgeOrderedGraph> out;
  EdgeOrderedEnumerator it(m);
  while (auto g = it.next()) out.push_back(*g);
  return out;
}

// Pinned from oracle::classes(3) before the enumerator existed.
constexpr std::size_t kClassesWithThreeEdges = 9;

}  // namespace

TEST_CASE("underlying graphs") {
  CHECK(enumerate_underlying(1).size() == 1);
  CHECK(enumerate_underlying(2).size() == 2);
  CHECK(enumerate_underlying(1)[0] == family_matching(1));
  for (std::size_t m = 1; m <= 6; ++m) {
    std::set<std::vector<std::uint64_t>> rows;
    for (const auto& g : enumerate_underlying(m)) {
      CHECK(g.edge_count() == m);
      CHECK_FALSE(g.has_isolated_vertices());
      CHECK(g.vertex_count() <= 2 * m);
      CHECK(rows.insert(unordered_canonical_form(g).rows).second);
    }
  }
  CHECK_THROWS_AS(enumerate_underlying(0), Error);
  CHECK_THROWS_AS(enumerate_underlying(9), Error);
}

TEST_CASE("underlying graphs with five edges include the drawn shapes") {
  auto has = [](std::size_t n, std::vector<Edge> edges) {
    const auto want = unordered_canonical_form(EdgeOrderedGraph(n, edges));
    for (const auto& g : enumerate_underlying(5)) {
      if (unordered_canonical_form(g) == want) return true;
    }
    return false;
  };
  using V = std::vector<Edge>;
  CHECK(has(6, V{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}}));                // P6
  CHECK(has(5, V{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}));                // C5
  CHECK(has(5, V{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 4}}));                // C4 + pendant
  CHECK(has(5, V{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}}));                // triangle, two pendants
  CHECK(has(5, V{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}}));                // triangle with tail
  CHECK(has(4, V{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}));                // C4 + chord
  CHECK(has(6, V{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}}));                // C4 + K2
  CHECK(has(7, V{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}}));                // P4 + P3
  CHECK(has(8, V{{0, 1}, {1, 2}, {2, 3}, {4, 5}, {6, 7}}));                // P4 + 2K2
  CHECK(has(6, V{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}}));                // spider
}

TEST_CASE("edge orders of small shapes") {
  const EdgeOrderedGraph p4(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
  const auto orders = enumerate_edge_orders(p4);
  CHECK(orders.size() == 3);
  for (int v = 1; v <= 3; ++v) {
    int hits = 0;
    for (const auto& o : orders) hits += is_isomorphic_eo(o, family_path4(v));
    CHECK(hits == 1);
  }
  CHECK(enumerate_edge_orders(family_star(3)).size() == 1);
  CHECK(enumerate_edge_orders(family_matching(2)).size() == 1);
  CHECK_THROWS_AS(enumerate_edge_orders(family_matching(9)), Error);
}

TEST_CASE("class counts match the brute-force oracle") {
  CHECK(oracle::classes(1).size() == 1);
  CHECK(oracle::classes(2).size() == 2);
  CHECK(oracle::classes(3).size() == kClassesWithThreeEdges);
  CHECK(count_eographs(1) == 1);
  CHECK(count_eographs(2) == 2);
  CHECK(count_eographs(3) == kClassesWithThreeEdges);
}

TEST_CASE("stream equals the oracle class list for m up to 3") {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto fast = stream(m);
    const auto slow = oracle::classes(m);
    REQUIRE(fast.size() == slow.size());
    for (const auto& s : slow) {
      int hits = 0;
      for (const auto& f : fast) hits += oracle::isomorphic(f, s);
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("orders per underlying graph match orbit counting") {
  CHECK(edge_automorphism_count(family_path4(1)) == 2);
  CHECK(edge_automorphism_count(family_star(3)) == 6);
  CHECK(edge_automorphism_count(family_matching(3)) == 6);
  CHECK(edge_automorphism_count(family_complete_bipartite(2, 2)) == 8);
  for (std::size_t m = 1; m <= 6; ++m) {
    std::size_t factorial = 1;
    for (std::size_t i = 2; i <= m; ++i) factorial *= i;
    for (const auto& g : enumerate_underlying(m)) {
      CHECK(enumerate_edge_orders(g).size() * edge_automorphism_count(g) == factorial);
    }
  }
}

TEST_CASE("no duplicates") {
  const auto four = stream(4);
  CHECK(four.size() == count_eographs(4));
  for (std::size_t i = 0; i < four.size(); ++i) {
    for (std::size_t j = i + 1; j < four.size(); ++j) CHECK_FALSE(is_isomorphic_eo(four[i], four[j]));
  }
  for (std::size_t m = 5; m <= 7; ++m) {
    std::unordered_set<std::string> digests;
    std::size_t total = 0;
    EdgeOrderedEnumerator it(m);
    while (auto g = it.next()) {
      ++total;
      CHECK(g->edge_count() == m);
      CHECK_FALSE(g->has_isolated_vertices());
      if (!digests.insert(canonical_form(*g).digest()).second) FAIL("duplicate at m=" << m);
    }
    CHECK(total == count_eographs(m));
  }
}

TEST_CASE("resumption yields the identical remaining stream") {
  const auto full = stream(5);
  EdgeOrderedEnumerator it(5);
  std::vector<EnumCursor> checkpoints;
  for (std::size_t i = 0; i < full.size(); ++i) {
    checkpoints.push_back(it.cursor());
    it.next();
  }
  CHECK(it.cursor().exhausted);
  CHECK_FALSE(it.next().has_value());
  for (std::size_t i = 0; i < full.size(); i += 37) {
    const auto restored = cursor_from_json(cursor_to_json(checkpoints[i]));
    CHECK(restored == checkpoints[i]);
    EdgeOrderedEnumerator resumed(5, restored);
    std::size_t j = i;
    while (auto g = resumed.next()) {
      REQUIRE(j < full.size());
      CHECK(*g == full[j]);
      ++j;
    }
    CHECK(j == full.size());
  }
  CHECK_THROWS_AS(cursor_from_json("{\"m\": 5}"), Error);
  CHECK_THROWS_AS(EdgeOrderedEnumerator(4, checkpoints[3]), Error);
}
