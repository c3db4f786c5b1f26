#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "reo/arrowing.hpp"
#include "reo/enumerate.hpp"
#include "reo/errors.hpp"
#include "reo/iso.hpp"

#include <random>

using namespace reo;

namespace {

const EdgeOrderedGraph& k2() {
  static const auto g = family_matching(1);
  return g;
}
const EdgeOrderedGraph& two_k2() {
  static const auto g = family_matching(2);
  return g;
}

std::vector<EdgeOrderedGraph> small_patterns() {
  return {k2(), two_k2(), family_star(2), family_path4(1), family_path4(2), family_path4(3)};
}

std::vector<EdgeOrderedGraph> hosts_up_to(std::size_t m) {
  std::vector<EdgeOrderedGraph> out;
  for (std::size_t k = 1; k <= m; ++k) {
    EdgeOrderedEnumerator it(k);
    while (auto g = it.next()) out.push_back(*g);
  }
  return out;
}

void check_verdict(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue,
                   const ArrowVerdict& v) {
  CHECK(v.arrows != v.counterexample.has_value());
  if (v.counterexample) {
    REQUIRE(v.counterexample->size() == host.edge_count());
    CHECK(v.counterexample->complete());
    CHECK_FALSE(check_coloring(host, *v.counterexample, red, blue));
    CHECK_FALSE(oracle::contains(v.counterexample->color_class(host, Color::Red), red));
    CHECK_FALSE(oracle::contains(v.counterexample->color_class(host, Color::Blue), blue));
  }
}

}  // namespace

TEST_CASE("arrowing examples") {
  CHECK(arrows(k2(), k2(), k2()).arrows);
  const auto pp = disjoint_copies(family_path4(1), 2);
  CHECK(arrows(pp, two_k2(), family_path4(1)).arrows);
  CHECK(oracle::arrows(pp, two_k2(), family_path4(1)));

  const auto c5 = family_cycle(5, std::vector<Rank>{0, 1, 2, 3, 4});
  const auto v = arrows(c5, two_k2(), family_path4(1));
  CHECK_FALSE(v.arrows);
  check_verdict(c5, two_k2(), family_path4(1), v);
  // The coloring named in the construction, red {e3, e4}.
  CHECK_FALSE(check_coloring(c5, Coloring::from_rb("BBRRB"), two_k2(), family_path4(1)));

  CHECK(arrows_naive(family_path4(1), k2(), family_path4(1)).arrows);
  const auto naive = arrows_naive(two_k2(), two_k2(), two_k2());
  CHECK_FALSE(naive.arrows);
  check_verdict(two_k2(), two_k2(), two_k2(), naive);
}

TEST_CASE("argument errors") {
  const EdgeOrderedGraph empty(2, {});
  CHECK_THROWS_AS(arrows(k2(), empty, k2()), Error);
  const auto big = family_complete_bipartite(5, 9);
  try {
    arrows(big, k2(), k2());
    FAIL("expected TooLargeForExhaustive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLargeForExhaustive);
  }
  try {
    arrows_naive(family_matching(21), k2(), k2());
    FAIL("expected TooLargeForExhaustive");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLargeForExhaustive);
  }
  try {
    check_coloring(k2(), Coloring(1), k2(), k2());
    FAIL("expected IncompleteColoring");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::IncompleteColoring);
  }
}

TEST_CASE("node budget reports indeterminate") {
  const auto host = family_complete_bipartite(3, 4);
  ArrowOptions opts;
  opts.node_budget = 5;
  try {
    arrows(host, family_complete_bipartite(2, 2), family_complete_bipartite(2, 2), opts);
    FAIL("expected Indeterminate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Indeterminate);
  }
}

TEST_CASE("arrows matches naive and oracle on all hosts up to 4 edges") {
  const auto patterns = small_patterns();
  std::size_t disagreements = 0;
  for (const auto& host : hosts_up_to(4)) {
    for (const auto& red : patterns) {
      for (const auto& blue : patterns) {
        const auto fast = arrows(host, red, blue);
        const auto naive = arrows_naive(host, red, blue);
        check_verdict(host, red, blue, fast);
        check_verdict(host, red, blue, naive);
        if (fast.arrows != naive.arrows) ++disagreements;
        if (fast.arrows != oracle::arrows(host, red, blue)) ++disagreements;
      }
    }
  }
  CHECK(disagreements == 0);
}

TEST_CASE("arrows matches naive on random hosts with 5 to 10 edges") {
  std::mt19937_64 rng(2024);
  const auto patterns = small_patterns();
  std::size_t disagreements = 0;
  for (int i = 0; i < 500; ++i) {
    const auto m = 5 + rng() % 6;
    const auto host = oracle::random_graph(4 + rng() % 5, m, rng);
    const auto& red = patterns[rng() % patterns.size()];
    const auto& blue = patterns[rng() % patterns.size()];
    const auto fast = arrows(host, red, blue);
    check_verdict(host, red, blue, fast);
    if (fast.arrows != arrows_naive(host, red, blue).arrows) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("parallel search agrees with serial") {
  std::mt19937_64 rng(8);
  const auto patterns = small_patterns();
  for (int i = 0; i < 100; ++i) {
    const auto host = oracle::random_graph(6, 6 + rng() % 6, rng);
    const auto& red = patterns[rng() % patterns.size()];
    const auto& blue = patterns[rng() % patterns.size()];
    ArrowOptions opts;
    opts.threads = 3;
    opts.split_depth = 3;
    const auto par = arrows(host, red, blue, opts);
    check_verdict(host, red, blue, par);
    CHECK(par.arrows == arrows(host, red, blue).arrows);
  }
}

TEST_CASE("host monotonicity") {
  std::mt19937_64 rng(31);
  const auto patterns = small_patterns();
  int checked = 0;
  for (int i = 0; i < 400 && checked < 150; ++i) {
    const auto host = oracle::random_graph(5, 3 + rng() % 5, rng);
    const auto& red = patterns[rng() % patterns.size()];
    const auto& blue = patterns[rng() % patterns.size()];
    if (!arrows(host, red, blue).arrows) continue;
    ++checked;
    std::vector<Edge> missing;
    for (Vertex a = 0; a < host.vertex_count(); ++a) {
      for (Vertex b = a + 1; b < host.vertex_count(); ++b) {
        if (!host.rank_of(a, b)) missing.emplace_back(a, b);
      }
    }
    missing.emplace_back(0, static_cast<Vertex>(host.vertex_count()));
    for (const auto& e : missing) {
      const EdgeOrderedGraph wider(std::max<std::size_t>(host.vertex_count(), e.v + 1), host.edges());
      for (Rank pos = 0; pos <= host.edge_count(); ++pos) {
        CHECK(arrows(wider.with_edge_inserted(e, pos), red, blue).arrows);
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("color swap symmetry") {
  std::mt19937_64 rng(13);
  const auto patterns = small_patterns();
  for (int i = 0; i < 300; ++i) {
    const auto host = oracle::random_graph(6, 2 + rng() % 8, rng);
    const auto& g = patterns[rng() % patterns.size()];
    const auto& h = patterns[rng() % patterns.size()];
    const auto a = arrows(host, g, h);
    const auto b = arrows(host, h, g);
    CHECK(a.arrows == b.arrows);
    if (a.counterexample) {
      CHECK_FALSE(check_coloring(host, a.counterexample->flipped(), h, g));
    }
    Coloring c(host.edge_count());
    for (auto& x : c.colors) x = (rng() & 1) ? Color::Blue : Color::Red;
    CHECK(check_coloring(host, c, g, h) == check_coloring(host, c.flipped(), h, g));
  }
}

TEST_CASE("pre-filters fire without search") {
  // No ordered P4 with increasing ranks exists in a star.
  const auto star = family_star(5);
  const auto v = arrows(star, k2(), family_path4(1));
  CHECK_FALSE(v.arrows);
  REQUIRE(v.counterexample);
  CHECK(v.counterexample->to_rb() == "BBBBB");
  CHECK(v.nodes_explored <= 1);

  const auto w = arrows(star, family_path4(1), k2());
  CHECK_FALSE(w.arrows);
  REQUIRE(w.counterexample);
  CHECK(w.counterexample->to_rb() == "RRRRR");
  CHECK(w.nodes_explored <= 1);
}

TEST_CASE("sampling") {
  const auto r = sample_colorings(k2(), k2(), k2(), 50, 9);
  CHECK(r.samples == 50);
  CHECK(r.failures == 0);
  const auto c5 = family_cycle(5, std::vector<Rank>{0, 1, 2, 3, 4});
  const auto a = sample_colorings(c5, two_k2(), family_path4(1), 200, 42);
  const auto b = sample_colorings(c5, two_k2(), family_path4(1), 200, 42);
  CHECK(a.failures == b.failures);
  CHECK(a.first_failure == b.first_failure);
  CHECK(a.failures > 0);
  CHECK(a.failures <= a.samples);
  REQUIRE(a.first_failure);
  CHECK_FALSE(check_coloring(c5, *a.first_failure, two_k2(), family_path4(1)));
}

TEST_CASE("certificates round trip and re-verify") {
  const auto c5 = family_cycle(5, std::vector<Rank>{0, 1, 2, 3, 4});
  const auto v = arrows(c5, two_k2(), family_path4(1));
  const auto cert = parse_certificate(certificate_json(c5, two_k2(), family_path4(1), v));
  CHECK(cert.host == c5);
  CHECK_FALSE(cert.arrows);
  CHECK(cert.counterexample == v.counterexample);
  CHECK(verify_certificate(cert));

  auto forged = cert;
  forged.counterexample = Coloring::from_rb("BBBBB");
  CHECK_FALSE(verify_certificate(forged));

  const auto pp = disjoint_copies(family_path4(1), 2);
  const auto yes = arrows(pp, two_k2(), family_path4(1));
  const auto cert2 = parse_certificate(certificate_json(pp, two_k2(), family_path4(1), yes));
  CHECK(cert2.arrows);
  CHECK(verify_certificate(cert2));
  auto wrong = cert;
  wrong.arrows = true;
  wrong.counterexample.reset();
  CHECK_FALSE(verify_certificate(wrong));

  CHECK_THROWS_AS(parse_certificate("{\"host\": 3}"), Error);
}
