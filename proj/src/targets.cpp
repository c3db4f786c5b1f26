#include "reo/cli.hpp"

#include "reo/enumerate.hpp"
#include "reo/iso.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <ostream>

namespace reo {

ArrowOptions RunConfig::arrow_options() const {
  ArrowOptions o;
  o.threads = threads;
  o.node_budget = node_budget;
  return o;
}

SweepOptions RunConfig::sweep_options() const {
  SweepOptions o;
  o.threads = threads;
  o.node_budget = node_budget;
  o.max_hosts = max_hosts;
  if (progress != nullptr) {
    // One line per whole percent, per level.
    auto last = std::make_shared<std::pair<std::size_t, std::size_t>>(0, 0);
    o.progress = [out = progress, last](std::size_t m, std::size_t entries, std::size_t total) {
      const std::size_t percent = total == 0 ? 100 : entries * 100 / total;
      if (last->first == m && last->second == percent) return;
      *last = {m, percent};
      *out << "sweep m=" << m << ' ' << entries << '/' << total << '\n';
    };
  }
  return o;
}

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, message);
}

std::vector<int> variants_of(const VerifyParams& p) {
  if (!p.variant) return {1, 2, 3};
  require(*p.variant >= 1 && *p.variant <= 3, "variant must be 1, 2 or 3");
  return {*p.variant};
}

std::string pair_label(const EdgeOrderedGraph& red, const EdgeOrderedGraph& blue) {
  return "(" + pattern_label(red) + ", " + pattern_label(blue) + ")";
}

std::string ledger_detail(const SweepLedger& l) {
  return std::to_string(l.m) + "-edge ledger " + std::to_string(l.entries) + "/" + std::to_string(l.total) +
         (l.complete ? " complete" : " partial") + ", " + std::to_string(l.arrowing) + " arrowing";
}

LedgerStore store_for(const RunConfig& config) {
  require(!config.cache_dir.empty(), "cache directory required");
  return LedgerStore(config.cache_dir);
}

// The lower bound `value` is certified by a complete non-arrowing sweep of
// level value-1; an interrupted sweep is indeterminate.
bool exact_at(const SizeRamseyResult& r, std::size_t value, std::string& detail) {
  if (r.ledgers.empty()) {
    detail = "no ledger";
    return false;
  }
  const SweepLedger* lower = &r.ledgers.back();
  for (const auto& l : r.ledgers) {
    if (r.value && l.m + 1 == *r.value) lower = &l;
  }
  detail = "status " + std::string(to_string(r.status)) + ", value " +
           (r.value ? std::to_string(*r.value) : std::string("none")) + ", " + ledger_detail(*lower);
  if (r.status != ResultStatus::Exact && !r.ledgers.back().complete && r.ledgers.back().arrowing == 0) {
    throw Error(ErrorKind::Indeterminate, detail + "; rerun with the same cache to resume");
  }
  return r.status == ResultStatus::Exact && r.value == value && recheck_result(r);
}

void append(CheckReport& into, const CheckReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

CheckReport two_matching_vs_path(const VerifyParams& p, const RunConfig& config) {
  CheckReport report{"lemma-3.1", {}};
  const auto store = store_for(config);
  for (const int v : variants_of(p)) {
    const auto red = family_matching(2);
    const auto blue = family_path4(v);
    report.run("search " + pair_label(red, blue) + " = 6", [&](std::string& detail) {
      const auto r = size_redge_exact(red, blue, 8, store, config.sweep_options());
      return exact_at(r, 6, detail);
    });
  }
  append(report, verify_small_path_colorings());
  return report;
}

CheckReport matching_vs_path(const VerifyParams& p, const RunConfig& config) {
  require(p.m && (*p.m == 2 || *p.m == 3), "thm-3.1 is verified for m = 2 and m = 3");
  const std::size_t m = *p.m;
  CheckReport report{"thm-3.1", {}};
  const auto store = store_for(config);
  for (const int v : variants_of(p)) {
    const auto red = family_matching(m);
    const auto blue = family_path4(v);
    const auto witness = disjoint_copies(blue, m);
    report.run("upper: " + std::to_string(m) + " disjoint " + pattern_label(blue) + " arrow " + pair_label(red, blue),
               [&](std::string& detail) {
                 const auto size = size_redge_upper(red, blue, witness, config.arrow_options());
                 detail = std::to_string(size) + " edges";
                 return size == 3 * m;
               });
    report.run("lower: no " + std::to_string(3 * m - 1) + "-edge host arrows " + pair_label(red, blue),
               [&](std::string& detail) {
                 const auto r = certify_exact(red, blue, witness, store, config.sweep_options());
                 return exact_at(r, 3 * m, detail);
               });
  }
  return report;
}

CheckReport two_matching_vs_bipartite(const VerifyParams& p, const RunConfig& config) {
  const std::size_t s = p.s.value_or(2);
  const std::size_t t = p.t.value_or(2);
  require(t >= s && s >= 2, "thm-3.3 needs t >= s >= 2");
  require(s * t + s + t <= 20, "thm-3.3 is verified for st + s + t <= 20");
  CheckReport report{"thm-3.3", {}};
  const auto red = family_matching(2);
  const auto blue = family_complete_bipartite(s, t);
  const auto witness = delete_edge(family_complete_bipartite(s + 1, t + 1), 0, static_cast<Vertex>(s + 1));
  const auto target = s * t + s + t;
  report.run("upper: K" + std::to_string(s + 1) + "," + std::to_string(t + 1) + " minus u1v1 arrows " +
                 pair_label(red, blue),
             [&](std::string& detail) {
               const auto size = size_redge_upper(red, blue, witness, config.arrow_options());
               detail = std::to_string(size) + " edges = st+s+t";
               if (s != 2 || t != 2) detail += "; lower bound not swept at this size";
               return size == target;
             });
  if (s == 2 && t == 2) {
    const auto store = store_for(config);
    report.run("lower: no 7-edge host arrows " + pair_label(red, blue), [&](std::string& detail) {
      const auto r = certify_exact(red, blue, witness, store, config.sweep_options());
      return exact_at(r, target, detail);
    });
  }
  return report;
}

CheckReport matching_bounds(const VerifyParams& p, const RunConfig& config) {
  std::vector<std::size_t> ms{3, 4, 5, 6};
  if (p.m) {
    require(*p.m >= 3 && *p.m <= 6, "thm-3.5 is verified for 3 <= m <= 6");
    ms = {*p.m};
  }
  CheckReport report{"thm-3.5", {}};
  auto pinned = [&](std::int64_t m, std::int64_t s, std::int64_t t, std::int64_t value) {
    report.run("m=" + std::to_string(m) + " K" + std::to_string(s) + "," + std::to_string(t) + ": lower <= " +
                   std::to_string(value) + " <= upper",
               [&](std::string& detail) {
                 const auto b = matching_vs_bipartite_bounds(m, s, t);
                 detail = std::to_string(b.lower) + " <= " + std::to_string(value) + " <= " + std::to_string(b.upper);
                 return b.lower <= value && value <= b.upper;
               });
  };
  for (const auto mu : ms) {
    const auto m = static_cast<std::int64_t>(mu);
    for (std::int64_t t = 1; t <= 8; ++t) pinned(m, 1, t, m * t);
    pinned(m, 2, 2, 4 * m);
  }
  if (std::find(ms.begin(), ms.end(), 3) != ms.end()) {
    const auto store = store_for(config);
    for (std::size_t t = 1; t <= 2; ++t) {
      const auto red = family_matching(3);
      const auto blue = family_star(t);
      report.run("search " + pair_label(red, blue) + " = " + std::to_string(3 * t), [&](std::string& detail) {
        const auto r = size_redge_exact(red, blue, 8, store, config.sweep_options());
        return exact_at(r, 3 * t, detail);
      });
    }
  }
  return report;
}

CheckReport star_vs_bipartite(const RunConfig& config) {
  CheckReport report{"thm-4.1", {}};
  constexpr std::size_t kMaxEdges = 12;
  for (std::size_t s = 1; s * s <= kMaxEdges; ++s) {
    for (std::size_t n = 1; s * s * (n - 1) + s <= kMaxEdges; ++n) {
      for (std::size_t t = 1; s * s * (n - 1) + s * t <= kMaxEdges; ++t) {
        const auto width = s * (n - 1) + t;
        const auto host = family_complete_bipartite(s, width);
        const auto red = family_star(n);
        const auto blue = family_complete_bipartite(s, t);
        report.run("K" + std::to_string(s) + "," + std::to_string(width) + " arrows (K1," + std::to_string(n) + ", K" +
                       std::to_string(s) + "," + std::to_string(t) + ")",
                   [&](std::string& detail) {
                     const auto verdict = arrows(host, red, blue, config.arrow_options());
                     detail = std::to_string(host.edge_count()) + " edges, " + std::to_string(verdict.nodes_explored) +
                              " nodes";
                     return verdict.arrows && host.edge_count() == static_cast<std::size_t>(star_vs_bipartite_upper(
                                                                       static_cast<std::int64_t>(n),
                                                                       static_cast<std::int64_t>(s),
                                                                       static_cast<std::int64_t>(t)));
                   });
      }
    }
  }
  const auto store = store_for(config);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t t = 1; n + t - 1 <= 6; ++t) {
      const auto red = family_star(n);
      const auto blue = family_star(t);
      report.run("search (K1," + std::to_string(n) + ", K1," + std::to_string(t) + ") = " + std::to_string(n + t - 1),
                 [&](std::string& detail) {
                   const auto r = size_redge_exact(red, blue, 8, store, config.sweep_options());
                   return exact_at(r, n + t - 1, detail);
                 });
    }
  }
  return report;
}

CheckReport diagonal_sample(const VerifyParams& p, const RunConfig& config) {
  const std::size_t s = p.s.value_or(2);
  const std::size_t t = p.t.value_or(2);
  require(t >= s && s >= 2, "thm-4.2-sample needs t >= s >= 2");
  const auto h = bipartite_diagonal_host(s, t);
  require(h.edge_bound <= 4096, "thm-4.2-sample host above 4096 edges");
  const auto samples = config.samples.value_or(1000);
  CheckReport report{"thm-4.2-sample", {}};
  const auto host = family_complete_bipartite(h.part_a, h.part_b);
  const auto pattern = family_complete_bipartite(s, t);
  report.run("host K" + std::to_string(h.part_a) + "," + std::to_string(h.part_b) + " within the edge bound",
             [&](std::string& detail) {
               const double bound = std::numbers::e * static_cast<double>(s * s) *
                                    std::ldexp(1.0, static_cast<int>(s + 2)) * static_cast<double>(t);
               detail = std::to_string(host.edge_count()) + " edges vs e s^2 2^{s+2} t = " + std::to_string(bound) +
                        " (ceiling slack at most " + std::to_string(h.part_a) + ")";
               return host.edge_count() == h.edge_bound &&
                      static_cast<double>(h.edge_bound) <= bound + static_cast<double>(h.part_a);
             });
  report.run(std::to_string(samples) + " seeded colorings all hold a monochromatic " + pattern_label(pattern),
             [&](std::string& detail) {
               const auto r = sample_colorings(host, pattern, pattern, samples, config.seed);
               detail = std::to_string(r.failures) + " failures, seed " + std::to_string(r.seed) +
                        "; sampling evidence, not a proof";
               return r.failures == 0 && r.samples == samples;
             });
  return report;
}

std::vector<std::pair<EdgeOrderedGraph, EdgeOrderedGraph>> inequality_pairs() {
  const auto k2 = family_matching(1);
  const auto m2 = family_matching(2);
  const auto p3 = family_star(2);
  std::vector<std::pair<EdgeOrderedGraph, EdgeOrderedGraph>> pairs{
      {k2, k2}, {k2, m2}, {m2, k2}, {m2, m2}, {k2, p3}, {p3, k2}, {p3, p3}, {m2, p3}, {family_matching(3), p3},
      {k2, family_complete_bipartite(2, 2)}};
  for (int v = 1; v <= 3; ++v) {
    pairs.emplace_back(k2, family_path4(v));
    pairs.emplace_back(m2, family_path4(v));
  }
  return pairs;
}

CheckReport prop_ineq(const RunConfig& config) {
  const auto store = store_for(config);
  std::vector<SizeRamseyResult> results;
  CheckReport report{"prop-ineq", {}};
  for (const auto& [red, blue] : inequality_pairs()) {
    report.run("search " + pair_label(red, blue), [&](std::string& detail) {
      auto r = size_redge_exact(red, blue, 8, store, config.sweep_options());
      const bool ok = r.value && exact_at(r, *r.value, detail);
      if (ok) results.push_back(std::move(r));
      return ok;
    });
  }
  report.run("certify (2K2, K2,2) = 8", [&](std::string& detail) {
    auto r = certify_exact(family_matching(2), family_complete_bipartite(2, 2),
                           delete_edge(family_complete_bipartite(3, 3), 0, 3), store, config.sweep_options());
    const bool ok = exact_at(r, 8, detail);
    if (ok) results.push_back(std::move(r));
    return ok;
  });
  append(report, structural_checks(results, config.arrow_options()));
  return report;
}

CheckReport book_count(const VerifyParams& p) {
  std::vector<std::size_t> ms, ns;
  for (std::size_t i = 1; i <= 10; ++i) ms.push_back(i), ns.push_back(i);
  if (p.m) {
    require(*p.m >= 1 && *p.m <= 10, "book-count is verified for 1 <= m <= 10");
    ms = {*p.m};
  }
  if (p.n) {
    require(*p.n >= 1 && *p.n <= 10, "book-count is verified for 1 <= n <= 10");
    ns = {*p.n};
  }
  constexpr u128 kBuildCap = 200'000;
  CheckReport report{"book-count", {}};
  for (const auto m : ms) {
    for (const auto n : ns) {
      report.run("m=" + std::to_string(m) + " n=" + std::to_string(n), [&](std::string& detail) {
        const u128 count = book_host_edge_count(m, n);
        const u128 spine = u128{2} * m * n;
        const u128 pages = (u128{1} << (m + 1)) * n;
        const u128 direct = spine * (spine - 1) / 2 + spine * pages;
        const u128 expanded = (u128{2} * m * m + u128{m} * (u128{1} << (m + 2))) * n * n - u128{m} * n;
        detail = to_string(count);
        bool ok = count == direct && count == expanded;
        if (count <= kBuildCap) {
          const auto built = family_book(static_cast<std::size_t>(spine), static_cast<std::size_t>(pages));
          ok = ok && built.edge_count() == count;
          detail += ", built";
        }
        return ok;
      });
    }
  }
  return report;
}

// One extra edge on a fresh vertex, joined to vertex 0 at rank `position`.
EdgeOrderedGraph with_pendant(const EdgeOrderedGraph& g, Rank position) {
  EdgeOrderedGraph wider(g.vertex_count() + 1, g.edges());
  return wider.with_edge_inserted(Edge{0, static_cast<Vertex>(g.vertex_count())}, position);
}

}  // namespace

CheckReport structural_checks(const std::vector<SizeRamseyResult>& results, const ArrowOptions& options) {
  CheckReport report{"structural", {}};
  for (const auto& r : results) {
    if (r.status != ResultStatus::Exact || !r.witness_host) continue;
    const auto& w = *r.witness_host;
    const auto label = pair_label(r.red_pattern, r.blue_pattern);
    report.run("color swap " + label, [&](std::string& detail) {
      const auto forward = arrows(w, r.red_pattern, r.blue_pattern, options);
      const auto swapped = arrows(w, r.blue_pattern, r.red_pattern, options);
      detail = "witness arrows both ways";
      return forward.arrows && swapped.arrows;
    });
    report.run("host monotonicity " + label, [&](std::string& detail) {
      std::size_t hosts = 0;
      for (Rank pos = 0; pos <= w.edge_count(); ++pos, ++hosts) {
        if (!arrows(with_pendant(w, pos), r.red_pattern, r.blue_pattern, options).arrows) return false;
      }
      // Every one-edge deletion sits below the exact value.
      for (const auto& e : w.edges()) {
        ++hosts;
        const auto smaller = delete_edge(w, e.u, e.v);
        const auto v = arrows(smaller, r.red_pattern, r.blue_pattern, options);
        if (v.arrows || check_coloring(smaller, *v.counterexample, r.red_pattern, r.blue_pattern)) return false;
      }
      detail = std::to_string(hosts) + " hosts";
      return true;
    });
  }
  try {
    append(report, verify_inequalities(results));
  } catch (const Error& e) {
    report.checks.push_back(SubCheck{"inequalities", false, e.what(), {}, false});
  }
  return report;
}

CheckReport verify_target(std::string_view target, const VerifyParams& params, const RunConfig& config) {
  auto none = [&](std::initializer_list<bool> given) {
    for (const bool g : given) require(!g, std::string(target) + " takes no such parameter");
  };
  if (target == "lemma-3.1") {
    none({params.m.has_value(), params.n.has_value(), params.s.has_value(), params.t.has_value()});
    return two_matching_vs_path(params, config);
  }
  if (target == "thm-3.1") {
    none({params.n.has_value(), params.s.has_value(), params.t.has_value()});
    return matching_vs_path(params, config);
  }
  if (target == "thm-3.3") {
    none({params.m.has_value(), params.n.has_value(), params.variant.has_value()});
    return two_matching_vs_bipartite(params, config);
  }
  if (target == "thm-3.5") {
    none({params.n.has_value(), params.s.has_value(), params.t.has_value(), params.variant.has_value()});
    return matching_bounds(params, config);
  }
  if (target == "thm-4.1") {
    none({params.m.has_value(), params.n.has_value(), params.s.has_value(), params.t.has_value(),
          params.variant.has_value()});
    return star_vs_bipartite(config);
  }
  if (target == "thm-4.2-sample") {
    none({params.m.has_value(), params.n.has_value(), params.variant.has_value()});
    return diagonal_sample(params, config);
  }
  if (target == "prop-ineq") {
    none({params.m.has_value(), params.n.has_value(), params.s.has_value(), params.t.has_value(),
          params.variant.has_value()});
    return prop_ineq(config);
  }
  if (target == "book-count") {
    none({params.s.has_value(), params.t.has_value(), params.variant.has_value()});
    return book_count(params);
  }
  throw Error(ErrorKind::InvalidParameter, "unknown verify target '" + std::string(target) + "'");
}

}  // namespace reo
