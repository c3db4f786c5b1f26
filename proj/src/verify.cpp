#include "reo/iso.hpp"
#include "reo/ramsey.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace reo {

using nlohmann::json;

bool CheckReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed; });
}

bool CheckReport::indeterminate() const {
  return !passed() &&
         std::all_of(checks.begin(), checks.end(), [](const SubCheck& c) { return c.passed || c.indeterminate; });
}

void CheckReport::run(const std::string& name, const std::function<bool(std::string&)>& fn) {
  SubCheck check;
  check.name = name;
  const auto start = std::chrono::steady_clock::now();
  try {
    check.passed = fn(check.detail);
  } catch (const Error& e) {
    check.passed = false;
    check.detail = e.what();
    check.indeterminate = e.kind() == ErrorKind::Indeterminate;
  }
  check.elapsed = std::chrono::steady_clock::now() - start;
  checks.push_back(std::move(check));
}

std::string report_json(const CheckReport& report) {
  json j;
  j["target"] = report.target;
  j["passed"] = report.passed();
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"name", c.name},
                           {"passed", c.passed},
                           {"detail", c.detail},
                           {"indeterminate", c.indeterminate},
                           {"seconds", std::chrono::duration<double>(c.elapsed).count()}});
  }
  return j.dump(2);
}

std::string report_text(const CheckReport& report) {
  std::ostringstream out;
  out << report.target << ": " << (report.passed() ? "PASS" : report.indeterminate() ? "INCOMPLETE" : "FAIL") << '\n';
  for (const auto& c : report.checks) {
    out << "  [" << (c.passed ? "PASS" : c.indeterminate ? "INCOMPLETE" : "FAIL") << "] " << c.name;
    out << " (" << std::chrono::duration<double>(c.elapsed).count() << " s)";
    if (!c.detail.empty()) out << ": " << c.detail;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

// k if g is an ordered copy of k disjoint copies of `part`, else 0.
std::size_t copies_of(const EdgeOrderedGraph& g, const EdgeOrderedGraph& part) {
  if (part.empty() || g.edge_count() % part.edge_count() != 0) return 0;
  const auto k = g.edge_count() / part.edge_count();
  return is_isomorphic_eo(g, disjoint_copies(part, k)) ? k : 0;
}

// (s, t) when g is the lexicographic K_{s,t} with s <= t.
std::optional<std::pair<std::size_t, std::size_t>> as_bipartite(const EdgeOrderedGraph& g) {
  const auto e = g.edge_count();
  for (std::size_t s = 1; s * s <= e; ++s) {
    if (e % s == 0 && is_isomorphic_eo(g, family_complete_bipartite(s, e / s))) return std::pair{s, e / s};
  }
  return std::nullopt;
}

}  // namespace

std::string pattern_label(const EdgeOrderedGraph& g) {
  if (const auto k = copies_of(g, family_matching(1))) return std::to_string(k) + "K2";
  for (int v = 1; v <= 3; ++v) {
    if (is_isomorphic_eo(g, family_path4(v))) return "P4<" + std::to_string(v);
  }
  if (const auto st = as_bipartite(g)) return "K" + std::to_string(st->first) + "," + std::to_string(st->second);
  return "eog:" + canonical_form(g, std::numeric_limits<std::size_t>::max()).digest_hex();
}

namespace {

std::string describe(const EdgeOrderedGraph& g) { return pattern_label(g); }

std::string describe(const SizeRamseyResult& r) {
  return "(" + describe(r.red_pattern) + ", " + describe(r.blue_pattern) + ")=" + std::to_string(*r.value);
}

}  // namespace

CheckReport verify_inequalities(const std::vector<SizeRamseyResult>& all) {
  CheckReport report;
  report.target = "inequalities";
  std::vector<const SizeRamseyResult*> exact;
  for (const auto& r : all) {
    if (r.status == ResultStatus::Exact && r.value) exact.push_back(&r);
  }
  auto record = [&](const std::string& name, bool ok, const std::string& detail) {
    report.checks.push_back({name, ok, detail, {}});
    if (!ok) throw Error(ErrorKind::ClaimViolated, name + ": " + detail);
  };

  for (const auto* r : exact) {
    const auto v = static_cast<std::int64_t>(*r->value);
    const auto eg = static_cast<std::int64_t>(r->red_pattern.edge_count());
    const auto eh = static_cast<std::int64_t>(r->blue_pattern.edge_count());
    record("host holds both patterns " + describe(*r), v >= eg && v >= eh,
           "value " + std::to_string(v) + " vs |E| " + std::to_string(eg) + ", " + std::to_string(eh));

    if (const auto m = static_cast<std::int64_t>(copies_of(r->red_pattern, family_matching(1)))) {
      const auto lo = std::max(m, eh);
      const auto hi = m * eh;
      record("matching sandwich " + describe(*r), lo <= v && v <= hi,
             std::to_string(lo) + " <= " + std::to_string(v) + " <= " + std::to_string(hi));
      const auto st = as_bipartite(r->blue_pattern);
      if (m >= 3 && st) {
        const auto b = matching_vs_bipartite_bounds(m, static_cast<std::int64_t>(st->first),
                                                    static_cast<std::int64_t>(st->second));
        record("matching vs bipartite bounds " + describe(*r), b.lower <= v && v <= b.upper,
               std::to_string(b.lower) + " <= " + std::to_string(v) + " <= " + std::to_string(b.upper));
      }
    }
    if (const auto st = as_bipartite(r->blue_pattern)) {
      for (std::size_t n = 1; n <= r->red_pattern.edge_count(); ++n) {
        if (!is_isomorphic_eo(r->red_pattern, family_star(n))) continue;
        const auto bound = star_vs_bipartite_upper(static_cast<std::int64_t>(n),
                                                   static_cast<std::int64_t>(st->first),
                                                   static_cast<std::int64_t>(st->second));
        record("star vs bipartite bound " + describe(*r), v <= bound,
               std::to_string(v) + " <= " + std::to_string(bound));
      }
    }
  }

  for (const auto* base : exact) {
    for (const auto* multi : exact) {
      if (base == multi) continue;
      const auto m = copies_of(multi->red_pattern, base->red_pattern);
      const auto n = copies_of(multi->blue_pattern, base->blue_pattern);
      if (m == 0 || n == 0) continue;
      const auto bound = (m + n - 1) * *base->value;
      record("copies bound " + describe(*multi) + " from " + describe(*base), *multi->value <= bound,
             std::to_string(*multi->value) + " <= " + std::to_string(m + n - 1) + " * " +
                 std::to_string(*base->value));
    }
  }

  for (const auto* g : exact) {
    if (!is_isomorphic_eo(g->red_pattern, g->blue_pattern)) continue;
    for (const auto* h : exact) {
      if (g == h || !is_isomorphic_eo(h->red_pattern, h->blue_pattern)) continue;
      if (!contains_ordered(h->red_pattern, g->red_pattern)) continue;
      record("diagonal monotonicity " + describe(*g) + " within " + describe(*h), *g->value <= *h->value,
             std::to_string(*g->value) + " <= " + std::to_string(*h->value));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

namespace {

struct DrawnHost {
  const char* name;
  std::size_t vertices;
  std::vector<Edge> edges;
  Vertex v1, v2, v3;
};

// Vertices A, B, C, ... are 0, 1, 2, ...
enum : Vertex { A, B, C, D, E, F, G };

std::vector<DrawnHost> drawn_hosts() {
  return {
      {"P6", 6, {{A, B}, {B, C}, {C, D}, {D, E}, {E, F}}, B, C, D},
      // C4 on (0,1)-(1,1)-(1,0)-(0,0) with a pendant at (1,1); numbered 0..4.
      {"C4 with pendant", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 4}}, 0, 3, 2},
      {"triangle with pendants at two corners", 5, {{A, B}, {B, C}, {A, C}, {A, D}, {B, E}}, B, A, C},
      {"triangle with a two-edge tail", 5, {{A, B}, {B, C}, {A, C}, {A, D}, {D, E}}, D, A, C},
      {"P5 with pendant at the second vertex", 6, {{A, B}, {B, C}, {C, D}, {D, F}, {B, E}}, C, D, F},
      {"P5 with pendant at the middle vertex", 6, {{A, B}, {B, C}, {C, D}, {D, F}, {C, E}}, B, C, D},
      {"P5 plus K2", 7, {{A, B}, {B, C}, {C, D}, {D, G}, {E, F}}, B, C, D},
      {"C4 with chord", 4, {{A, B}, {B, C}, {C, D}, {D, A}, {A, C}}, D, A, B},
      {"C4 plus K2", 6, {{A, B}, {B, C}, {C, D}, {D, A}, {E, F}}, D, A, B},
      {"triangle with two pendants at one corner", 5, {{A, B}, {B, C}, {A, C}, {D, A}, {E, A}}, B, A, C},
      {"star with one subdivided ray", 6, {{A, B}, {A, C}, {C, D}, {A, E}, {A, F}}, A, C, D},
      {"double broom", 6, {{A, B}, {B, C}, {C, F}, {B, D}, {C, E}}, A, B, C},
      {"P4 plus P3", 7, {{A, B}, {B, C}, {C, D}, {E, F}, {F, G}}, A, B, C},
      {"P4 plus 2K2", 8, {{A, B}, {B, C}, {C, D}, {4, 5}, {6, 7}}, A, B, C},
  };
}

bool defeats_all_orders(const DrawnHost& h, std::string& detail) {
  const EdgeOrderedGraph red_pattern = family_matching(2);
  const Edge r1(h.v1, h.v2), r2(h.v2, h.v3);
  std::vector<std::size_t> perm(h.edges.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t orders = 0;
  do {
    std::vector<Edge> ordered;
    for (auto i : perm) ordered.push_back(h.edges[i]);
    const EdgeOrderedGraph host(h.vertices, ordered);
    Coloring c(host.edge_count(), Color::Blue);
    for (Rank r = 0; r < host.edge_count(); ++r) {
      if (host.edge(r) == r1 || host.edge(r) == r2) c.colors[r] = Color::Red;
    }
    if (std::count(c.colors.begin(), c.colors.end(), Color::Red) != 2) {
      detail = "v1v2 or v2v3 is not an edge";
      return false;
    }
    for (int v = 1; v <= 3; ++v) {
      if (check_coloring(host, c, red_pattern, family_path4(v))) {
        detail = "order " + serialize_eog(host) + " variant " + std::to_string(v) + " has a monochromatic copy";
        return false;
      }
    }
    ++orders;
  } while (std::next_permutation(perm.begin(), perm.end()));
  detail = std::to_string(orders) + " orders x 3 path orders";
  return true;
}

// e_j (1-based) under dihedral relabeling (k, d) of the cycle edges.
std::size_t cycle_edge(std::size_t j, std::size_t k, int d) {
  return static_cast<std::size_t>((static_cast<int>(k) + d * static_cast<int>(j - 1) + 10) % 5);
}

// Runs the case split for one path order over all 120 cycle orders.
bool c5_case_split(int variant, std::string& detail) {
  const EdgeOrderedGraph red_pattern = family_matching(2);
  const auto blue_pattern = family_path4(variant);
  std::array<std::size_t, 5> cases{};  // all blue, then the red sets used
  std::vector<Rank> rank_of(5);
  std::iota(rank_of.begin(), rank_of.end(), 0);
  do {
    const auto host = family_cycle(5, rank_of);
    std::optional<std::array<std::size_t, 6>> e;  // e[1..5] -> cycle edge index
    for (std::size_t k = 0; k < 5 && !e; ++k) {
      for (int d : {1, -1}) {
        std::array<std::size_t, 6> map{};
        for (std::size_t j = 1; j <= 5; ++j) map[j] = cycle_edge(j, k, d);
        auto r = [&](std::size_t j) { return rank_of[map[j]]; };
        const bool hit = variant == 1   ? r(1) < r(2) && r(2) < r(3)
                         : variant == 2 ? r(1) < r(3) && r(3) < r(2)
                                        : r(2) < r(1) && r(1) < r(3);
        if (hit) {
          e = map;
          break;
        }
      }
    }
    Coloring c(5, Color::Blue);
    std::size_t which = 0;
    if (e) {
      auto r = [&](std::size_t j) { return rank_of[(*e)[j]]; };
      std::pair<std::size_t, std::size_t> red{1, 5};
      which = 1;
      if (variant == 1 && r(3) < r(4)) {
        if (r(5) < r(4)) {
          red = {1, 2};
          which = 2;
        } else {
          red = {3, 4};
          which = 3;
        }
      } else if (variant != 1) {
        which = 4;
      }
      c.colors[rank_of[(*e)[red.first]]] = Color::Red;
      c.colors[rank_of[(*e)[red.second]]] = Color::Red;
    }
    ++cases[which];
    if (check_coloring(host, c, red_pattern, blue_pattern)) {
      detail = "cycle ranks " + std::to_string(rank_of[0]) + std::to_string(rank_of[1]) +
               std::to_string(rank_of[2]) + std::to_string(rank_of[3]) + std::to_string(rank_of[4]) +
               " coloring " + c.to_rb() + " has a monochromatic copy";
      return false;
    }
  } while (std::next_permutation(rank_of.begin(), rank_of.end()));
  detail = "120 orders; all blue " + std::to_string(cases[0]);
  if (variant == 1) {
    detail += ", red e1e5 " + std::to_string(cases[1]) + ", red e1e2 " + std::to_string(cases[2]) +
              ", red e3e4 " + std::to_string(cases[3]);
  } else {
    detail += ", red e1e5 " + std::to_string(cases[4]);
  }
  return true;
}

}  // namespace

CheckReport verify_small_path_colorings() {
  CheckReport report;
  report.target = "small-path-colorings";
  for (const auto& h : drawn_hosts()) {
    report.run(std::string("host ") + h.name, [&](std::string& detail) { return defeats_all_orders(h, detail); });
  }
  for (int v = 1; v <= 3; ++v) {
    report.run("C5 case split, P4<" + std::to_string(v), [&](std::string& detail) { return c5_case_split(v, detail); });
  }
  return report;
}

}  // namespace reo
