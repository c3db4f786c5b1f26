#include "reo/ramsey.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace reo {

namespace {

constexpr std::int64_t kParameterCap = 1'000'000;

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::InvalidParameter, message);
}

}  // namespace

BoundReport matching_vs_bipartite_bounds(std::int64_t m, std::int64_t s, std::int64_t t) {
  require(m >= 3, "m must be at least 3");
  require(s >= 1 && t >= s, "need t >= s >= 1");
  require(m <= kParameterCap && t <= kParameterCap, "parameters above 10^6");
  const std::int64_t c = t >= m ? t + m - 1 : 2 * m - 2;
  const std::int64_t choose = (m - 1) * (m - 2) / 2;
  BoundReport r;
  r.formula_id = "mK2-vs-Kst";
  r.parameters = {{"m", m}, {"s", s}, {"t", t}, {"c", c}};
  r.lower = std::max({m, s * t, c * s - choose});
  r.upper = std::min(m * s * t, m * m + m * (s + t - 2) + (s - 1) * (t - 1));
  if (r.lower > r.upper) {
    throw Error(ErrorKind::ClaimViolated, "lower " + std::to_string(r.lower) + " exceeds upper " +
                                              std::to_string(r.upper) + " at m=" + std::to_string(m) +
                                              " s=" + std::to_string(s) + " t=" + std::to_string(t));
  }
  return r;
}

std::int64_t star_vs_bipartite_upper(std::int64_t n, std::int64_t s, std::int64_t t) {
  require(n >= 1 && s >= 1 && t >= 1, "n, s, t must be positive");
  require(n <= kParameterCap && s <= kParameterCap && t <= kParameterCap, "parameters above 10^6");
  return s * s * (n - 1) + s * t;
}

DiagonalHost bipartite_diagonal_host(std::uint64_t s, std::uint64_t t) {
  require(s >= 2 && t >= s, "need t >= s >= 2");
  if (s > 60 || t > (std::uint64_t{1} << 40)) throw Error(ErrorKind::Overflow, "host size exceeds 64 bits");
  DiagonalHost h;
  h.part_a = 2 * s * s;
  const long double b = std::numbers::e_v<long double> * std::ldexp(static_cast<long double>(t), static_cast<int>(s + 1));
  if (b >= 9.0e18L) throw Error(ErrorKind::Overflow, "host size exceeds 64 bits");
  h.part_b = static_cast<std::uint64_t>(std::ceil(b));
  if (__builtin_mul_overflow(h.part_a, h.part_b, &h.edge_bound)) {
    throw Error(ErrorKind::Overflow, "edge bound exceeds 64 bits");
  }
  return h;
}

}  // namespace reo
