#pragma once

// The arrowing relation F -> (G, H): every red/blue coloring of F has a red
// ordered copy of G or a blue ordered copy of H.

#include "reo/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace reo {

enum class Color : std::uint8_t { Red, Blue, Unassigned };

struct Coloring {
  std::vector<Color> colors;  // indexed by host rank

  Coloring() = default;
  explicit Coloring(std::size_t edges, Color fill = Color::Unassigned) : colors(edges, fill) {}

  std::size_t size() const { return colors.size(); }
  bool complete() const;
  Coloring flipped() const;

  /// One character per rank: 'R', 'B' ('?' for unassigned).
  std::string to_rb() const;
  static Coloring from_rb(std::string_view rb);

  /// Colour classes with ranks compacted; every host vertex kept.
  EdgeOrderedGraph color_class(const EdgeOrderedGraph& host, Color c) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ArrowVerdict {
  bool arrows = false;
  std::optional<Coloring> counterexample;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

struct ArrowOptions {
  std::size_t exhaustive_cap = 40;  // at most 64
  std::optional<std::uint64_t> node_budget;
  std::size_t threads = 1;
  std::size_t split_depth = 6;  // prefix length handed to each parallel task
};

/// Branch-and-prune search over colorings in host rank order. Throws
/// TooLargeForExhaustive above the cap, Indeterminate when the node budget
/// runs out.
ArrowVerdict arrows(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                    const EdgeOrderedGraph& blue_pattern, const ArrowOptions& options = {});

inline constexpr std::size_t kNaiveCap = 20;

/// Tries all 2^m complete colorings. Oracle for `arrows`.
ArrowVerdict arrows_naive(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                          const EdgeOrderedGraph& blue_pattern);

/// True iff the coloring has a red copy of `red_pattern` or a blue copy of `blue_pattern`.
bool check_coloring(const EdgeOrderedGraph& host, const Coloring& coloring,
                    const EdgeOrderedGraph& red_pattern, const EdgeOrderedGraph& blue_pattern);

struct SampleReport {
  std::uint64_t samples = 0;
  std::uint64_t failures = 0;
  std::uint64_t seed = 0;
  std::optional<Coloring> first_failure;
};

/// Uniform random colorings from a seeded mt19937_64; a failure is a
/// coloring with neither monochromatic target.
SampleReport sample_colorings(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                              const EdgeOrderedGraph& blue_pattern, std::uint64_t samples,
                              std::uint64_t seed);

/// JSON certificate for an exhaustive verdict.
std::string certificate_json(const EdgeOrderedGraph& host, const EdgeOrderedGraph& red_pattern,
                             const EdgeOrderedGraph& blue_pattern, const ArrowVerdict& verdict);

struct Certificate {
  EdgeOrderedGraph host;
  EdgeOrderedGraph red_pattern;
  EdgeOrderedGraph blue_pattern;
  bool arrows = false;
  std::optional<Coloring> counterexample;
  std::uint64_t nodes = 0;
};

Certificate parse_certificate(std::string_view json);

/// Re-checks a certificate from its own contents. A non-arrowing claim is
/// confirmed by its counterexample; an arrowing claim is re-derived with
/// arrows_naive (hosts within kNaiveCap) or arrows.
bool verify_certificate(const Certificate& cert);

std::string sample_report_json(const SampleReport& report);

}  // namespace reo
