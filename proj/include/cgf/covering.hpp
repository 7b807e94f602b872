#pragma once

// Interval-lemma propagation over additive faces.

#include <array>
#include <vector>

#include "cgf/additivity.hpp"

namespace cgf {

/// The three open projections of an additive 2-dimensional face, reduced mod 1.
struct CoveredSeed {
  std::size_t face;
  std::array<OpenInterval, 3> intervals;
};

enum class MoveKind { translation, reflection };

/// translation: to = from + param; reflection: to = param - from.
struct Move {
  OpenInterval from;
  OpenInterval to;
  MoveKind kind;
  QNum param;
  std::size_t face;
};

struct CoveredComponent {
  std::vector<OpenInterval> intervals;
  std::vector<std::size_t> pieces;
  std::vector<Move> connections;
};

struct CoveringResult {
  std::vector<CoveredComponent> components;
  std::vector<OpenInterval> uncovered;
  /// Component of each piece (x_i, x_{i+1}) of P, or -1.
  std::vector<int> piece_component;
};

std::vector<CoveredSeed> directly_covered(const AdditivityReport& report);
std::vector<Move> edge_connections(const AdditivityReport& report);
/// Closure of the seeds under the moves. Only whole pieces count as covered.
CoveringResult components(const ComplexP& P, const std::vector<CoveredSeed>& seeds,
                          const std::vector<Move>& moves);
CoveringResult covering(const AdditivityReport& report);

}  // namespace cgf
