#pragma once

#include <random>
#include <vector>

#include "cgf/geometry.hpp"
#include "cgf/pwl.hpp"

namespace cgf::testkit {

/// Gomory mixed-integer function with f = 1/2.
PwlFunction gmic_half();
/// Continuous 2-slope function through (0,0), (1/8,3/4), (3/8,1/4), (1/2,1), f = 1/2.
PwlFunction two_slope_half();
/// (pi1 + pi2)/2 and (pi1 - pi2)/2 for the two functions above.
PwlFunction midpoint_pair();
PwlFunction half_difference_pair();

/// pi with the value at breakpoint i moved by delta.
PwlFunction mutate_value(const PwlFunction& pi, std::size_t i, const QNum& delta);

/// Random rational function with at most max_pieces breakpoints in [0,1), f a
/// breakpoint, symmetric by construction about f; possibly discontinuous.
PwlFunction random_symmetric_pwl(std::mt19937_64& rng, std::size_t max_pieces);
/// Random function with arbitrary values and limits.
PwlFunction random_pwl(std::mt19937_64& rng, std::size_t max_pieces);

/// Minimality by sampling: exact checks on the grid (1/q)Z^2 with q a multiple of
/// all denominators, and at small offsets in 12 directions around each grid point.
bool oracle_minimal(const PwlFunction& pi);

/// A convex polygon in [0,1]^2 and the affine g(x, y) = a x + b y + c that is
/// nonnegative on it and vanishes on a vertex or an edge.
struct AffineInstance {
  std::vector<Point2> polygon;
  QNum a;
  QNum b;
  QNum c;
  QNum g(const Point2& p) const { return a * p.x + b * p.y + c; }
};
AffineInstance random_affine_instance(std::mt19937_64& rng);
/// Lemma A.1 inequality at p, decided exactly via (2 g / m)^2 >= d^2.
bool lemma_a1_holds(const AffineInstance& inst, const Point2& p);
/// Random points of the polygon: vertices, edge points and interior combinations.
std::vector<Point2> sample_polygon(std::mt19937_64& rng, const std::vector<Point2>& poly, std::size_t count);

QNum random_rational(std::mt19937_64& rng, long max_den);

}  // namespace cgf::testkit
