#pragma once

// Exact planar geometry over Q(sqrt 2).

#include <vector>

#include "cgf/qnum.hpp"

namespace cgf {

struct Point2 {
  QNum x;
  QNum y;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend std::strong_ordering operator<=>(const Point2& p, const Point2& q) {
    if (auto c = p.x <=> q.x; c != 0) return c;
    return p.y <=> q.y;
  }
};

/// Twice the signed area of (o, a, b).
QNum cross(const Point2& o, const Point2& a, const Point2& b);

/// Extreme points in counter-clockwise order, starting from the smallest (x, y).
/// Collinear points are dropped.
std::vector<Point2> convex_hull(std::vector<Point2> points);

/// Squared Euclidean distance from p to the segment [a, b].
QNum squared_distance_to_segment(const Point2& p, const Point2& a, const Point2& b);

}  // namespace cgf
