#include "cgf/geometry.hpp"

#include <algorithm>

namespace cgf {

QNum cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<Point2> convex_hull(std::vector<Point2> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  // Andrew's monotone chain.
  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p).sign() <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = pts.size() - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]).sign() <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

QNum squared_distance_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const QNum dx = b.x - a.x;
  const QNum dy = b.y - a.y;
  const QNum len2 = dx * dx + dy * dy;
  auto dist2 = [](const Point2& u, const Point2& v) {
    const QNum ex = u.x - v.x;
    const QNum ey = u.y - v.y;
    return ex * ex + ey * ey;
  };
  if (len2.is_zero()) return dist2(p, a);
  const QNum t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
  if (t.sign() <= 0) return dist2(p, a);
  if (t >= QNum(1)) return dist2(p, b);
  return dist2(p, Point2{a.x + t * dx, a.y + t * dy});
}

}  // namespace cgf
