#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace cgf::testkit {

PwlFunction gmic_half() {
  return continuous_pwl({{QNum(0), QNum(0)}, {QNum::ratio(1, 2), QNum(1)}}, QNum::ratio(1, 2), "gmic");
}

PwlFunction two_slope_half() {
  return continuous_pwl({{QNum(0), QNum(0)},
                         {QNum::ratio(1, 8), QNum::ratio(3, 4)},
                         {QNum::ratio(3, 8), QNum::ratio(1, 4)},
                         {QNum::ratio(1, 2), QNum(1)}},
                        QNum::ratio(1, 2), "two_slope");
}

PwlFunction midpoint_pair() {
  return linear_combination(QNum::ratio(1, 2), gmic_half(), QNum::ratio(1, 2), two_slope_half())
      .with_name("pi0");
}

PwlFunction half_difference_pair() {
  return linear_combination(QNum::ratio(1, 2), gmic_half(), QNum::ratio(-1, 2), two_slope_half())
      .with_name("pi0_bar");
}

PwlFunction mutate_value(const PwlFunction& pi, std::size_t i, const QNum& delta) {
  auto rows = pi.rows();
  rows[i].value += delta;
  return PwlFunction::from_rows(rows, pi.f(), pi.special_intervals(), pi.name() + "_mutated");
}

QNum random_rational(std::mt19937_64& rng, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(0, d);
  return QNum::ratio(num(rng), d);
}

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

QNum random_value(std::mt19937_64& rng) {
  static const long dens[] = {2, 4, 8};
  const long d = dens[pick(rng, 0, 2)];
  return QNum::ratio(pick(rng, 0, d), d);
}

}  // namespace

PwlFunction random_symmetric_pwl(std::mt19937_64& rng, std::size_t max_pieces) {
  while (true) {
    const long q = pick(rng, 2, 10);
    const long fk = pick(rng, 1, q - 1);
    // Breakpoint indices k/q closed under k -> (fk - k) mod q.
    std::vector<long> ks{0, fk};
    for (long k = 1; k < q; ++k) {
      if (pick(rng, 0, 2) == 0) {
        ks.push_back(k);
        ks.push_back(((fk - k) % q + q) % q);
      }
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    if (ks.size() > max_pieces) continue;
    const bool continuous = pick(rng, 0, 1) == 0;
    const std::size_t n = ks.size();
    auto index_of = [&](long k) {
      return static_cast<std::size_t>(std::lower_bound(ks.begin(), ks.end(), k) - ks.begin());
    };
    auto mirror = [&](std::size_t i) { return index_of(((fk - ks[i]) % q + q) % q); };
    std::vector<BreakpointRow> rows(n);
    std::vector<bool> set(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (set[i]) continue;
      const std::size_t j = mirror(i);
      rows[i].x = QNum::ratio(ks[i], q);
      rows[j].x = QNum::ratio(ks[j], q);
      QNum v = random_value(rng);
      if (i == 0) v = QNum(0);
      if (i == j) v = QNum::ratio(1, 2);
      QNum left = continuous ? v : random_value(rng);
      QNum right = continuous ? v : random_value(rng);
      if (i == j) right = QNum(1) - left;
      rows[i].value = v;
      rows[j].value = QNum(1) - v;
      // pi(x-) + pi((f-x)+) = 1.
      rows[i].left = left;
      rows[j].right = QNum(1) - left;
      rows[i].right = right;
      rows[j].left = QNum(1) - right;
      set[i] = set[j] = true;
    }
    if (continuous) {
      // Continuous functions are determined by values; limits must match.
      bool ok = true;
      for (std::size_t i = 0; i < n; ++i) ok = ok && rows[i].left == rows[i].value && rows[i].right == rows[i].value;
      if (!ok) continue;
    }
    return PwlFunction::from_rows(rows, QNum::ratio(fk, q), {}, "random");
  }
}

PwlFunction random_pwl(std::mt19937_64& rng, std::size_t max_pieces) {
  const long q = pick(rng, 2, 10);
  std::vector<long> ks{0};
  for (long k = 1; k < q && ks.size() < max_pieces; ++k) {
    if (pick(rng, 0, 1) == 0) ks.push_back(k);
  }
  std::vector<BreakpointRow> rows;
  for (long k : ks) {
    rows.push_back({QNum::ratio(k, q), random_value(rng), random_value(rng), random_value(rng)});
  }
  return PwlFunction::from_rows(rows, QNum::ratio(pick(rng, 1, q - 1), q), {}, "random");
}

bool oracle_minimal(const PwlFunction& pi) {
  Int q = pi.f().rational_part().get_den();
  for (const auto& r : pi.rows()) {
    if (!r.x.is_rational()) return false;
    const Int d = r.x.rational_part().get_den();
    q = q * d / gcd(q, d);
  }
  const long qq = q.get_si();
  const QNum delta = QNum(Rat(1, 1000000)) / QNum(qq);
  static const int dirs[13][2] = {{0, 0},  {1, 0},   {1, 1},  {0, 1},  {-1, 2},  {-1, 1}, {-2, 1},
                                  {-1, 0}, {-1, -1}, {0, -1}, {1, -2}, {1, -1},  {2, -1}};
  if (!pi.eval(QNum(0)).is_zero()) return false;
  const QNum one(1);
  const QNum& f = pi.f();
  std::vector<QNum> grid;
  for (long i = 0; i < qq; ++i) grid.push_back(QNum::ratio(i, qq));
  for (const auto& x : grid) {
    for (int s = -1; s <= 1; ++s) {
      const QNum u = x + QNum(s) * delta;
      const QNum v = pi.eval(u);
      if (v.sign() < 0 || one < v) return false;
      if (v + pi.eval(f - u) != one) return false;
    }
  }
  for (const auto& x : grid) {
    for (const auto& y : grid) {
      for (const auto& d : dirs) {
        const QNum u = x + QNum(d[0]) * delta;
        const QNum v = y + QNum(d[1]) * delta;
        if (pi.delta(u, v).sign() < 0) return false;
      }
    }
  }
  return true;
}

AffineInstance random_affine_instance(std::mt19937_64& rng) {
  while (true) {
    std::vector<Point2> pts;
    const long k = pick(rng, 3, 8);
    for (long i = 0; i < k; ++i) pts.push_back({random_rational(rng, 20), random_rational(rng, 20)});
    auto poly = convex_hull(pts);
    if (poly.size() < 3) continue;
    const std::size_t n = poly.size();
    const std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
    const Point2& v = poly[i];
    const Point2& next = poly[(i + 1) % n];
    const Point2& prev = poly[(i + n - 1) % n];
    // Inward normals of the edges at v (counter-clockwise polygon).
    const QNum n1x = -(next.y - v.y), n1y = next.x - v.x;
    const QNum n0x = -(v.y - prev.y), n0y = v.x - prev.x;
    QNum a, b;
    if (pick(rng, 0, 1) == 0) {
      a = n1x;
      b = n1y;
    } else {
      const QNum l = QNum(pick(rng, 1, 9)), m = QNum(pick(rng, 1, 9));
      a = l * n0x + m * n1x;
      b = l * n0y + m * n1y;
    }
    return {poly, a, b, -(a * v.x + b * v.y)};
  }
}

bool lemma_a1_holds(const AffineInstance& inst, const Point2& p) {
  std::vector<Point2> zeros;
  std::optional<QNum> m;
  for (const auto& v : inst.polygon) {
    const QNum g = inst.g(v);
    if (g.is_zero()) {
      zeros.push_back(v);
    } else if (!m || g < *m) {
      m = g;
    }
  }
  const QNum g = inst.g(p);
  if (g.sign() < 0) return false;
  if (!m) return true;
  // S is a vertex or an edge.
  const Point2& a = zeros.front();
  const Point2& b = zeros.back();
  const QNum d2 = squared_distance_to_segment(p, a, b);
  const QNum lhs = QNum(4) * g * g;
  return d2 * *m * *m <= lhs;
}

std::vector<Point2> sample_polygon(std::mt19937_64& rng, const std::vector<Point2>& poly, std::size_t count) {
  std::vector<Point2> out(poly.begin(), poly.end());
  const std::size_t n = poly.size();
  while (out.size() < count) {
    if (pick(rng, 0, 1) == 0) {
      const std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(n) - 1));
      const QNum t = random_rational(rng, 50);
      const Point2& a = poly[i];
      const Point2& b = poly[(i + 1) % n];
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    } else {
      QNum total, x, y;
      for (const auto& v : poly) {
        const QNum w(pick(rng, 0, 10));
        total += w;
        x += w * v.x;
        y += w * v.y;
      }
      if (total.is_zero()) continue;
      out.push_back({x / total, y / total});
    }
  }
  return out;
}

}  // namespace cgf::testkit
