#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cgf/catalog.hpp"
#include "cgf/complex2d.hpp"
#include "support.hpp"

using namespace cgf;

namespace {

QNum q(const char* s) { return parse_qnum(s); }

void expect_same(const DeltaComplex& a, const DeltaComplex& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].triple(), b[i].triple());
    EXPECT_EQ(a[i].vertices, b[i].vertices);
    EXPECT_EQ(a[i].dim, b[i].dim);
  }
}

ComplexP random_complex(std::mt19937_64& rng) {
  std::set<QNum> xs{QNum(0)};
  const long n = 1 + static_cast<long>(rng() % 6);
  for (long i = 0; i < n; ++i) {
    const QNum x = testkit::random_rational(rng, 12);
    if (x < QNum(1)) xs.insert(x);
  }
  return ComplexP({xs.begin(), xs.end()});
}

}  // namespace

TEST(Complex2d, MatchesReferenceOnRandomComplexes) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 40; ++t) {
    const auto P = random_complex(rng);
    expect_same(delta_p(P, Exec::serial), delta_p_reference(P));
  }
}

TEST(Complex2d, IrrationalBreakpointsMatchReference) {
  const ComplexP P({QNum(0), q("1/7*sqrt2"), q("1/2"), q("-1/3*sqrt2 + 1")});
  expect_same(delta_p(P, Exec::serial), delta_p_reference(P));
}

TEST(Complex2d, SerialEqualsParallel) {
  const auto& P = kzh_function().complex();
  expect_same(delta_p(P, Exec::serial), delta_p(P, Exec::parallel));
}

TEST(Complex2d, KzhFaceCount) {
  // Frozen from delta_p_reference; stable across runs.
  const auto dc = delta_p(kzh_function().complex());
  EXPECT_EQ(dc.size(), 18155u);
  EXPECT_EQ(delta_p(kzh_function().complex()).size(), dc.size());
}

TEST(Complex2d, PsiGrid) {
  // Vertices of the grid x = x_i, y = x_j, x + y = x_k on [0,1]^2.
  const auto& psi = psi_function();
  const auto dc = delta_p(psi.complex());
  const auto verts = dc.vertices();
  std::set<Point2> oracle;
  std::vector<QNum> xs = psi.complex().breakpoints();
  xs.push_back(QNum(1));
  std::vector<QNum> sums;
  for (const auto& x : xs) sums.push_back(x), sums.push_back(x + QNum(1));
  for (const auto& a : xs) {
    for (const auto& b : xs) oracle.insert({a, b});
    for (const auto& s : sums) {
      const QNum y = s - a;
      if (QNum(0) <= y && y <= QNum(1)) oracle.insert({a, y});
      if (QNum(0) <= y && y <= QNum(1)) oracle.insert({y, a});
    }
  }
  EXPECT_EQ(std::set<Point2>(verts.begin(), verts.end()), oracle);
}

TEST(Complex2d, TableB2FirstFace) {
  const auto& pi = kzh_function();
  const auto dc = delta_p(pi.complex());
  // 2 x_1 < x_2, so x + y stays in [x_1, x_2] and the face is the triangle at (x_1, x_1).
  const auto idx = dc.find({1, 2}, {1, 2}, {1, 2});
  ASSERT_TRUE(idx.has_value());
  const auto& F = dc[*idx];
  const QNum x1 = pi.breakpoint(1);
  const QNum x2 = pi.breakpoint(2);
  EXPECT_EQ(F.dim, 2);
  const std::set<Point2> vs(F.vertices.begin(), F.vertices.end());
  EXPECT_EQ(vs, (std::set<Point2>{{x1, x1}, {x1, x2 - x1}, {x2 - x1, x1}}));
}

TEST(Complex2d, EmptyTriple) {
  const auto& P = psi_function().complex();
  // I = [0,1/8], J = [0,1/8], K = {1/2}: x + y <= 1/4.
  EXPECT_FALSE(make_face(P, {0, 1}, {0, 1}, {3, 3}).has_value());
  EXPECT_TRUE(make_face(P, {0, 1}, {0, 1}, {1, 1}).has_value());
}

TEST(Complex2d, FaceOfPoint) {
  const auto& pi = kzh_function();
  const auto& k = kzh_params();
  const auto dc = delta_p(pi.complex());
  EXPECT_EQ(dc[dc.face_of_point(k.l, k.f - k.l)].dim, 0);
  const QNum e = QNum::ratio(1, 10000);
  const auto& F = dc[dc.face_of_point(k.l + e, k.f - k.l - e)];
  EXPECT_EQ(F.dim, 1);
  EXPECT_EQ(F.p3.lo, k.f);
  EXPECT_EQ(F.p3.hi, k.f);
  EXPECT_EQ(F.p1.lo, k.l);
  EXPECT_EQ(F.p1.hi, k.u);
  EXPECT_EQ(n_f(F, pi.special_intervals()), 2);

  const auto& V = dc[dc.face_of_point(pi.breakpoint(3), pi.breakpoint(5))];
  EXPECT_EQ(V.dim, 0);
  const auto& C = dc[dc.face_of_point(q("1/1000"), q("1/1001"))];
  EXPECT_EQ(C.dim, 2);
  EXPECT_TRUE(C.relint_contains({q("1/1000"), q("1/1001")}));
}

TEST(Complex2d, NfBounds) {
  const auto& pi = kzh_function();
  const auto dc = delta_p(pi.complex());
  int zero = 0;
  for (const auto& F : dc.faces()) {
    const int n = n_f(F, pi.special_intervals());
    EXPECT_NE(n, 3);
    zero += n == 0;
    if (n == 0) {
      for (const auto& I : pi.special_intervals()) {
        EXPECT_FALSE(F.p1.relint_meets(I.lo, I.hi));
      }
    }
  }
  EXPECT_GT(zero, 0);
}

TEST(Complex2d, FaceInvariants) {
  const auto dc = delta_p(psi_function().complex());
  for (const auto& F : dc.faces()) {
    ASSERT_EQ(F.dim == 0, F.vertices.size() == 1);
    if (F.dim == 1) {
      EXPECT_EQ(F.vertices.size(), 2u);
    }
    if (F.dim == 2) {
      EXPECT_GE(F.vertices.size(), 3u);
      // Strictly convex, counter-clockwise.
      const auto& v = F.vertices;
      for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_GT(cross(v[i], v[(i + 1) % v.size()], v[(i + 2) % v.size()]).sign(), 0);
      }
    }
    for (const auto& p : F.vertices) {
      EXPECT_TRUE(F.contains(p));
      EXPECT_LE(F.p1.lo, p.x);
      EXPECT_LE(p.x, F.p1.hi);
      EXPECT_LE(F.p3.lo, p.x + p.y);
      EXPECT_LE(p.x + p.y, F.p3.hi);
    }
  }
}

TEST(Complex2d, RelativeInteriorsArePartition) {
  const auto dc = delta_p(psi_function().complex());
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const QNum x = testkit::random_rational(rng, 32);
    const QNum y = testkit::random_rational(rng, 32);
    int hits = 0;
    for (const auto& F : dc.faces()) hits += F.relint_contains({x, y});
    EXPECT_EQ(hits, 1) << x << ", " << y;
  }
}
