#include "cgf/complex2d.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgf {

bool Range::relint_meets(const QNum& a, const QNum& b) const {
  if (is_point()) return a < lo && lo < b;
  return max(lo, a) < min(hi, b);
}

bool Face2D::contains(const Point2& p) const {
  const auto& v = vertices;
  if (dim == 0) return p == v[0];
  if (dim == 1) {
    return cross(v[0], v[1], p).is_zero() && min(v[0].x, v[1].x) <= p.x &&
           p.x <= max(v[0].x, v[1].x) && min(v[0].y, v[1].y) <= p.y &&
           p.y <= max(v[0].y, v[1].y);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p).sign() < 0) return false;
  }
  return true;
}

bool Face2D::relint_contains(const Point2& p) const {
  const auto& v = vertices;
  if (dim == 0) return p == v[0];
  if (dim == 1) return contains(p) && p != v[0] && p != v[1];
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (cross(v[i], v[(i + 1) % v.size()], p).sign() <= 0) return false;
  }
  return true;
}

namespace {

Range range_of(const std::vector<Point2>& pts, int which) {
  auto coord = [which](const Point2& p) {
    if (which == 0) return p.x;
    if (which == 1) return p.y;
    return p.x + p.y;
  };
  QNum lo = coord(pts[0]);
  QNum hi = lo;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const QNum c = coord(pts[i]);
    if (c < lo) lo = c;
    if (hi < c) hi = c;
  }
  return {lo, hi};
}

std::optional<Face2D> polygon(const QNum& a, const QNum& b, const QNum& c, const QNum& d,
                              const QNum& e, const QNum& g) {
  // x in [a,b], y in [c,d], x+y in [e,g]; vertices lie on two of these lines.
  if (b + d < e || g < a + c) return std::nullopt;
  std::vector<Point2> cand;
  const QNum xs[2] = {a, b};
  const QNum ys[2] = {c, d};
  const QNum ss[2] = {e, g};
  for (const auto& x : xs) {
    for (const auto& y : ys) cand.push_back({x, y});
    for (const auto& s : ss) cand.push_back({x, s - x});
  }
  for (const auto& y : ys) {
    for (const auto& s : ss) cand.push_back({s - y, y});
  }
  std::vector<Point2> feasible;
  for (auto& p : cand) {
    const QNum s = p.x + p.y;
    if (a <= p.x && p.x <= b && c <= p.y && p.y <= d && e <= s && s <= g) {
      feasible.push_back(std::move(p));
    }
  }
  if (feasible.empty()) return std::nullopt;
  Face2D F;
  F.vertices = convex_hull(std::move(feasible));
  F.dim = F.vertices.size() >= 3 ? 2 : static_cast<int>(F.vertices.size()) - 1;
  F.p1 = range_of(F.vertices, 0);
  F.p2 = range_of(F.vertices, 1);
  F.p3 = range_of(F.vertices, 2);
  return F;
}

bool canonical(const ComplexP& P, const Face2D& F) {
  return P.minimal_face(F.p1.lo, F.p1.hi) == F.I && P.minimal_face(F.p2.lo, F.p2.hi) == F.J &&
         P.minimal_face(F.p3.lo, F.p3.hi) == F.K;
}

std::vector<PFace> unit_faces(std::size_t n) {
  std::vector<PFace> out;
  for (std::size_t k = 0; k <= n; ++k) {
    out.push_back({k, k});
    if (k < n) out.push_back({k, k + 1});
  }
  return out;
}

}  // namespace

std::optional<Face2D> make_face(const ComplexP& P, const PFace& I, const PFace& J,
                                const PFace& K) {
  auto F = polygon(P.lo(I), P.hi(I), P.lo(J), P.hi(J), P.lo(K), P.hi(K));
  if (F) {
    F->I = I;
    F->J = J;
    F->K = K;
  }
  return F;
}

DeltaComplex::DeltaComplex(ComplexP P, std::vector<Face2D> faces)
    : P_(std::move(P)), faces_(std::move(faces)) {
  std::sort(faces_.begin(), faces_.end(),
            [](const Face2D& a, const Face2D& b) { return a.triple() < b.triple(); });
  for (std::size_t i = 0; i < faces_.size(); ++i) index_.emplace(faces_[i].triple(), i);
}

std::optional<std::size_t> DeltaComplex::find(const PFace& I, const PFace& J,
                                              const PFace& K) const {
  auto it = index_.find({I, J, K});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DeltaComplex::face_of_point(const QNum& x, const QNum& y) const {
  const QNum one(1);
  if (x.sign() < 0 || one < x || y.sign() < 0 || one < y) {
    throw std::invalid_argument("point outside the fundamental domain");
  }
  auto F = make_face(P_, P_.minimal_face(x), P_.minimal_face(y), P_.minimal_face(x + y));
  const PFace I = P_.minimal_face(F->p1.lo, F->p1.hi);
  const PFace J = P_.minimal_face(F->p2.lo, F->p2.hi);
  const PFace K = P_.minimal_face(F->p3.lo, F->p3.hi);
  auto idx = find(I, J, K);
  if (!idx) throw std::logic_error("face lookup failed");
  return *idx;
}

std::string DeltaComplex::label(const Face2D& F) const {
  return "F(" + P_.label(F.I) + ", " + P_.label(F.J) + ", " + P_.label(F.K) + ")";
}

std::vector<Point2> DeltaComplex::vertices() const {
  std::vector<Point2> out;
  for (const auto& F : faces_) {
    if (F.dim == 0) out.push_back(F.vertices[0]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DeltaComplex delta_p(const ComplexP& P, Exec exec) {
  const std::size_t n = P.size();
  std::vector<QNum> ext;
  for (std::size_t k = 0; k <= 2 * n; ++k) ext.push_back(P.ext(k));
  const auto faces = unit_faces(n);
  const long m = static_cast<long>(faces.size());
  std::vector<std::vector<Face2D>> per_i(faces.size());

#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
  for (long i = 0; i < m; ++i) {
    const PFace& I = faces[i];
    for (const PFace& J : faces) {
      const QNum s_lo = ext[I.lo] + ext[J.lo];
      const QNum s_hi = ext[I.hi] + ext[J.hi];
      // Largest k with ext[k] <= s_lo; smallest k with ext[k] >= s_hi.
      const std::size_t k_lo =
          static_cast<std::size_t>(std::upper_bound(ext.begin(), ext.end(), s_lo) - ext.begin()) - 1;
      const std::size_t k_hi =
          static_cast<std::size_t>(std::lower_bound(ext.begin(), ext.end(), s_hi) - ext.begin());
      for (std::size_t k = k_lo; k <= k_hi && k <= 2 * n; ++k) {
        for (const PFace K : {PFace{k, k}, PFace{k, k + 1}}) {
          if (K.hi > k_hi || K.hi > 2 * n) continue;
          auto F = polygon(ext[I.lo], ext[I.hi], ext[J.lo], ext[J.hi], ext[K.lo], ext[K.hi]);
          if (!F) continue;
          F->I = I;
          F->J = J;
          F->K = K;
          if (canonical(P, *F)) per_i[i].push_back(std::move(*F));
        }
      }
    }
  }
  std::vector<Face2D> all;
  for (auto& v : per_i) {
    for (auto& F : v) all.push_back(std::move(F));
  }
  return DeltaComplex(P, std::move(all));
}

DeltaComplex delta_p_reference(const ComplexP& P) {
  const std::size_t n = P.size();
  const auto unit = unit_faces(n);
  const auto two = unit_faces(2 * n);
  std::vector<Face2D> all;
  for (const auto& I : unit) {
    for (const auto& J : unit) {
      for (const auto& K : two) {
        auto F = make_face(P, I, J, K);
        if (!F) continue;
        // Keep one copy of each point set: the triple of minimal faces.
        bool seen = false;
        for (const auto& G : all) {
          if (G.vertices == F->vertices) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          F->I = P.minimal_face(F->p1.lo, F->p1.hi);
          F->J = P.minimal_face(F->p2.lo, F->p2.hi);
          F->K = P.minimal_face(F->p3.lo, F->p3.hi);
          all.push_back(std::move(*F));
        }
      }
    }
  }
  return DeltaComplex(P, std::move(all));
}

int n_f(const Face2D& F, const std::vector<OpenInterval>& special) {
  int count = 0;
  for (const Range* r : {&F.p1, &F.p2, &F.p3}) {
    const QNum z(Rat(r->lo.floor()));
    bool meets = false;
    for (const auto& s : special) {
      for (const QNum& shift : {z, z + QNum(1), z - QNum(1)}) {
        if (r->relint_meets(s.lo + shift, s.hi + shift)) meets = true;
      }
    }
    if (meets) ++count;
  }
  return count;
}

}  // namespace cgf
