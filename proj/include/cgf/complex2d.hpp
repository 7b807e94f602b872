#pragma once

// The two-dimensional complex Delta P of faces F(I, J, K).

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cgf/exec.hpp"
#include "cgf/geometry.hpp"
#include "cgf/pwl.hpp"

namespace cgf {

/// Projection of a face onto one coordinate: [lo, hi], a point when lo == hi.
/// The projection of the relative interior is the open interval (lo, hi).
struct Range {
  QNum lo;
  QNum hi;

  bool is_point() const { return lo == hi; }
  /// Projection of relint meets the open interval (a, b).
  bool relint_meets(const QNum& a, const QNum& b) const;
};

using Triple = std::tuple<PFace, PFace, PFace>;

struct Face2D {
  PFace I;
  PFace J;
  PFace K;
  int dim = 0;
  /// Counter-clockwise for 2-dimensional faces, sorted otherwise.
  std::vector<Point2> vertices;
  Range p1;
  Range p2;
  Range p3;

  Triple triple() const { return {I, J, K}; }
  bool contains(const Point2& p) const;
  bool relint_contains(const Point2& p) const;
  /// F(I,J,K) and F(J,I,K) are mirror images; this is the smaller of the two.
  bool is_lex_representative() const { return std::tie(I, J) <= std::tie(J, I); }
};

/// The polygon F(I, J, K) of P, or nothing when it is empty.
std::optional<Face2D> make_face(const ComplexP& P, const PFace& I, const PFace& J, const PFace& K);

class DeltaComplex {
 public:
  DeltaComplex() = default;
  DeltaComplex(ComplexP P, std::vector<Face2D> faces);

  const ComplexP& complex() const { return P_; }
  const std::vector<Face2D>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  const Face2D& operator[](std::size_t i) const { return faces_[i]; }

  std::optional<std::size_t> find(const PFace& I, const PFace& J, const PFace& K) const;
  /// The face whose relative interior contains (x, y), with x, y in [0, 1].
  std::size_t face_of_point(const QNum& x, const QNum& y) const;
  std::string label(const Face2D& F) const;
  /// Distinct vertices over all faces.
  std::vector<Point2> vertices() const;

 private:
  ComplexP P_;
  std::vector<Face2D> faces_;
  std::map<Triple, std::size_t> index_;
};

/// All nonempty faces for I, J over [0, 1] and K over [0, 2], each point set
/// once, in (I, J, K) order. Pruned candidate search.
DeltaComplex delta_p(const ComplexP& P, Exec exec = Exec::parallel);
/// Same result by trying every triple; small complexes only.
DeltaComplex delta_p_reference(const ComplexP& P);

/// Number of projections of relint(F) meeting the special intervals (mod 1).
int n_f(const Face2D& F, const std::vector<OpenInterval>& special);

}  // namespace cgf
