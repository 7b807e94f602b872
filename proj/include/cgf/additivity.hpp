#pragma once

// Limit slacks on Delta P, minimality, additive faces and E-containment.

#include <optional>
#include <string>
#include <vector>

#include "cgf/complex2d.hpp"
#include "cgf/exec.hpp"
#include "cgf/pwl.hpp"

namespace cgf {

/// Delta pi_F(u, v) from the one-sided limits of pi on the projections of F.
/// The breakpoints of pi must be contained in the complex of F.
QNum slack_at(const PwlFunction& pi, const ComplexP& P, const Face2D& F, const Point2& v);
std::vector<QNum> vertex_slacks(const PwlFunction& pi, const ComplexP& P, const Face2D& F);

/// Vertex slacks of every face, indexed like dc.faces().
std::vector<std::vector<QNum>> slack_sweep(const PwlFunction& pi, const DeltaComplex& dc,
                                           Exec exec = Exec::parallel);

struct SlackRecord {
  std::size_t face;
  Point2 vertex;
  QNum slack;
};

enum class FaceClass { additive, limit_additive, non_additive };
std::string to_string(FaceClass c);

struct AdditivityReport {
  DeltaComplex complex;
  std::vector<FaceClass> classes;
  std::vector<std::vector<QNum>> slacks;

  std::vector<std::size_t> faces_of(FaceClass c, int dim = -1) const;
  bool is_additive(std::size_t face) const { return classes[face] == FaceClass::additive; }
};

/// additive: Delta pi vanishes on F (all vertex slacks 0); limit_additive: Delta pi_F
/// vanishes at some but not all vertices; non_additive otherwise.
AdditivityReport additive_face_report(const PwlFunction& pi, Exec exec = Exec::parallel);
AdditivityReport additive_face_report(const PwlFunction& pi, const DeltaComplex& dc,
                                      Exec exec = Exec::parallel);

struct MinimalityResult {
  bool minimal = false;
  /// "pi(0)=0", "symmetry", "bounds", "subadditivity" or empty.
  std::string condition;
  std::string detail;
  std::optional<Point2> witness;
  std::optional<Face2D> face;
};

MinimalityResult minimality_test(const PwlFunction& pi, Exec exec = Exec::parallel);
MinimalityResult minimality_test(const PwlFunction& pi, const QNum& f, Exec exec = Exec::parallel);

enum class Containment { equal, strict_subset, strict_superset, incomparable };
std::string to_string(Containment c);

struct ContainmentResult {
  Containment relation = Containment::equal;
  /// In E(pi2) but not E(pi1), and vice versa.
  std::optional<Face2D> only_second;
  std::optional<Face2D> only_first;
  std::string only_second_label;
  std::string only_first_label;
};

/// Compares E(pi1) and E(pi2) face by face over the common refinement.
ContainmentResult e_containment(const PwlFunction& pi1, const PwlFunction& pi2,
                                Exec exec = Exec::parallel);

}  // namespace cgf
