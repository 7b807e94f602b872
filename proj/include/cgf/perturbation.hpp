#pragma once

// Finite perturbation systems and the epsilon constants.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cgf/additivity.hpp"
#include "cgf/covering.hpp"

namespace cgf {

enum class VarKind { slope, value, midpoint };

struct PerturbVar {
  VarKind kind;
  /// Component for slopes, breakpoint index for values, piece index for midpoints.
  std::size_t index;
  std::string name() const;
};

using DenseRow = std::vector<QNum>;

struct Equation {
  std::string face;
  Point2 vertex;
  /// Sparse: (column, coefficient) with nonzero coefficients, increasing column.
  std::vector<std::pair<std::size_t, QNum>> coeffs;
};

struct LinearSystem {
  std::vector<PerturbVar> vars;
  std::vector<Equation> rows;

  std::size_t cols() const { return vars.size(); }
  DenseRow dense(std::size_t row) const;
  /// One row per line: `face-id (u, v) coeffs...`.
  std::string dump() const;
};

struct Elimination {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  /// Pivot columns in the order they were found.
  std::vector<std::size_t> pivots;
};

/// Exact Gaussian elimination; the pivot is the first remaining row with a
/// nonzero entry, columns taken in order.
Elimination eliminate(const LinearSystem& sys);
std::size_t rank(const LinearSystem& sys);
std::size_t nullspace_dim(const LinearSystem& sys);

/// Parametrization of perturbations that are affine with one slope per covered
/// component, free at breakpoints, and undefined on uncovered pieces. With
/// symmetry, pi_bar(x) + pi_bar(f - x) = 0 is applied before numbering; pi_bar(0) = pi_bar(f) = 0
/// always.
class PerturbationModel {
 public:
  PerturbationModel(const PwlFunction& pi, const CoveringResult& cov, bool use_symmetry);

  const std::vector<PerturbVar>& vars() const { return vars_; }
  /// Linear form of the limit of pi_bar at x from within relint of the face I of P.
  DenseRow limit_form(const ComplexP& P, const PFace& I, const QNum& x) const;
  DenseRow slack_form(const ComplexP& P, const Face2D& F, const Point2& v) const;

 private:
  struct Ref {
    std::optional<std::size_t> var;
    int sign = 1;
  };
  const PwlFunction* pi_;
  std::vector<PerturbVar> vars_;
  std::vector<Ref> value_ref_;
  std::vector<Ref> mid_ref_;
  std::vector<std::size_t> slope_var_;
  std::vector<bool> covered_;
  std::vector<int> cov_;
};

/// One equation Delta pi_bar_F(v) = 0 per (face, vertex). Throws if a face is not
/// additive for pi (or, without the face requirement, if the vertex slack is nonzero).
LinearSystem build_system(const AdditivityReport& report, const PerturbationModel& model,
                          const std::vector<std::pair<std::size_t, Point2>>& selection,
                          bool require_additive_face = true);
/// Delta pi_F vanishes at the vertex v of the face.
bool slack_at_zero(const AdditivityReport& report, std::size_t face, const Point2& v);
/// All (face, vertex) pairs with zero limit slack whose projections avoid uncovered
/// pieces; additive_only restricts to additive faces.
std::vector<std::pair<std::size_t, Point2>> zero_slack_selection(const AdditivityReport& report,
                                                                 const CoveringResult& cov,
                                                                 bool additive_only);

struct LipschitzConstants {
  QNum m;
  QNum M;
  QNum C;
  QNum epsilon;
  /// M = 0: pi_bar vanishes on every face, any epsilon works.
  bool degenerate = false;
  /// Delta pi_bar_F vanishes wherever Delta pi_F does.
  bool in_perturbation_space = true;
};

/// Constants of the Lipschitz construction: m smallest nonzero vertex slack of pi,
/// M largest |Delta pi_bar_F| over vertices, C = max |slope of pi_bar| + 1,
/// epsilon = min(m/M, m/(8C)).
LipschitzConstants lipschitz_epsilon(const PwlFunction& pi, const PwlFunction& pi_bar,
                                     Exec exec = Exec::parallel);

/// min Delta pi / Delta pi_bar over vertices of Delta P with Delta pi_bar > 0.
QNum scaling_epsilon(const PwlFunction& pi, const PwlFunction& pi_bar, Exec exec = Exec::parallel);

class NotPiecewiseLinear : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Perturbation = std::variant<PwlFunction, std::function<QNum(const QNum&)>>;

/// Both pi + eps*pi_bar and pi - eps*pi_bar are minimal.
bool verify_effective(const PwlFunction& pi, const Perturbation& pi_bar, const QNum& eps,
                      Exec exec = Exec::parallel);

}  // namespace cgf
