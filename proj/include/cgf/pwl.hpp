#pragma once

// Periodic piecewise linear functions with one-sided limits.

#include <cstddef>
#include <string>
#include <vector>

#include "cgf/qnum.hpp"

namespace cgf {

enum class Side { minus, at, plus };

struct BreakpointRow {
  QNum x;
  QNum left;
  QNum value;
  QNum right;

  friend bool operator==(const BreakpointRow&, const BreakpointRow&) = default;
};

struct OpenInterval {
  QNum lo;
  QNum hi;

  bool contains(const QNum& x) const { return lo < x && x < hi; }
  /// Open intervals (lo,hi) and (a,b) share a point.
  bool meets(const QNum& a, const QNum& b) const { return max(lo, a) < min(hi, b); }
  friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// A face of the one-dimensional complex, addressed by indices into the
/// extended breakpoint sequence ext[k] = x_{k mod n} + floor(k / n).
/// lo == hi is the singleton {ext[lo]}; hi == lo + 1 the closed interval.
struct PFace {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool is_point() const { return lo == hi; }
  friend auto operator<=>(const PFace&, const PFace&) = default;
};

/// The complex P on one period, given by its breakpoints 0 = x_0 < ... < x_{n-1} < 1.
class ComplexP {
 public:
  ComplexP() = default;
  explicit ComplexP(std::vector<QNum> breakpoints);

  std::size_t size() const { return x_.size(); }
  const std::vector<QNum>& breakpoints() const { return x_; }
  /// x_{k mod n} + floor(k/n).
  QNum ext(std::size_t k) const;
  QNum lo(const PFace& F) const { return ext(F.lo); }
  QNum hi(const PFace& F) const { return ext(F.hi); }

  std::vector<PFace> zero_faces() const;
  std::vector<PFace> one_faces() const;

  /// Smallest face over the extended sequence containing [a, b], 0 <= a <= b.
  PFace minimal_face(const QNum& a, const QNum& b) const;
  PFace minimal_face(const QNum& a) const { return minimal_face(a, a); }
  /// Index of the breakpoint equal to x (already in [0,1)), or size() if none.
  std::size_t find_breakpoint(const QNum& x) const;
  /// Index i with x_i <= x < x_{i+1} for x in [0,1).
  std::size_t piece_of(const QNum& x) const;

  std::string label(const PFace& F) const;

  friend bool operator==(const ComplexP&, const ComplexP&) = default;

 private:
  std::vector<QNum> x_;
};

class PwlFunction {
 public:
  PwlFunction() = default;

  /// Rows must be sorted by x, distinct, in [0,1), starting at 0.
  static PwlFunction from_rows(std::vector<BreakpointRow> rows, QNum f,
                               std::vector<OpenInterval> special_intervals = {},
                               std::string name = {});

  const std::vector<BreakpointRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const QNum& f() const { return f_; }
  const std::string& name() const { return name_; }
  const std::vector<OpenInterval>& special_intervals() const { return special_; }
  const std::vector<std::string>& warnings() const { return warnings_; }
  const ComplexP& complex() const { return complex_; }

  /// x_i for i <= n, with x_n = 1.
  QNum breakpoint(std::size_t i) const;
  /// Slope on the piece (x_i, x_{i+1}).
  const QNum& slope(std::size_t piece) const { return slopes_[piece]; }
  bool is_continuous() const;

  QNum eval(const QNum& x) const;
  QNum limit(const QNum& x, Side side) const;
  /// pi(x) + pi(y) - pi(x + y).
  QNum delta(const QNum& x, const QNum& y) const;
  /// Limit of pi at x from within relint of the closed face [a, b] containing x
  /// (the value itself when a == b).
  QNum face_limit(const QNum& a, const QNum& b, const QNum& x) const;

  PwlFunction with_name(std::string name) const;
  PwlFunction with_special_intervals(std::vector<OpenInterval> special) const;
  /// Same function written over a finer set of breakpoints (a superset).
  PwlFunction refined(const std::vector<QNum>& breakpoints) const;

 private:
  std::vector<BreakpointRow> rows_;
  std::vector<QNum> slopes_;
  QNum f_;
  std::string name_;
  std::vector<OpenInterval> special_;
  std::vector<std::string> warnings_;
  ComplexP complex_;
};

/// Sorted union of two breakpoint sets.
std::vector<QNum> merge_breakpoints(const std::vector<QNum>& a, const std::vector<QNum>& b);

/// a*p + b*q over the common refinement; f and special intervals are taken from p.
PwlFunction linear_combination(const QNum& a, const PwlFunction& p, const QNum& b,
                               const PwlFunction& q);

/// Continuous function through (x_i, y_i), rows sorted, x_0 = 0, periodic with value y_0 at 1.
PwlFunction continuous_pwl(const std::vector<std::pair<QNum, QNum>>& points, QNum f,
                           std::string name = {});

}  // namespace cgf
