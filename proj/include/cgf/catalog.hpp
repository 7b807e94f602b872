#pragma once

// The built-in functions: psi, psi', the 40-breakpoint function pi and its lift.

#include <string>
#include <vector>

#include "cgf/complex2d.hpp"
#include "cgf/pwl.hpp"

namespace cgf {

struct KzhParams {
  QNum f;
  QNum l;
  QNum u;
  QNum a0;
  QNum a1;
  QNum a2;
  QNum t1;
  QNum t2;
  QNum c1;
  QNum c2;
  QNum c3;
  QNum s;
};

const KzhParams& kzh_params();

/// Table rows as printed: x, left, value, right, slope (empty limit = value).
struct TableRow {
  const char* x;
  const char* left;
  const char* value;
  const char* right;
  const char* slope;
};
const std::vector<TableRow>& kzh_table();

/// Throws std::logic_error if the table is inconsistent with its slope column.
const PwlFunction& kzh_function();
/// Validated on first use (minimality, f = 1/2, slope 6 on (0, 1/8), value 1/4 at 1/8).
const PwlFunction& psi_function();
const PwlFunction& psi_prime_function();

/// Constant of the lift recomputed from the table.
QNum kzh_s_from_table(const PwlFunction& pi);

/// q in T = Z t1 + Z t2.
bool in_group_T(const QNum& q);

enum class CosetClass { fixed_C, plus_Cplus, minus };
std::string to_string(CosetClass c);

struct CosetProfile {
  Rat a_mod;
  Rat b_mod;
  CosetClass cls;
};

/// Representative of x mod T: (a mod t2, b mod 77/7752).
std::pair<Rat, Rat> reduced_pair(const QNum& x);
/// x must lie in (l, u).
CosetProfile coset_classify(const QNum& x);
/// The four representatives of the fixed cosets.
std::vector<QNum> fixed_coset_representatives();

/// The lifted function: pi outside the special intervals, pi +- s or pi on them.
class LiftedFunction {
 public:
  LiftedFunction(PwlFunction base, QNum s);

  const PwlFunction& base() const { return base_; }
  const QNum& s() const { return s_; }
  /// sigma in {-1, 0, 1} with lift = base + sigma * s.
  int sigma(const QNum& x) const;
  QNum eval(const QNum& x) const;
  /// lift - base.
  QNum perturbation(const QNum& x) const { return eval(x) - base_.eval(x); }
  QNum delta(const QNum& x, const QNum& y) const { return eval(x) + eval(y) - eval(x + y); }

 private:
  PwlFunction base_;
  QNum s_;
};

const LiftedFunction& kzh_lifted();

/// One selected vertex per face of the 39 x 39 system: triple over the
/// extended complex of pi and the vertex.
struct SelectedVertex {
  PFace I;
  PFace J;
  PFace K;
  Point2 vertex;
};
std::vector<SelectedVertex> kzh_claim_i_selection();

std::vector<std::string> catalog_names();

}  // namespace cgf
