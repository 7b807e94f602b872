#include "cgf/perturbation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cgf {

std::string PerturbVar::name() const {
  switch (kind) {
    case VarKind::slope: return "slope[" + std::to_string(index) + "]";
    case VarKind::value: return "value[x" + std::to_string(index) + "]";
    case VarKind::midpoint: return "mid[" + std::to_string(index) + "]";
  }
  return "?";
}

DenseRow LinearSystem::dense(std::size_t row) const {
  DenseRow out(cols());
  for (const auto& [c, v] : rows[row].coeffs) out[c] = v;
  return out;
}

std::string LinearSystem::dump() const {
  std::ostringstream os;
  for (const auto& eq : rows) {
    os << eq.face << " (" << eq.vertex.x << ", " << eq.vertex.y << ")";
    for (const auto& [c, v] : eq.coeffs) os << " " << vars[c].name() << ":" << v;
    os << "\n";
  }
  return os.str();
}

Elimination eliminate(const LinearSystem& sys) {
  const std::size_t ncols = sys.cols();
  std::vector<DenseRow> a;
  a.reserve(sys.rows.size());
  for (std::size_t r = 0; r < sys.rows.size(); ++r) {
    if (!sys.rows[r].coeffs.empty()) a.push_back(sys.dense(r));
  }
  Elimination e;
  std::size_t top = 0;
  for (std::size_t c = 0; c < ncols && top < a.size(); ++c) {
    std::size_t p = top;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[top], a[p]);
    const QNum inv = QNum(1) / a[top][c];
    for (std::size_t r = top + 1; r < a.size(); ++r) {
      if (a[r][c].is_zero()) continue;
      const QNum factor = a[r][c] * inv;
      for (std::size_t k = c; k < ncols; ++k) {
        if (!a[top][k].is_zero()) a[r][k] -= factor * a[top][k];
      }
    }
    e.pivots.push_back(c);
    ++top;
  }
  e.rank = top;
  e.nullity = ncols - top;
  return e;
}

std::size_t rank(const LinearSystem& sys) { return eliminate(sys).rank; }
std::size_t nullspace_dim(const LinearSystem& sys) { return eliminate(sys).nullity; }

PerturbationModel::PerturbationModel(const PwlFunction& pi, const CoveringResult& cov,
                                     bool use_symmetry)
    : pi_(&pi) {
  const ComplexP& P = pi.complex();
  const std::size_t n = P.size();
  const QNum& f = pi.f();
  for (std::size_t c = 0; c < cov.components.size(); ++c) {
    slope_var_.push_back(vars_.size());
    vars_.push_back({VarKind::slope, c});
  }
  covered_.assign(n, false);
  for (std::size_t p = 0; p < n; ++p) covered_[p] = cov.piece_component[p] >= 0;

  value_ref_.assign(n, {});
  const std::size_t at_f = P.find_breakpoint(f.frac());
  for (std::size_t i = 0; i < n; ++i) {
    if (!use_symmetry) {
      // pi_bar(0) = pi_bar(f) = 0.
      if (i == 0 || i == at_f) continue;
      value_ref_[i] = {vars_.size(), 1};
      vars_.push_back({VarKind::value, i});
      continue;
    }
    const std::size_t j = P.find_breakpoint((f - P.ext(i)).frac());
    if (j == n) throw std::invalid_argument("breakpoints are not symmetric about f");
    if (i == j || i == 0 || j == 0) continue;
    if (i < j) {
      value_ref_[i] = {vars_.size(), 1};
      vars_.push_back({VarKind::value, i});
    } else {
      value_ref_[i] = {value_ref_[j].var, -value_ref_[j].sign};
    }
  }

  mid_ref_.assign(n, {});
  for (std::size_t p = 0; p < n; ++p) {
    if (!covered_[p]) continue;
    std::size_t q = p;
    if (use_symmetry) {
      q = P.piece_of((f - P.ext(p + 1)).frac());
      if (P.ext(q + 1) - P.ext(q) != P.ext(p + 1) - P.ext(p)) {
        throw std::invalid_argument("pieces are not symmetric about f");
      }
    }
    if (use_symmetry && q == p) continue;
    if (!use_symmetry || q > p || !covered_[q]) {
      mid_ref_[p] = {vars_.size(), 1};
      vars_.push_back({VarKind::midpoint, p});
    } else {
      mid_ref_[p] = {mid_ref_[q].var, -mid_ref_[q].sign};
    }
  }
  cov_ = cov.piece_component;
}

DenseRow PerturbationModel::limit_form(const ComplexP& P, const PFace& I, const QNum& x) const {
  if (!(P == pi_->complex())) throw std::invalid_argument("face is not over the complex of pi");
  const std::size_t n = P.size();
  DenseRow row(vars_.size());
  if (I.is_point()) {
    const Ref& r = value_ref_[I.lo % n];
    if (r.var) row[*r.var] += QNum(r.sign);
    return row;
  }
  const std::size_t p = I.lo % n;
  if (!covered_[p]) throw std::domain_error("face meets an uncovered interval");
  const QNum z(static_cast<long>(I.lo / n));
  const QNum mid = (P.ext(p) + P.ext(p + 1)) / QNum(2);
  const Ref& r = mid_ref_[p];
  if (r.var) row[*r.var] += QNum(r.sign);
  row[slope_var_[static_cast<std::size_t>(cov_[p])]] += x - z - mid;
  return row;
}

DenseRow PerturbationModel::slack_form(const ComplexP& P, const Face2D& F, const Point2& v) const {
  DenseRow row = limit_form(P, F.I, v.x);
  const DenseRow b = limit_form(P, F.J, v.y);
  const DenseRow c = limit_form(P, F.K, v.x + v.y);
  for (std::size_t k = 0; k < row.size(); ++k) row[k] += b[k] - c[k];
  return row;
}

LinearSystem build_system(const AdditivityReport& report, const PerturbationModel& model,
                          const std::vector<std::pair<std::size_t, Point2>>& selection,
                          bool require_additive_face) {
  LinearSystem sys;
  sys.vars = model.vars();
  const DeltaComplex& dc = report.complex;
  for (const auto& [face, v] : selection) {
    const Face2D& F = dc[face];
    if (require_additive_face && !report.is_additive(face)) {
      throw std::invalid_argument("selected face is not additive: " + dc.label(F));
    }
    if (!slack_at_zero(report, face, v)) {
      throw std::invalid_argument("selected vertex has nonzero slack on " + dc.label(F));
    }
    const DenseRow row = model.slack_form(dc.complex(), F, v);
    Equation eq{dc.label(F), v, {}};
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (!row[k].is_zero()) eq.coeffs.emplace_back(k, row[k]);
    }
    sys.rows.push_back(std::move(eq));
  }
  return sys;
}

bool slack_at_zero(const AdditivityReport& report, std::size_t face, const Point2& v) {
  const Face2D& F = report.complex[face];
  for (std::size_t k = 0; k < F.vertices.size(); ++k) {
    if (F.vertices[k] == v) return report.slacks[face][k].is_zero();
  }
  throw std::invalid_argument("point is not a vertex of " + report.complex.label(F));
}

std::vector<std::pair<std::size_t, Point2>> zero_slack_selection(const AdditivityReport& report,
                                                                 const CoveringResult& cov,
                                                                 bool additive_only) {
  const ComplexP& P = report.complex.complex();
  const std::size_t n = P.size();
  auto avoids = [&](const PFace& I) {
    return I.is_point() || cov.piece_component[I.lo % n] >= 0;
  };
  std::vector<std::pair<std::size_t, Point2>> out;
  for (std::size_t i = 0; i < report.complex.size(); ++i) {
    const Face2D& F = report.complex[i];
    if (additive_only && !report.is_additive(i)) continue;
    if (!avoids(F.I) || !avoids(F.J) || !avoids(F.K)) continue;
    for (std::size_t k = 0; k < F.vertices.size(); ++k) {
      if (report.slacks[i][k].is_zero()) out.emplace_back(i, F.vertices[k]);
    }
  }
  return out;
}

LipschitzConstants lipschitz_epsilon(const PwlFunction& pi, const PwlFunction& pi_bar, Exec exec) {
  const ComplexP& P = pi.complex();
  for (const auto& x : pi_bar.complex().breakpoints()) {
    if (P.find_breakpoint(x) == P.size()) {
      throw std::invalid_argument("perturbation has a breakpoint outside the complex of pi");
    }
  }
  if (!pi_bar.is_continuous()) throw std::invalid_argument("perturbation has jumps");
  const auto min = minimality_test(pi, exec);
  if (!min.minimal) throw std::invalid_argument("pi is not minimal: " + min.condition);

  const DeltaComplex dc = delta_p(P, exec);
  const auto s = slack_sweep(pi, dc, exec);
  const auto t = slack_sweep(pi_bar, dc, exec);
  LipschitzConstants out;
  bool have_m = false;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    for (std::size_t k = 0; k < s[i].size(); ++k) {
      if (s[i][k].is_zero()) {
        if (!t[i][k].is_zero()) out.in_perturbation_space = false;
      } else if (!have_m || s[i][k] < out.m) {
        out.m = s[i][k];
        have_m = true;
      }
      const QNum a = t[i][k].abs();
      if (out.M < a) out.M = a;
    }
  }
  if (!have_m) throw std::invalid_argument("pi has no positive slack");
  for (std::size_t p = 0; p < pi_bar.size(); ++p) {
    const QNum a = pi_bar.slope(p).abs();
    if (out.C < a) out.C = a;
  }
  out.C += QNum(1);
  const QNum second = out.m / (QNum(8) * out.C);
  if (out.M.is_zero()) {
    out.degenerate = true;
    out.epsilon = second;
  } else {
    out.epsilon = cgf::min(out.m / out.M, second);
  }
  return out;
}

QNum scaling_epsilon(const PwlFunction& pi, const PwlFunction& pi_bar, Exec exec) {
  if (!pi.is_continuous() || !pi_bar.is_continuous()) {
    throw std::invalid_argument("scaling epsilon needs continuous functions");
  }
  const ComplexP P(merge_breakpoints(pi.complex().breakpoints(), pi_bar.complex().breakpoints()));
  const DeltaComplex dc = delta_p(P, exec);
  std::optional<QNum> best;
  for (const auto& v : dc.vertices()) {
    const QNum d = pi_bar.delta(v.x, v.y);
    if (d.sign() <= 0) continue;
    const QNum ratio = pi.delta(v.x, v.y) / d;
    if (!best || ratio < *best) best = ratio;
  }
  if (!best) throw std::invalid_argument("perturbation has no positive slack on the vertices");
  return *best;
}

bool verify_effective(const PwlFunction& pi, const Perturbation& pi_bar, const QNum& eps,
                      Exec exec) {
  if (!std::holds_alternative<PwlFunction>(pi_bar)) {
    throw NotPiecewiseLinear("perturbation is not piecewise linear");
  }
  if (eps.sign() <= 0) throw std::invalid_argument("epsilon must be positive");
  const auto& q = std::get<PwlFunction>(pi_bar);
  const auto plus = linear_combination(QNum(1), pi, eps, q);
  const auto minus = linear_combination(QNum(1), pi, -eps, q);
  return minimality_test(plus, exec).minimal && minimality_test(minus, exec).minimal;
}

}  // namespace cgf
