#include "cgf/pwl.hpp"

#include <algorithm>
#include <stdexcept>

namespace cgf {

ComplexP::ComplexP(std::vector<QNum> breakpoints) : x_(std::move(breakpoints)) {
  if (x_.empty() || !x_.front().is_zero()) throw std::invalid_argument("complex must start at 0");
  for (std::size_t i = 1; i < x_.size(); ++i) {
    if (!(x_[i - 1] < x_[i])) throw std::invalid_argument("breakpoints must increase strictly");
  }
  if (!(x_.back() < QNum(1))) throw std::invalid_argument("breakpoints must lie in [0,1)");
}

QNum ComplexP::ext(std::size_t k) const {
  const std::size_t n = x_.size();
  return x_[k % n] + QNum(static_cast<long>(k / n));
}

std::vector<PFace> ComplexP::zero_faces() const {
  std::vector<PFace> out;
  for (std::size_t i = 0; i < x_.size(); ++i) out.push_back({i, i});
  return out;
}

std::vector<PFace> ComplexP::one_faces() const {
  std::vector<PFace> out;
  for (std::size_t i = 0; i < x_.size(); ++i) out.push_back({i, i + 1});
  return out;
}

PFace ComplexP::minimal_face(const QNum& a, const QNum& b) const {
  const Int shift_int = a.floor();
  const long shift = shift_int.get_si();
  const QNum r = a - QNum(shift);
  const std::size_t n = x_.size();
  const std::size_t base = static_cast<std::size_t>(shift) * n;
  const std::size_t bp = find_breakpoint(r);
  if (bp < n && a == b) return {base + bp, base + bp};
  const std::size_t p = piece_of(r);
  if (!(b <= ext(base + p + 1))) throw std::invalid_argument("range crosses a breakpoint");
  return {base + p, base + p + 1};
}

std::size_t ComplexP::find_breakpoint(const QNum& x) const {
  auto it = std::lower_bound(x_.begin(), x_.end(), x);
  if (it != x_.end() && *it == x) return static_cast<std::size_t>(it - x_.begin());
  return x_.size();
}

std::size_t ComplexP::piece_of(const QNum& x) const {
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

std::string ComplexP::label(const PFace& F) const {
  const std::size_t n = x_.size();
  auto name = [n](std::size_t k) {
    std::string s = "x" + std::to_string(k % n);
    if (k / n > 0) s += "+" + std::to_string(k / n);
    return s;
  };
  if (F.is_point()) return "{" + name(F.lo) + "}";
  return "[" + name(F.lo) + "," + name(F.hi) + "]";
}

PwlFunction PwlFunction::from_rows(std::vector<BreakpointRow> rows, QNum f,
                                   std::vector<OpenInterval> special_intervals,
                                   std::string name) {
  if (rows.empty()) throw std::invalid_argument("a function needs at least one breakpoint");
  if (!rows.front().x.is_zero()) throw std::invalid_argument("first breakpoint must be 0");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i - 1].x < rows[i].x)) {
      throw std::invalid_argument("breakpoints unsorted or duplicated at row " + std::to_string(i));
    }
  }
  if (!(rows.back().x < QNum(1))) throw std::invalid_argument("breakpoints must lie in [0,1)");
  if (!(QNum(0) < f && f < QNum(1))) throw std::invalid_argument("f must lie in (0,1)");

  PwlFunction p;
  p.rows_ = std::move(rows);
  p.f_ = std::move(f);
  p.special_ = std::move(special_intervals);
  p.name_ = std::move(name);
  std::vector<QNum> xs;
  for (const auto& r : p.rows_) xs.push_back(r.x);
  p.complex_ = ComplexP(std::move(xs));
  const std::size_t n = p.rows_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const QNum next_x = i + 1 < n ? p.rows_[i + 1].x : QNum(1);
    const QNum& next_left = p.rows_[(i + 1) % n].left;
    p.slopes_.push_back((next_left - p.rows_[i].right) / (next_x - p.rows_[i].x));
  }
  if (p.complex_.find_breakpoint(p.f_) == n) p.warnings_.push_back("f is not a breakpoint");
  return p;
}

QNum PwlFunction::breakpoint(std::size_t i) const {
  return i == rows_.size() ? QNum(1) : rows_[i].x;
}

bool PwlFunction::is_continuous() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const BreakpointRow& r) { return r.left == r.value && r.value == r.right; });
}

QNum PwlFunction::eval(const QNum& x) const { return limit(x, Side::at); }

QNum PwlFunction::limit(const QNum& x, Side side) const {
  const QNum r = x.frac();
  const std::size_t i = complex_.piece_of(r);
  if (rows_[i].x == r) {
    switch (side) {
      case Side::minus: return rows_[i].left;
      case Side::plus: return rows_[i].right;
      case Side::at: return rows_[i].value;
    }
  }
  return rows_[i].right + slopes_[i] * (r - rows_[i].x);
}

QNum PwlFunction::delta(const QNum& x, const QNum& y) const {
  return eval(x) + eval(y) - eval(x + y);
}

QNum PwlFunction::face_limit(const QNum& a, const QNum& b, const QNum& x) const {
  if (a == b) return eval(x);
  if (x == a) return limit(x, Side::plus);
  if (x == b) return limit(x, Side::minus);
  return eval(x);
}

PwlFunction PwlFunction::with_name(std::string name) const {
  PwlFunction p = *this;
  p.name_ = std::move(name);
  return p;
}

PwlFunction PwlFunction::with_special_intervals(std::vector<OpenInterval> special) const {
  PwlFunction p = *this;
  p.special_ = std::move(special);
  return p;
}

PwlFunction PwlFunction::refined(const std::vector<QNum>& breakpoints) const {
  std::vector<BreakpointRow> out;
  out.reserve(breakpoints.size());
  for (const auto& x : breakpoints) {
    out.push_back({x, limit(x, Side::minus), limit(x, Side::at), limit(x, Side::plus)});
  }
  return from_rows(std::move(out), f_, special_, name_);
}

std::vector<QNum> merge_breakpoints(const std::vector<QNum>& a, const std::vector<QNum>& b) {
  std::vector<QNum> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PwlFunction linear_combination(const QNum& a, const PwlFunction& p, const QNum& b,
                               const PwlFunction& q) {
  const auto xs = merge_breakpoints(p.complex().breakpoints(), q.complex().breakpoints());
  std::vector<BreakpointRow> rows;
  for (const auto& x : xs) {
    rows.push_back({x, a * p.limit(x, Side::minus) + b * q.limit(x, Side::minus),
                    a * p.eval(x) + b * q.eval(x),
                    a * p.limit(x, Side::plus) + b * q.limit(x, Side::plus)});
  }
  return PwlFunction::from_rows(std::move(rows), p.f(), p.special_intervals());
}

PwlFunction continuous_pwl(const std::vector<std::pair<QNum, QNum>>& points, QNum f,
                           std::string name) {
  std::vector<BreakpointRow> rows;
  for (const auto& [x, y] : points) rows.push_back({x, y, y, y});
  return PwlFunction::from_rows(std::move(rows), std::move(f), {}, std::move(name));
}

}  // namespace cgf
