#pragma once

// Exact arithmetic over Q and the real quadratic field Q(sqrt 2).

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cgf {

using Int = mpz_class;
using Rat = mpq_class;

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses `p` or `p/q` (optional sign). The result is canonical.
Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& r);

/// Largest integer <= r.
Int floor_rat(const Rat& r);
/// r mod q in [0, q) for q > 0.
Rat mod_rat(const Rat& r, const Rat& q);
bool is_integer(const Rat& r);

/// An element a + b*sqrt(2) of Q(sqrt 2). Immutable value type; the
/// representation is canonical, so equality is componentwise.
class QNum {
 public:
  QNum() = default;
  QNum(long v) : a_(v) { refresh(); }  // NOLINT(google-explicit-constructor)
  QNum(Rat a) : a_(std::move(a)) {  // NOLINT(google-explicit-constructor)
    a_.canonicalize();
    refresh();
  }
  QNum(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
    refresh();
  }

  /// The rational p/q.
  static QNum ratio(long p, long q);
  static QNum sqrt2() { return QNum(Rat(0), Rat(1)); }

  const Rat& rational_part() const noexcept { return a_; }
  const Rat& sqrt2_part() const noexcept { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  /// Exact sign of a + b*sqrt(2): -1, 0 or +1.
  int sign() const;

  QNum operator-() const { return QNum(Rat(-a_), Rat(-b_)); }
  QNum& operator+=(const QNum& o);
  QNum& operator-=(const QNum& o);
  QNum& operator*=(const QNum& o);
  /// Throws std::domain_error on division by zero.
  QNum& operator/=(const QNum& o);

  friend QNum operator+(QNum x, const QNum& y) { return x += y; }
  friend QNum operator-(QNum x, const QNum& y) { return x -= y; }
  friend QNum operator*(QNum x, const QNum& y) { return x *= y; }
  friend QNum operator/(QNum x, const QNum& y) { return x /= y; }

  friend bool operator==(const QNum& x, const QNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const QNum& x, const QNum& y);

  QNum abs() const { return sign() < 0 ? -*this : *this; }
  /// Largest integer <= this.
  Int floor() const;
  /// Representative of this modulo 1 in [0, 1).
  QNum frac() const { return *this - QNum(Rat(floor())); }
  /// Galois conjugate a - b*sqrt(2).
  QNum conjugate() const { return QNum(a_, Rat(-b_)); }

  /// Nearest-ish double; decisions use it only when the error bound separates them.
  double to_double() const { return d_; }

 private:
  void refresh();

  Rat a_{0};
  Rat b_{0};
  // Cached approximation and a bound on its absolute error.
  double d_ = 0;
  double err_ = 0;
};

enum class Ordering { Less, Equal, Greater };
Ordering cmp(const QNum& x, const QNum& y);

/// Grammar: `R | R*sqrt2 | R + R*sqrt2 | R - R*sqrt2` (terms in either
/// order) with R an optionally signed integer or fraction.
QNum parse_qnum(std::string_view text);
/// Canonical text; the sqrt2 term comes first, e.g. `77/7752*sqrt2 + 19/100`.
std::string format_qnum(const QNum& x);

std::ostream& operator<<(std::ostream& os, const QNum& x);

inline QNum min(const QNum& x, const QNum& y) { return y < x ? y : x; }
inline QNum max(const QNum& x, const QNum& y) { return x < y ? y : x; }

}  // namespace cgf
