#include "cgf/qnum.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <ostream>

namespace cgf {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) == w) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::string digits() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_digit(text_[pos_])) ++pos_;
    if (start == pos_) throw ParseError("expected digits", start);
    return std::string(text_.substr(start, pos_ - start));
  }

  /// Unsigned R (integer or fraction).
  Rat unsigned_rat() {
    const std::size_t start = pos_;
    Int num(digits());
    Int den(1);
    if (consume('/')) {
      const std::size_t den_pos = pos_;
      den = Int(digits());
      if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    (void)start;
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rat parse_rat(std::string_view text) {
  Scanner s(text);
  bool negative = false;
  if (s.consume('-')) {
    negative = true;
  } else {
    s.consume('+');
  }
  Rat r = s.unsigned_rat();
  if (!s.done()) throw ParseError("unexpected trailing input", s.pos());
  return negative ? Rat(-r) : r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rat mod_rat(const Rat& r, const Rat& q) {
  if (sgn(q) <= 0) throw std::domain_error("mod_rat: modulus must be positive");
  const Rat ratio = r / q;
  return Rat(r - q * Rat(floor_rat(ratio)));
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

QNum QNum::ratio(long p, long q) {
  if (q == 0) throw std::domain_error("QNum::ratio: zero denominator");
  Rat r(p, q);
  r.canonicalize();
  return QNum(std::move(r));
}

void QNum::refresh() {
  const double a = a_.get_d();
  const double b = b_.get_d() * std::sqrt(2.0);
  d_ = a + b;
  err_ = 1e-15 * (std::abs(a) + std::abs(b));
  // Subnormal or overflowing parts: always decide exactly.
  if (!(err_ > 1e-280 && err_ < 1e280)) err_ = std::numeric_limits<double>::infinity();
}

int QNum::sign() const {
  if (d_ > err_) return 1;
  if (d_ < -err_) return -1;
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: |a| vs |b| sqrt2 decided by a^2 vs 2 b^2 (never equal).
  const Rat a2 = a_ * a_;
  const Rat b2 = 2 * b_ * b_;
  return a2 > b2 ? sa : sb;
}

QNum& QNum::operator+=(const QNum& o) {
  a_ += o.a_;
  b_ += o.b_;
  refresh();
  return *this;
}

QNum& QNum::operator-=(const QNum& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  refresh();
  return *this;
}

QNum& QNum::operator*=(const QNum& o) {
  if (o.is_rational()) {
    a_ *= o.a_;
    b_ *= o.a_;
    refresh();
    return *this;
  }
  Rat a = a_ * o.a_ + 2 * b_ * o.b_;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  refresh();
  return *this;
}

QNum& QNum::operator/=(const QNum& o) {
  if (o.is_zero()) throw std::domain_error("QNum: division by zero");
  if (o.is_rational()) {
    a_ /= o.a_;
    b_ /= o.a_;
    refresh();
    return *this;
  }
  // Multiply by the conjugate; the norm c^2 - 2 d^2 is a nonzero rational.
  const Rat norm = o.a_ * o.a_ - 2 * o.b_ * o.b_;
  *this *= o.conjugate();
  a_ /= norm;
  b_ /= norm;
  refresh();
  return *this;
}

std::strong_ordering operator<=>(const QNum& x, const QNum& y) {
  const double diff = x.d_ - y.d_;
  const double tol = x.err_ + y.err_ + 1e-15 * std::abs(diff);
  if (diff > tol) return std::strong_ordering::greater;
  if (diff < -tol) return std::strong_ordering::less;
  if (x.is_rational() && y.is_rational()) {
    const int c = cmp(x.a_, y.a_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Ordering cmp(const QNum& x, const QNum& y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Int QNum::floor() const {
  if (is_rational()) return floor_rat(a_);
  if (std::abs(d_) < 1e12) {
    const double fl = std::floor(d_);
    const double tol = err_ + 1e-15 * std::abs(d_);
    if (d_ - fl > tol && fl + 1 - d_ > tol) return Int(static_cast<long>(fl));
  }
  mpf_class approx(a_, 256);
  mpf_class root(2, 256);
  root = sqrt(root);
  approx += mpf_class(b_, 256) * root;
  mpf_class fl(0, 256);
  mpf_floor(fl.get_mpf_t(), approx.get_mpf_t());
  Int n(fl);
  // The estimate can be off by one near integers; settle it exactly.
  while (QNum(Rat(n)) > *this) --n;
  while (QNum(Rat(n + 1)) <= *this) ++n;
  return n;
}


QNum parse_qnum(std::string_view text) {
  Scanner s(text);
  if (s.done()) throw ParseError("empty number", 0);
  bool have_rational = false;
  bool have_sqrt = false;
  Rat a(0);
  Rat b(0);
  bool first = true;
  while (!s.done()) {
    bool negative = false;
    const std::size_t term_pos = s.pos();
    if (first) {
      if (s.consume('-')) {
        negative = true;
      } else {
        s.consume('+');
      }
    } else {
      if (s.consume('-')) {
        negative = true;
      } else if (!s.consume('+')) {
        throw ParseError("expected '+' or '-'", s.pos());
      }
    }
    Rat coeff(1);
    bool is_sqrt = false;
    if (s.consume_word("sqrt2")) {
      is_sqrt = true;
    } else {
      if (!is_digit(s.peek())) throw ParseError("expected a number", s.pos());
      coeff = s.unsigned_rat();
      if (s.consume('*')) {
        if (!s.consume_word("sqrt2")) throw ParseError("expected 'sqrt2'", s.pos());
        is_sqrt = true;
      }
    }
    if (negative) coeff = -coeff;
    if (is_sqrt) {
      if (have_sqrt) throw ParseError("duplicate sqrt2 term", term_pos);
      have_sqrt = true;
      b = coeff;
    } else {
      if (have_rational) throw ParseError("duplicate rational term", term_pos);
      have_rational = true;
      a = coeff;
    }
    first = false;
  }
  return QNum(std::move(a), std::move(b));
}

std::string format_qnum(const QNum& x) {
  const Rat& a = x.rational_part();
  const Rat& b = x.sqrt2_part();
  if (sgn(b) == 0) return format_rat(a);
  std::string out = format_rat(b) + "*sqrt2";
  if (sgn(a) > 0) out += " + " + format_rat(a);
  if (sgn(a) < 0) out += " - " + format_rat(Rat(-a));
  return out;
}

std::ostream& operator<<(std::ostream& os, const QNum& x) { return os << format_qnum(x); }

}  // namespace cgf
