#include "hnq/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "hnq/error.hpp"

namespace hnq {

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw ArithmeticError("zero denominator");
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool done() const { return pos_ == text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  std::size_t pos() const { return pos_; }
  void advance() { ++pos_; }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    if (start == pos_) throw ParseError("expected digits", pos_);
    return std::string(text_.substr(start, pos_ - start));
  }

  // <rat> := [sign] digits ['/' digits]; a sign is only accepted if allowed.
  Rational rational(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '+' || peek() == '-')) {
      negative = peek() == '-';
      advance();
    }
    mpz_class num(digits());
    mpz_class den(1);
    if (peek() == '/') {
      advance();
      std::size_t den_pos = pos_;
      den = mpz_class(digits());
      if (den == 0) throw ParseError("zero denominator", den_pos);
    }
    Rational q(negative ? mpz_class(-num) : num, den);
    q.canonicalize();
    return q;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Rational parse_rational(std::string_view text) {
  Cursor cur(text);
  Rational q = cur.rational(true);
  if (!cur.done()) throw ParseError("trailing characters", cur.pos());
  return q;
}

int Scalar::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 2 b^2 wins.
  Rational a2 = a_ * a_;
  Rational b2 = 2 * b_ * b_;
  return a2 > b2 ? sa : sb;
}

Scalar& Scalar::operator+=(const Scalar& y) {
  a_ += y.a_;
  b_ += y.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& y) {
  a_ -= y.a_;
  b_ -= y.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& y) {
  if (sgn(b_) == 0 && sgn(y.b_) == 0) {
    a_ *= y.a_;
    return *this;
  }
  Rational a = a_ * y.a_ + 2 * b_ * y.b_;
  Rational b = a_ * y.b_ + b_ * y.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& y) {
  if (y.is_zero()) throw ArithmeticError("division by zero");
  if (sgn(y.b_) == 0) {
    a_ /= y.a_;
    b_ /= y.a_;
    return *this;
  }
  // Multiply by the conjugate c - d*sqrt2 over the norm c^2 - 2 d^2 (nonzero).
  Rational norm = y.a_ * y.a_ - 2 * y.b_ * y.b_;
  Rational a = (a_ * y.a_ - 2 * b_ * y.b_) / norm;
  Rational b = (b_ * y.a_ - a_ * y.b_) / norm;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering compare(const Scalar& x, const Scalar& y) {
  int s = (x - y).sign();
  if (s < 0) return Ordering::less;
  if (s > 0) return Ordering::greater;
  return Ordering::equal;
}

std::string Scalar::to_string() const {
  std::string out = format_rational(a_);
  if (sgn(b_) == 0) return out;
  out += sgn(b_) > 0 ? "+" : "-";
  out += format_rational(abs(b_));
  out += "*sqrt2";
  return out;
}

Scalar Scalar::parse(std::string_view text) {
  Cursor cur(text);
  if (cur.done()) throw ParseError("empty scalar", 0);
  Rational a = cur.rational(true);
  if (cur.done()) return Scalar(a);
  char op = cur.peek();
  if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", cur.pos());
  cur.advance();
  Rational b = cur.rational(false);
  if (!cur.consume("*sqrt2")) throw ParseError("expected '*sqrt2'", cur.pos());
  if (!cur.done()) throw ParseError("trailing characters", cur.pos());
  return Scalar(a, op == '-' ? Rational(-b) : b);
}

double Scalar::to_double() const {
  return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.to_string();
}

}  // namespace hnq
