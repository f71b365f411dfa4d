#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hnq {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);
std::string format_rational(const Rational& q);
Rational parse_rational(std::string_view text);

/// Exact element a + b*sqrt(2) of the ordered field Q(sqrt 2).
///
/// Equality is componentwise and the order is the order of real numbers,
/// decided exactly from the signs of a and b and a comparison of a^2 with
/// 2 b^2.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational a) : a_(std::move(a)) {  // NOLINT(google-explicit-constructor)
    a_.canonicalize();
  }
  Scalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
  }

  static Scalar sqrt2() { return Scalar(Rational(0), Rational(1)); }

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& sqrt2_part() const noexcept { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  // -1, 0 or +1.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_); }
  Scalar& operator+=(const Scalar& y);
  Scalar& operator-=(const Scalar& y);
  Scalar& operator*=(const Scalar& y);
  Scalar& operator/=(const Scalar& y);

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// Canonical text: "3/4", "1/2+3/4*sqrt2", "0-1*sqrt2".
  std::string to_string() const;
  static Scalar parse(std::string_view text);

  /// Floating approximation, for diagnostics only.
  double to_double() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

enum class Ordering { less, equal, greater };

Ordering compare(const Scalar& x, const Scalar& y);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace hnq
