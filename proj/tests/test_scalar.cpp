#include <cmath>
#include <random>

#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/inequalities.hpp"
#include "hnq/scalar.hpp"

using namespace hnq;

namespace {

Scalar s(long a_num, long a_den, long b_num, long b_den) {
  return Scalar(make_rational(a_num, a_den), make_rational(b_num, b_den));
}

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return s(num(rng), den(rng), num(rng), den(rng));
}

}  // namespace

TEST_CASE("arithmetic examples") {
  CHECK(s(1, 1, 1, 1) * s(1, 1, -1, 1) == Scalar(-1));
  CHECK(Scalar::sqrt2() * Scalar::sqrt2() == Scalar(2));
  CHECK(s(1, 2, 3, 4) + s(1, 2, 1, 4) == s(1, 1, 1, 1));
  CHECK((s(3, 1, 1, 1) / s(1, 1, 1, 1)) * s(1, 1, 1, 1) == s(3, 1, 1, 1));
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArithmeticError);
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(1, -2).get_den() == 2);
}

TEST_CASE("comparison examples") {
  CHECK(compare(s(-1, 1, 1, 1), Scalar(0)) == Ordering::greater);
  CHECK(compare(Scalar(make_rational(3, 2)), s(1, 1, 1, 4)) == Ordering::greater);
  Scalar x = s(2, 3, -5, 7);
  CHECK(compare(x, x) == Ordering::equal);
  CHECK(s(0, 1, 1, 1) < Scalar(make_rational(3, 2)));
  CHECK(s(0, 1, 1, 1) > Scalar(make_rational(7, 5)));
}

TEST_CASE("parsing and formatting") {
  CHECK(Scalar::parse("3/4") == Scalar(make_rational(3, 4)));
  CHECK(Scalar::parse("1/2+3/4*sqrt2") == s(1, 2, 3, 4));
  CHECK(Scalar::parse("-2-1*sqrt2") == s(-2, 1, -1, 1));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("1/2+"), ParseError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
  try {
    Scalar::parse("1/2+x");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() > 0);
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Scalar x = random_scalar(rng);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
}

TEST_CASE("field and order axioms on random elements") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    Scalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x - x == Scalar(0));
    if (!x.is_zero()) CHECK(x * (Scalar(1) / x) == Scalar(1));
    // Exactly one of <, ==, >.
    CHECK(int(x < y) + int(x == y) + int(x > y) == 1);
    if (x < y && y < z) CHECK(x < z);
    if (x < y) CHECK(x + z < y + z);
    if (x < y && z > Scalar(0)) CHECK(x * z < y * z);
  }
}

TEST_CASE("order agrees with floating evaluation") {
  std::mt19937_64 rng(5);
  int compared = 0;
  for (int i = 0; i < 10000; ++i) {
    Scalar x = random_scalar(rng), y = random_scalar(rng);
    double dx = x.rational_part().get_d() + x.sqrt2_part().get_d() * std::sqrt(2.0);
    double dy = y.rational_part().get_d() + y.sqrt2_part().get_d() * std::sqrt(2.0);
    if (std::abs(dx - dy) <= 1e-6) continue;
    ++compared;
    CHECK((x < y) == (dx < dy));
  }
  CHECK(compared > 9000);
}

TEST_CASE("feasibility by elimination") {
  using R = LinearConstraint::Relation;
  // x > 0, y > 0, x + y < 1: feasible.
  std::vector<LinearConstraint> ok{
      {{Rational(-1), Rational(0)}, Rational(0), R::less},
      {{Rational(0), Rational(-1)}, Rational(0), R::less},
      {{Rational(1), Rational(1)}, Rational(-1), R::less},
  };
  auto p = find_feasible_point(ok);
  REQUIRE(p);
  for (const auto& c : ok) CHECK(c.holds_at(*p));
  // x < y and y < x: infeasible; x <= y and y <= x: feasible.
  std::vector<LinearConstraint> strict{{{Rational(1), Rational(-1)}, Rational(0), R::less},
                                       {{Rational(-1), Rational(1)}, Rational(0), R::less}};
  CHECK_FALSE(is_feasible(strict));
  std::vector<LinearConstraint> weak{{{Rational(1), Rational(-1)}, Rational(0), R::less_equal},
                                     {{Rational(-1), Rational(1)}, Rational(0), R::less_equal}};
  CHECK(is_feasible(weak));
}
