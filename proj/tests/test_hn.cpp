#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/hn.hpp"
#include "support.hpp"

using namespace hnq;
using testing_support::mat;
using testing_support::q;

namespace {

QuiverPtr a1() { return build_type_a(Orientation::parse("1")); }

// I[0,1] + I[1,1]^m on x0 -> x1.
Representation a1_module(long m, Field f = Field::F2()) {
  RationalMatrix e(static_cast<std::size_t>(1 + m), 1, Rational(0));
  e(0, 0) = 1;
  return Representation(a1(), f, {1, 1 + m}, {e});
}

HNType type(std::initializer_list<std::pair<Scalar, DimensionVector>> steps) {
  std::vector<HNStep> s;
  for (const auto& [mu, d] : steps) s.push_back({mu, d});
  return HNType(s);
}

}  // namespace

TEST_CASE("slope basics") {
  auto [w, wp] = fixtures_ww();
  auto bl = CentralCharge::skyscraper(w.quiver(), 0);
  CHECK(slope(w, bl) == q(1, 2));
  CHECK_THROWS_AS(slope(DimensionVector{0, 0, 0, 0}, bl), ArithmeticError);
  Representation simple(a1(), Field::F2(), {0, 1}, {RationalMatrix(1, 0)});
  CHECK(slope(simple, CentralCharge(testing_support::scalars({2, 7}))) == Scalar(7));
}

TEST_CASE("fixture HN types along the bottom-left skyscraper") {
  auto [w, wp] = fixtures_ww();
  auto bl = CentralCharge::skyscraper(w.quiver(), 0);
  CHECK(is_semistable(w, bl));
  CHECK_FALSE(is_semistable(wp, bl));
  CHECK(hn_type_brute_force(w, bl) == type({{q(1, 2), {2, 1, 1, 0}}}));
  CHECK(hn_type_brute_force(wp, bl) == type({{q(1), {1, 0, 0, 0}}, {q(1, 3), {1, 1, 1, 0}}}));
  CHECK(hn_type_spanning(wp, bl) == hn_type_brute_force(wp, bl));
  auto u = max_destabilizing(wp, bl);
  CHECK(u.dimension_vector() == DimensionVector{1, 0, 0, 0});
  auto filt = hn_filtration(wp, bl);
  REQUIRE(filt.chain.size() == 3);
  CHECK(filt.chain[1] == u);
}

TEST_CASE("A1 examples") {
  CentralCharge alpha(testing_support::scalars({2, 1}));
  auto v = a1_module(2);
  CHECK(hn_type_brute_force(v, alpha) == type({{q(3, 2), {1, 1}}, {q(1), {0, 2}}}));
  CHECK(hn_type(v, alpha).type == hn_type_brute_force(v, alpha));

  // I[0,1] + I[0,0]: the summand at x0 has slope 2.
  RationalMatrix e(1, 2, Rational(0));
  e(0, 0) = 1;
  Representation w(a1(), Field::F2(), {2, 1}, {e});
  CHECK(max_destabilizing(w, alpha).dimension_vector() == DimensionVector{1, 0});
}

TEST_CASE("thin path and stability") {
  auto i01 = a1_module(0);
  CentralCharge flat(testing_support::scalars({1, 1}));
  CentralCharge down(testing_support::scalars({2, 1}));
  CHECK(hn_type_thin(i01, down) == type({{q(3, 2), {1, 1}}}));
  CHECK(is_stable(i01, down));
  CHECK(is_semistable(i01, flat));
  CHECK_FALSE(is_stable(i01, flat));
  Representation simple(a1(), Field::F2(), {0, 1}, {RationalMatrix(1, 0)});
  CHECK(hn_type_thin(simple, CentralCharge::skyscraper(simple.quiver(), 0)) == type({{q(0), {0, 1}}}));
}

TEST_CASE("HN type arithmetic") {
  auto a = type({{q(2), {1, 0}}, {q(1), {0, 1}}});
  auto b = type({{q(3, 2), {1, 1}}, {q(1), {0, 2}}});
  auto s = a + b;
  CHECK(s == type({{q(2), {1, 0}}, {q(3, 2), {1, 1}}, {q(1), {0, 3}}}));
  CHECK(2 * a == type({{q(2), {2, 0}}, {q(1), {0, 2}}}));
  CHECK(HNType() + a == a);
  CHECK_THROWS_AS(type({{q(1), {1, 0}}, {q(2), {0, 1}}}), InputError);
}

TEST_CASE("rank from HN on the fixtures") {
  auto [w, wp] = fixtures_ww();
  auto bl = CentralCharge::skyscraper(w.quiver(), 0);
  auto hw = hn_type_brute_force(w, bl);
  auto hwp = hn_type_brute_force(wp, bl);
  CHECK(rank_from_hn(hwp, 0, 1, 2) == 1);
  CHECK(rank_from_hn(hw, 0, 2, 2) == 1);
  CHECK(rank_from_hn(hw, 0, 0, 2) == 2);
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 0; y < 4; ++y) CHECK(generalized_rank(w, x, y) == generalized_rank(wp, x, y));
  CHECK(skyscraper_invariant(w) != skyscraper_invariant(wp));
  CHECK(is_equalised(w));
  CHECK(is_equalised(wp));
}

TEST_CASE("completeness counterexample") {
  auto i01 = a1_module(0);
  CentralCharge flat(testing_support::scalars({1, 1}));
  auto pair = completeness_counterexample(i01, flat);
  REQUIRE(pair);
  CHECK(pair->semistable);
  CHECK(hn_type_brute_force(pair->original, flat) == hn_type_brute_force(pair->split, flat));
  CHECK(hn_type_brute_force(pair->split, flat) == type({{q(1), {1, 1}}}));
  CHECK_FALSE(completeness_counterexample(i01, CentralCharge(testing_support::scalars({2, 1}))));
}

TEST_CASE("guards and unsupported fields") {
  auto v = a1_module(2, Field::Q());
  CentralCharge alpha(testing_support::scalars({2, 1}));
  CHECK_THROWS_AS(hn_type_brute_force(v, alpha), UnsupportedError);
  HnOptions tiny;
  tiny.max_total_dimension = 2;
  CHECK_THROWS_AS(hn_type_brute_force(a1_module(2), alpha, tiny), SizeGuardError);
  CHECK_THROWS_AS(hn_type(a1_module(2), CentralCharge(testing_support::scalars({1})), {}), InputError);
}

TEST_CASE("skyscraper structure on the fixtures") {
  auto [w, wp] = fixtures_ww();
  auto s = skyscraper_structure(wp, 0);
  CHECK(s.n == 2);
  CHECK(s.j_in_range);
  CHECK(s.steps_are_spanning);
  CHECK(s.top_is_spanning);
}
