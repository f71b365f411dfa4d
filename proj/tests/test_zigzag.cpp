#include <random>

#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/zigzag.hpp"
#include "support.hpp"

using namespace hnq;
using testing_support::q;
using testing_support::scalars;

TEST_CASE("interval modules") {
  auto quiver = build_type_a(Orientation::parse("111"));
  CHECK(interval_module(quiver, 1, 2).dimension_vector() == DimensionVector{0, 1, 1, 0});
  auto full = interval_module(quiver, 0, 3);
  for (const auto& m : full.maps()) CHECK(m(0, 0) == 1);
  CHECK(interval_module(quiver, 2, 2).total_dimension() == 1);
  CHECK_THROWS_AS(interval_module(quiver, 2, 1), InputError);
  CHECK_THROWS_AS(interval_module(quiver, 0, 4), InputError);
}

TEST_CASE("barcode modules") {
  auto quiver = build_type_a(Orientation::parse("1"));
  Barcode b;
  b.add({0, 1});
  b.add({1, 1}, 2);
  CHECK(from_barcode(quiver, b).module.dimension_vector() == DimensionVector{1, 3});
  CHECK(from_barcode(quiver, Barcode{}).module.is_zero());
}

TEST_CASE("level sets") {
  auto ls = chi_eta(Orientation::parse("1101"));
  CHECK(ls.chi == std::vector<long>{0, 1, 2, 2, 3});
  CHECK(ls.eta == std::vector<long>{0, 0, 0, 1, 1});
  auto eq = chi_eta(Orientation::parse("1111"));
  CHECK(eq.chi == std::vector<long>{0, 1, 2, 3, 4});
  CHECK(eq.eta == std::vector<long>{0, 0, 0, 0, 0});
  auto ten = chi_eta(Orientation::parse("10"));
  CHECK(ten.x_blocks == std::vector<Interval>{{0, 0}, {1, 2}});
  CHECK(ten.y_blocks == std::vector<Interval>{{0, 1}, {2, 2}});
}

TEST_CASE("classifier examples") {
  CHECK(is_complete_type_a(Orientation::parse("11"), CentralCharge(scalars({3, 2, 1}))));
  CHECK_FALSE(is_complete_type_a(Orientation::parse("1"), CentralCharge(scalars({1, 1}))));
  CHECK(is_complete_type_a(Orientation::parse("10"), CentralCharge(scalars({2, -3, 1}))));
  // Every interval module is stable for that charge.
  auto quiver = build_type_a(Orientation::parse("10"));
  for (int a = 0; a <= 2; ++a)
    for (int b = a; b <= 2; ++b) CHECK(is_stable(interval_module(quiver, a, b), CentralCharge(scalars({2, -3, 1}))));
}

TEST_CASE("shift invariance and solver") {
  std::mt19937_64 rng(7);
  for (int len = 0; len <= 4; ++len)
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::vector<bool> t;
      for (int i = 0; i < len; ++i) t.push_back((bits >> i) & 1u);
      Orientation tau(t);
      auto alpha = complete_type_a_charge(tau);
      CHECK(is_complete_type_a(tau, alpha));
      CHECK(is_complete_type_a(tau, alpha.shifted(q(-17, 3))));
    }
}

TEST_CASE("recovery examples") {
  auto quiver = build_type_a(Orientation::parse("1"));
  CentralCharge alpha(scalars({2, 1}));
  Barcode b;
  b.add({0, 1});
  b.add({1, 1}, 2);
  auto v = from_barcode(quiver, b);
  auto hn = hn_type_brute_force(conjugate(v.module, 3), alpha);
  CHECK(recover_barcode(hn, Orientation::parse("1"), alpha) == b);
  CHECK(recover_barcode(HNType(), Orientation::parse("1"), alpha).empty());
  CHECK_THROWS_AS(recover_barcode(hn, Orientation::parse("1"), CentralCharge(scalars({1, 1}))), RefusalError);
  HNType bogus({{q(3, 2), {2, 1}}});
  CHECK_THROWS_AS(recover_barcode(bogus, Orientation::parse("1"), alpha), InconsistencyError);
}
