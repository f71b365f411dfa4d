#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/ladder.hpp"
#include "support.hpp"

using namespace hnq;
using testing_support::q;

TEST_CASE("catalog") {
  auto cat = nestfree_indecomposables(1);
  CHECK(cat.size() == 11);
  long full = 0;
  for (const auto& i : cat) full += i.has_top() && i.has_bottom();
  CHECK(full == 5);
  auto l1 = build_ladder(1);
  auto m = ladder_module(l1, ladder_full(1, 1, 0, 1));
  DimensionVector expect(4, 0);
  expect[ladder_top(1)] = 1;
  expect[ladder_bottom(1, 0)] = 1;
  expect[ladder_bottom(1, 1)] = 1;
  CHECK(m.dimension_vector() == expect);
  for (int l = 1; l <= 3; ++l) {
    auto ladder = build_ladder(l);
    for (const auto& i : nestfree_indecomposables(l)) {
      auto v = ladder_module(ladder, i);
      CHECK(v.is_thin());
      CHECK(is_equalised(v));
    }
  }
  CHECK_THROWS_AS(validate_indec(3, ladder_full(1, 3, 2, 2)), InputError);
}

TEST_CASE("nesting") {
  auto ladder = build_ladder(2);
  LadderMultiset m;
  m.add(ladder_top_only(0, 2));
  m.add(ladder_top_only(1, 1));
  CHECK_FALSE(is_nestfree(m));
  CHECK_FALSE(is_nestfree(from_ladder_multiset(ladder, m).module));
  LadderMultiset ok;
  ok.add(ladder_full(1, 2, 0, 1), 2);
  ok.add(ladder_top_only(0, 1));
  CHECK(is_nestfree(ok));
  CHECK(is_nestfree(conjugate(from_ladder_multiset(ladder, ok).module, 5)));
  auto v = fixture_v_lambda(1);
  auto rows = row_barcodes(v);
  Barcode top, bottom;
  top.add({1, 4});
  top.add({2, 3});
  bottom.add({0, 3});
  bottom.add({1, 2});
  CHECK(rows.top == top);
  CHECK(rows.bottom == bottom);
  CHECK_FALSE(is_nestfree(v));
}

TEST_CASE("inclusions agree with thin subrepresentations") {
  CHECK(inclusion_relation(ladder_full(1, 1, 1, 1), ladder_full(1, 1, 0, 1)));
  CHECK(inclusion_relation(ladder_top_only(2, 3), ladder_top_only(1, 3)));
  CHECK_FALSE(inclusion_relation(ladder_top_only(1, 3), ladder_top_only(2, 3)));
  for (int l = 1; l <= 4; ++l) {
    auto ladder = build_ladder(l);
    auto cat = nestfree_indecomposables(l);
    for (const auto& big : cat) {
      auto supports = thin_subrep_supports(ladder_module(ladder, big));
      for (const auto& small : cat) {
        auto s = ladder_support(l, small);
        bool is_sub = std::find(supports.begin(), supports.end(), s) != supports.end() && !(small == big);
        CHECK_MESSAGE(inclusion_relation(small, big) == is_sub, small.to_string(), " in ", big.to_string());
      }
    }
  }
}

TEST_CASE("partition") {
  auto part = indec_partition(1);
  CHECK(part.size() == 10);
  auto cls = class_of(1, ladder_full(1, 1, 0, 1));
  CHECK(cls.k == 3);
  CHECK(cls.s == std::vector<Vertex>{ladder_top(1), ladder_bottom(1, 0)});
  for (int l = 1; l <= 4; ++l)
    for (const auto& [c, members] : indec_partition(l)) {
      CHECK((c.s.size() == 1 || c.s.size() == 2));
      if (c.s.size() == 2) CHECK(c.s[1] - (l + 1) < c.s[0]);
    }
}

TEST_CASE("t values and the charge family") {
  auto t = t_value(3, 1);
  CHECK(t == Scalar(make_rational(1, 2), make_rational(3, 4)));
  CHECK(t > q(1, 2));
  CHECK(t < q(2));
  CHECK_THROWS_AS(t_value(2, 1), InputError);
  CHECK(charge_family(1).size() == 5);
  CHECK(charge_family(2).size() == 11);
  CHECK(charge_family(4).size() == 40);
  for (int l = 1; l <= 6; ++l) CHECK(static_cast<long>(charge_family(l).size()) == charge_family_size(l));
}

TEST_CASE("closed form examples") {
  const int l = 1;
  auto fam = charge_family(l);
  const ChargeFamilyEntry* pair = nullptr;
  for (const auto& e : fam)
    if (e.s.size() == 2) pair = &e;
  REQUIRE(pair);
  auto hn = hn_type_indec(l, ladder_full(1, 1, 0, 1), pair->charge);
  REQUIRE(hn.size() == 1);
  CHECK(hn.steps()[0].slope == pair->levels[0].lambda);
  auto ladder = build_ladder(l);
  for (const auto& e : fam)
    for (const auto& i : nestfree_indecomposables(l))
      CHECK(hn_type_indec(l, i, e.charge) == hn_type_brute_force(ladder_module(ladder, i), e.charge));
}

TEST_CASE("recovery example") {
  const int l = 1;
  auto ladder = build_ladder(l);
  LadderMultiset m;
  m.add(ladder_full(1, 1, 0, 1));
  m.add(ladder_top_only(0, 0), 2);
  auto v = conjugate(from_ladder_multiset(ladder, m).module, 9);
  std::vector<HNType> hn;
  for (const auto& e : charge_family(l)) hn.push_back(hn_type_brute_force(v, e.charge));
  CHECK(recover_ladder(l, hn) == m);
  std::vector<HNType> empty(charge_family(l).size());
  CHECK(recover_ladder(l, empty).counts.empty());
}

TEST_CASE("infeasibility certificate") {
  auto rep = infeasibility_certificate();
  for (bool b : rep.inclusions_valid) CHECK(b);
  CHECK(rep.combination == std::vector<long>{4, 4, 1, 4, 1});
  CHECK(rep.cancels);
  CHECK(rep.lp_infeasible);
}

TEST_CASE("nested fixture") {
  CHECK_THROWS_AS(fixture_v_lambda(1, Field::F2()), UnsupportedError);
  auto v1 = fixture_v_lambda(1);
  auto v2 = fixture_v_lambda(2);
  CHECK(is_equalised(v1));
  CHECK(is_equalised(v2));
  auto fail = identity_morphism_failure(v1, v2);
  REQUIRE(fail);
  CHECK(*fail == "e2");
}
