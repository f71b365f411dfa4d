#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/hn.hpp"
#include "hnq/random.hpp"
#include "hnq/zigzag.hpp"
#include "support.hpp"

using namespace hnq;
using testing_support::mat;

namespace {

std::set<DimensionVector> dimvecs(const std::vector<Subrepresentation>& subs) {
  std::set<DimensionVector> out;
  for (const auto& s : subs) out.insert(s.dimension_vector());
  return out;
}

}  // namespace

TEST_CASE("validation") {
  auto a1 = build_type_a(Orientation::parse("1"));
  CHECK(validate(interval_module(a1, 0, 1)).empty());
  auto sq = build_grid({1, 1});
  // Edge x_(0,0) -> x_(1,0) between spaces of dimension 2 and 2, given as 2x3.
  std::vector<RationalMatrix> maps{mat(2, 3, {1, 0, 0, 0, 1, 0}), mat(2, 2, {}), mat(2, 2, {}), mat(2, 2, {})};
  CHECK_FALSE(validate(*sq, Field::F2(), {2, 2, 2, 2}, maps).empty());
  CHECK_FALSE(validate(*a1, Field::F2(), {1, 1}, {mat(1, 1, {2})}).empty());
  CHECK_THROWS_AS(Representation(a1, Field::F3(), {1, 1}, {mat(1, 1, {5})}), InputError);
}

TEST_CASE("direct sums") {
  auto a1 = build_type_a(Orientation::parse("1"));
  auto v = interval_module(a1, 0, 1);
  auto zero = Representation::zero(a1, Field::F2());
  CHECK(direct_sum(v, zero) == v);
  auto s = direct_sum(interval_module(a1, 0, 0), interval_module(a1, 1, 1));
  CHECK(s.dimension_vector() == DimensionVector{1, 1});
  CHECK(s.map(0) == mat(1, 1, {0}));
  CHECK_THROWS_AS(direct_sum(v, interval_module(a1, 0, 1, Field::F3())), InputError);
  CHECK_THROWS_AS(direct_sum(v, interval_module(build_type_a(Orientation::parse("0")), 0, 1)), InputError);
}

TEST_CASE("equalised") {
  auto [w, wp] = fixtures_ww();
  CHECK(is_equalised(w));
  CHECK(is_equalised(wp));
  auto sq = build_grid({1, 1});
  // Square with composites [1] one way and [0] the other.
  std::vector<RationalMatrix> maps(4, mat(1, 1, {1}));
  maps[sq->find_edge(sq->edge(0).label).value()] = mat(1, 1, {0});
  Representation bad(sq, Field::F2(), {1, 1, 1, 1}, maps);
  CHECK_FALSE(is_equalised(bad));
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) {
    auto q = build_type_a(random_orientation(rng, 4));
    CHECK(is_equalised(random_representation(rng, q, Field::F2(), 8)));
  }
}

TEST_CASE("spanning subrepresentations and ranks") {
  auto [w, wp] = fixtures_ww();
  const std::size_t n = 4;
  auto span = spanning_subrep(w, VertexSet(n, {0}));
  CHECK(span.dimension_vector() == DimensionVector{2, 1, 1, 0});
  CHECK(spanning_subrep(w, VertexSet::all(n)) == full_subrep(w));
  auto a1 = build_type_a(Orientation::parse("1"));
  auto i11 = interval_module(a1, 1, 1);
  CHECK(spanning_subrep(i11, VertexSet(2, {0})).total_dimension() == 0);
  CHECK(generalized_rank(w, 0, 1) == 1);
  CHECK(generalized_rank(wp, 0, 1) == 1);
  for (Vertex x = 0; x < n; ++x) CHECK(generalized_rank(w, x, x) == w.dim(x));
  CHECK(generalized_rank(interval_module(a1, 0, 1), 0, 1) == 1);

  // Spanning subrepresentations are closed and minimal; ranks match composites.
  std::mt19937_64 rng(8);
  auto grid = build_grid({2, 1});
  for (int i = 0; i < 30; ++i) {
    auto v = random_equalised_grid(rng, grid, Field::F2(), 8);
    for (Vertex x = 0; x < grid->vertex_count(); ++x) {
      auto s = spanning_subrep(v, VertexSet(grid->vertex_count(), {x}));
      CHECK(is_subrepresentation(v, s));
      CHECK(static_cast<long>(s.bases[x].rows()) == v.dim(x));
      // Minimal: it is contained in every subrepresentation containing V_x.
      for (const auto& u : enumerate_subreps(v))
        if (static_cast<long>(u.bases[x].rows()) == v.dim(x)) CHECK(contains(v, u, s));
      for (Vertex y = 0; y < grid->vertex_count(); ++y) {
        if (!grid->leq(x, y)) continue;
        auto m = path_composite(v, x, y);
        linalg::Mat<RationalField> copy = m;
        CHECK(generalized_rank(v, x, y) == static_cast<long>(linalg::rank(RationalField{}, copy)));
      }
    }
  }
}

TEST_CASE("subrepresentation enumeration") {
  auto a1 = build_type_a(Orientation::parse("1"));
  auto subs = enumerate_subreps(interval_module(a1, 0, 1));
  CHECK(dimvecs(subs) == std::set<DimensionVector>{{0, 0}, {0, 1}, {1, 1}});
  CHECK(enumerate_subreps(Representation::zero(a1, Field::F2())).size() == 1);
  // I[0,2] on 10: x0 -> x1 <- x2, so {x1,x2} is closed as well.
  auto q10 = build_type_a(Orientation::parse("10"));
  auto i02 = enumerate_subreps(interval_module(q10, 0, 2));
  CHECK(dimvecs(i02) == std::set<DimensionVector>{{0, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 1}});
  auto big = from_barcode(build_type_a(Orientation::parse("1")), [] {
    Barcode b;
    b.add({0, 1}, 6);
    return b;
  }());
  CHECK_THROWS_AS(enumerate_subreps(big.module), SizeGuardError);
  CHECK_NOTHROW(enumerate_subreps(big.module, {12}));
  CHECK_THROWS_AS(enumerate_subreps(interval_module(a1, 0, 1, Field::Q())), UnsupportedError);
  // Over F2, F2^2 at a single vertex has 5 subspaces.
  auto point = build_type_a(Orientation());
  CHECK(enumerate_subreps(Representation(point, Field::F2(), {2}, {})).size() == 5);
  CHECK(enumerate_subreps(Representation(point, Field::F3(), {2}, {})).size() == 6);
}

TEST_CASE("thin supports agree with enumeration") {
  auto sq = build_grid({1, 1});
  CHECK(thin_subrep_supports(thin_module(sq, VertexSet::all(4), Field::F2())).size() == 6);
  auto a1 = build_type_a(Orientation::parse("1"));
  CHECK(thin_subrep_supports(interval_module(a1, 0, 1)).size() == 3);
  std::mt19937_64 rng(6);
  for (int i = 0; i < 30; ++i) {
    auto q = build_type_a(random_orientation(rng, 4));
    int a = static_cast<int>(rng() % 5), b = a + static_cast<int>(rng() % (5 - a));
    auto v = interval_module(q, a, b);
    std::set<DimensionVector> thin;
    for (const auto& s : thin_subrep_supports(v)) {
      DimensionVector d(q->vertex_count(), 0);
      for (Vertex x : s.members()) d[x] = 1;
      thin.insert(d);
    }
    CHECK(thin == dimvecs(enumerate_subreps(v)));
  }
  auto [w, wp] = fixtures_ww();
  CHECK_THROWS_AS(thin_subrep_supports(w), UnsupportedError);
}

TEST_CASE("conjugation") {
  auto a1 = build_type_a(Orientation::parse("1"));
  auto c = conjugate(interval_module(a1, 0, 1, Field::F3()), 7);
  CHECK(c.map(0).rows() == 1);
  CHECK(c.map(0)(0, 0) != 0);
  CHECK(conjugate(c, 3) == conjugate(c, 3));
  std::mt19937_64 rng(12);
  auto grid = build_grid({1, 1});
  for (int i = 0; i < 20; ++i) {
    auto v = random_equalised_grid(rng, grid, Field::F2(), 6);
    auto cv = conjugate(v, rng());
    CHECK(cv.dimension_vector() == v.dimension_vector());
    CHECK(is_equalised(cv));
    CHECK(skyscraper_invariant(cv) == skyscraper_invariant(v));
    for (Vertex x = 0; x < 4; ++x)
      for (Vertex y = 0; y < 4; ++y) CHECK(generalized_rank(cv, x, y) == generalized_rank(v, x, y));
    auto alpha = random_charge(rng, 4);
    CHECK(hn_type_brute_force(cv, alpha) == hn_type_brute_force(v, alpha));
    auto zero = Representation::zero(grid, Field::F2());
    CHECK(hn_type_brute_force(direct_sum(v, zero), alpha) == hn_type_brute_force(v, alpha));
  }
}

TEST_CASE("quotients and subrepresentations as modules") {
  auto [w, wp] = fixtures_ww();
  auto span = spanning_subrep(wp, VertexSet(4, {0}));
  auto sub = subrep_as_representation(wp, span);
  auto quo = quotient(wp, span);
  CHECK(sub.dimension_vector() + quo.dimension_vector() == wp.dimension_vector());
  CHECK(validate(sub).empty());
  CHECK(validate(quo).empty());
}
