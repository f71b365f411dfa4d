#include <random>

#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/hn.hpp"
#include "hnq/io.hpp"
#include "hnq/random.hpp"

using namespace hnq;

namespace {

template <class T, class F>
void roundtrip_text(const T& value, F parse) {
  // Through text as well, so the encoding survives serialisation.
  Json j = Json::parse(to_json(value).dump());
  CHECK(parse(j) == value);
}

}  // namespace

TEST_CASE("quiver and representation round trips") {
  Rng rng(21);
  for (const auto& q : {build_type_a(Orientation::parse("1011")), build_grid({2, 1}), build_ladder(2)}) {
    auto back = quiver_from_json(Json::parse(to_json(*q).dump()));
    CHECK(back->vertex_count() == q->vertex_count());
    CHECK(back->edge_count() == q->edge_count());
    for (int i = 0; i < 10; ++i) {
      auto v = random_representation(rng, q, Field::F3(), 8);
      CHECK(representation_from_json(Json::parse(to_json(v).dump())) == v);
    }
  }
  auto q = build_type_a(Orientation::parse("1"));
  Representation v(q, Field::Q(), {1, 1}, {RationalMatrix(1, 1, make_rational(-2, 3))});
  CHECK(representation_from_json(to_json(v)) == v);
}

TEST_CASE("malformed JSON is rejected") {
  auto q = build_type_a(Orientation::parse("1"));
  Json j = to_json(interval_module(q, 0, 1));
  j["spaces"]["x9"] = 1;
  CHECK_THROWS_AS(representation_from_json(j), InputError);
  Json k = to_json(interval_module(q, 0, 1));
  k["maps"]["e1"] = Json::array({Json::array({1, 0})});
  CHECK_THROWS_AS(representation_from_json(k), InputError);
  Json u = to_json(interval_module(q, 0, 1));
  u["maps"]["e7"] = Json::array({Json::array({1})});
  CHECK_THROWS_AS(representation_from_json(u), InputError);
  Json tampered = to_json(*build_grid({1, 1}));
  tampered["edges"].erase(0);
  CHECK_THROWS_AS(quiver_from_json(tampered), InputError);
}

TEST_CASE("scalar, charge and HN type round trips") {
  Rng rng(4);
  auto q = build_grid({1, 1});
  for (int i = 0; i < 20; ++i) {
    auto alpha = random_charge(rng, 4);
    alpha.values[1] = alpha.values[1] + Scalar(Rational(0), random_rational(rng, 3, 3));
    CHECK(charge_from_json(Json::parse(to_json(alpha, *q).dump()), *q) == alpha);
    CHECK(scalar_from_json(to_json(alpha.values[1])) == alpha.values[1]);
    auto v = random_equalised_grid(rng, q, Field::F2(), 6);
    auto hn = hn_type(v, alpha).type;
    CHECK(hn_type_from_json(Json::parse(to_json(hn, *q).dump()), *q) == hn);
  }
}

TEST_CASE("multiset round trips") {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    roundtrip_text(random_barcode(rng, 4, 8), barcode_from_json);
    roundtrip_text(random_rectangles(rng, {2, 2}, 8), rectangles_from_json);
    roundtrip_text(random_nestfree(rng, 3, 10), ladder_multiset_from_json);
  }
  roundtrip_text(ladder_top_only(0, 2), ladder_indec_from_json);
  roundtrip_text(ladder_bottom_only(1, 1), ladder_indec_from_json);
  CHECK(to_json(ladder_top_only(0, 2))["c"] == "inf");
}

TEST_CASE("generators are seeded and respect their contracts") {
  Rng a(5), b(5);
  CHECK(random_nestfree(a, 4, 12) == random_nestfree(b, 4, 12));
  Rng rng(17);
  auto ladder = build_ladder(3);
  auto grid = build_grid({2, 2});
  for (int i = 0; i < 30; ++i) {
    auto m = random_nestfree(rng, 3, 12, 3);
    CHECK(is_nestfree(m));
    CHECK(m.total_dimension() <= 12);
    auto v = from_ladder_multiset(ladder, m).module;
    for (Vertex x = 0; x < ladder->vertex_count(); ++x) CHECK(v.dim(x) <= 3);
    auto g = random_equalised_grid(rng, grid, Field::F2(), 8);
    CHECK(is_equalised(g));
    CHECK(g.total_dimension() <= 8);
    auto bc = random_barcode(rng, 5, 9);
    CHECK(bc.total_dimension() <= 9);
  }
}

TEST_CASE("charge family listing") {
  auto fam = charge_family_json(2);
  CHECK(fam.is_array());
  CHECK(fam.size() == 11);
  for (const auto& entry : fam) {
    CHECK(entry.contains("k"));
    CHECK(entry.contains("S"));
    CHECK(entry.contains("charge"));
  }
}
