#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/grid.hpp"
#include "support.hpp"

using namespace hnq;
using testing_support::q;
using testing_support::scalars;

namespace {
Rectangle rect(std::vector<int> lo, std::vector<int> hi) { return Rectangle{std::move(lo), std::move(hi)}; }
}  // namespace

TEST_CASE("rectangle modules") {
  auto g = build_grid({1, 1});
  auto full = rectangle_module(g, rect({0, 0}, {1, 1}));
  CHECK(full.dimension_vector() == DimensionVector{1, 1, 1, 1});
  CHECK(is_equalised(full));
  CHECK(rectangle_module(g, rect({1, 0}, {1, 0})).total_dimension() == 1);
  CHECK_THROWS_AS(rectangle_module(g, rect({0, 0}, {2, 1})), InputError);
  CHECK(rectangle_count({1, 1}) == 9);
  CHECK(enumerate_rectangles({2, 2}).size() == 36);
  CHECK_THROWS_AS(enumerate_rectangles({9, 9, 9}, 5000), SizeGuardError);
}

TEST_CASE("hyperplane arrangement examples") {
  CentralCharge on(scalars({5, 3, 2, 1}));
  auto h = in_hyperplane_arrangement(on, {1, 1});
  REQUIRE(h.on_hyperplane);
  CHECK(rectangle_slope(on, {1, 1}, h.witness->first) == rectangle_slope(on, {1, 1}, h.witness->second));
  CHECK(rectangle_slope(on, {1, 1}, rect({1, 0}, {1, 1})) == Scalar(2));
  CHECK(rectangle_slope(on, {1, 1}, rect({0, 1}, {0, 1})) == Scalar(2));
  CHECK_FALSE(in_hyperplane_arrangement(CentralCharge(scalars({8, 4, 2, 1})), {1, 1}).on_hyperplane);
  CHECK(in_hyperplane_arrangement(CentralCharge(scalars({1, 1, 1, 1})), {1, 1}).on_hyperplane);
}

TEST_CASE("grid classification") {
  CHECK(is_complete_grid_charge(CentralCharge(scalars({8, 4, 2, 1})), {1, 1}) == GridVerdict::complete);
  CHECK(is_complete_grid_charge(CentralCharge(scalars({5, 3, 2, 1})), {1, 1}) == GridVerdict::on_hyperplane);
  CHECK(is_complete_grid_charge(CentralCharge(scalars({4, 8, 2, 1})), {1, 1}) == GridVerdict::incomplete);
  for (std::uint64_t seed = 0; seed < 5; ++seed)
    CHECK(is_complete_grid_charge(generic_descending_charge({2, 2}, seed), {2, 2}) == GridVerdict::complete);
}

TEST_CASE("flow network examples") {
  auto g = build_grid({1, 1});
  VertexSet top(4, {3});
  auto net = build_flow_network(*g, top);
  int source_arcs = 0, sink_arcs = 0, middle = 0;
  for (const auto& a : net.arcs) {
    if (a.from == FlowNetwork::source) {
      ++source_arcs;
      CHECK(*a.capacity == q(1, 3));
    } else if (a.to == FlowNetwork::sink) {
      ++sink_arcs;
      CHECK(*a.capacity == Scalar(1));
    } else {
      ++middle;
      CHECK_FALSE(a.capacity);
    }
  }
  CHECK(source_arcs == 3);
  CHECK(sink_arcs == 1);
  CHECK(middle == 3);
  CHECK(max_flow(net) == Scalar(1));
  CHECK(min_cut_bruteforce(net) == Scalar(1));

  VertexSet all_but_min(4, {1, 2, 3});
  auto net2 = build_flow_network(*g, all_but_min);
  CHECK(max_flow(net2) == min_cut_bruteforce(net2));
  CHECK_THROWS_AS(build_flow_network(*g, VertexSet(4, {0})), InputError);
  CHECK_THROWS_AS(max_flow(FlowNetwork{}), InputError);
}

TEST_CASE("lattice inequality examples") {
  auto g = build_grid({1, 1});
  CHECK(lattice_inequality_check(*g, VertexSet(4, {1, 3}), VertexSet(4, {0})));
  CHECK(lattice_inequality_check(*g, VertexSet(4, {1, 3}), VertexSet(4)));
  CHECK(lattice_inequality_check(*g, VertexSet(4, {1, 3}), VertexSet(4, {0, 2})));
  CHECK_THROWS_AS(lattice_inequality_check(*g, VertexSet(4, {0}), VertexSet(4)), InputError);
}

TEST_CASE("rectangle recovery example") {
  auto g = build_grid({1, 1});
  CentralCharge alpha(scalars({8, 4, 2, 1}));
  RectangleMultiset m;
  m.add(rect({0, 0}, {1, 1}));
  m.add(rect({1, 1}, {1, 1}), 2);
  auto v = from_rectangles(g, m);
  auto hn = hn_type_brute_force(conjugate(v.module, 11), alpha);
  REQUIRE(hn.size() == 2);
  CHECK(hn.steps()[0].slope == q(15, 4));
  CHECK(hn.steps()[1].slope == Scalar(1));
  CHECK(recover_rectangles(hn, alpha, {1, 1}) == m);
  CHECK(recover_rectangles(HNType(), alpha, {1, 1}).counts.empty());
  CHECK_THROWS_AS(recover_rectangles(hn, CentralCharge(scalars({5, 3, 2, 1})), {1, 1}), RefusalError);
}
