#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "hnq/error.hpp"
#include "hnq/quiver.hpp"

using namespace hnq;

namespace {

bool has_edge(const Quiver& q, const std::string& from, const std::string& to) {
  for (const auto& e : q.edges())
    if (q.vertex_name(e.source) == from && q.vertex_name(e.target) == to) return true;
  return false;
}

VertexSet set_of(const Quiver& q, std::initializer_list<const char*> names) {
  VertexSet s(q.vertex_count());
  for (const char* n : names) s.insert(q.vertex(n));
  return s;
}

}  // namespace

TEST_CASE("type A") {
  auto q = build_type_a(Orientation::parse("100"));
  CHECK(q->vertex_count() == 4);
  CHECK(has_edge(*q, "x0", "x1"));
  CHECK(has_edge(*q, "x2", "x1"));
  CHECK(has_edge(*q, "x3", "x2"));
  auto eq = build_type_a(Orientation::equioriented(3));
  for (int i = 0; i < 3; ++i) CHECK(has_edge(*eq, "x" + std::to_string(i), "x" + std::to_string(i + 1)));
  auto point = build_type_a(Orientation());
  CHECK(point->vertex_count() == 1);
  CHECK(point->edge_count() == 0);
  CHECK(q->is_acyclic());
  CHECK_THROWS_AS(Orientation::parse("102"), InputError);
}

TEST_CASE("grids") {
  auto sq = build_grid({1, 1});
  CHECK(sq->vertex_count() == 4);
  CHECK(sq->edge_count() == 4);
  CHECK(sq->vertex_name(0) == "x_(0,0)");
  CHECK(sq->vertex_name(1) == "x_(1,0)");
  CHECK(has_edge(*sq, "x_(0,0)", "x_(1,0)"));
  CHECK(has_edge(*sq, "x_(1,0)", "x_(1,1)"));
  auto chain = build_grid({2});
  CHECK(chain->vertex_count() == 3);
  CHECK(chain->edge_count() == 2);
  auto strip = build_grid({3, 1});
  CHECK(strip->vertex_count() == 8);
  CHECK(strip->edge_count() == 10);
  CHECK_THROWS_AS(build_grid({0, 1}), InputError);
  CHECK_THROWS_AS(build_grid({}), InputError);
}

TEST_CASE("ladders") {
  auto l1 = build_ladder(1);
  CHECK(l1->vertex_count() == 4);
  CHECK(has_edge(*l1, "x0+", "x0-"));
  CHECK(has_edge(*l1, "x1+", "x1-"));
  auto l4 = build_ladder(4);
  CHECK(l4->edge_count() == 2 * 4 + 5);
  CHECK(build_ladder(3)->vertex_count() == 8);
  CHECK(l4->find_edge("e2").has_value());
  CHECK(l4->find_edge("e2+").has_value());
  CHECK_THROWS_AS(build_ladder(0), InputError);
}

TEST_CASE("flow order") {
  auto sq = build_grid({1, 1});
  CHECK(flow_leq(*sq, sq->vertex("x_(0,0)"), sq->vertex("x_(1,1)")));
  CHECK_FALSE(flow_leq(*sq, sq->vertex("x_(1,0)"), sq->vertex("x_(0,1)")));
  CHECK(flow_leq(*sq, 2, 2));
  // On grids the flow order is the coordinatewise order.
  auto g = build_grid({2, 3});
  for (Vertex x = 0; x < g->vertex_count(); ++x)
    for (Vertex y = 0; y < g->vertex_count(); ++y) {
      auto px = grid_point({2, 3}, x), py = grid_point({2, 3}, y);
      CHECK(flow_leq(*g, x, y) == (px[0] <= py[0] && px[1] <= py[1]));
    }
  auto cyclic = std::make_shared<const Quiver>(std::vector<std::string>{"a", "b"},
                                               std::vector<Edge>{{0, 1, "f"}, {1, 0, "g"}});
  CHECK_FALSE(cyclic->is_acyclic());
  CHECK_THROWS_AS(flow_leq(*cyclic, 0, 1), UnsupportedError);
}

TEST_CASE("up-closure") {
  auto sq = build_grid({1, 1});
  CHECK(up_closure(*sq, set_of(*sq, {"x_(0,0)"})).size() == 4);
  CHECK(up_closure(*sq, VertexSet(4)).empty());
  CHECK(up_closure(*sq, set_of(*sq, {"x_(1,0)"})) == set_of(*sq, {"x_(1,0)", "x_(1,1)"}));
  std::mt19937_64 rng(2);
  auto g = build_grid({2, 2});
  for (int i = 0; i < 100; ++i) {
    VertexSet a(g->vertex_count());
    for (Vertex x = 0; x < g->vertex_count(); ++x)
      if (rng() % 2) a.insert(x);
    VertexSet c = up_closure(*g, a);
    CHECK(a.is_subset_of(c));
    CHECK(up_closure(*g, c) == c);
    CHECK(is_up_closed(*g, c));
  }
}

TEST_CASE("up-closed enumeration") {
  auto a1 = build_type_a(Orientation::parse("1"));
  auto sets = enumerate_up_closed(*a1);
  CHECK(sets.size() == 3);
  CHECK(std::find(sets.begin(), sets.end(), set_of(*a1, {"x1"})) != sets.end());
  CHECK(enumerate_up_closed(*build_grid({1, 1})).size() == 6);
  CHECK(enumerate_up_closed(*build_type_a(Orientation())).size() == 2);
  for (const auto& s : enumerate_up_closed(*build_grid({2, 2}))) CHECK(is_up_closed(*build_grid({2, 2}), s));
  CHECK_THROWS_AS(enumerate_up_closed(*build_grid({4, 4})), SizeGuardError);
}

TEST_CASE("distributive lattice bound") {
  std::mt19937_64 rng(9);
  for (const auto& q : {build_grid({2, 2}), build_ladder(2)}) {
    auto coords = *lattice_coordinates(*q);
    std::map<std::vector<int>, Vertex> at;
    for (Vertex x = 0; x < q->vertex_count(); ++x) at[coords[x]] = x;
    for (int i = 0; i < 100; ++i) {
      std::set<Vertex> x, y, meets, joins;
      for (Vertex v = 0; v < q->vertex_count(); ++v) {
        if (rng() % 2) x.insert(v);
        if (rng() % 2) y.insert(v);
      }
      for (Vertex a : x)
        for (Vertex b : y) {
          std::vector<int> lo(coords[a].size()), hi(coords[a].size());
          for (std::size_t k = 0; k < lo.size(); ++k) {
            lo[k] = std::min(coords[a][k], coords[b][k]);
            hi[k] = std::max(coords[a][k], coords[b][k]);
          }
          meets.insert(at.at(lo));
          joins.insert(at.at(hi));
        }
      CHECK(x.size() * y.size() <= meets.size() * joins.size());
    }
  }
}
