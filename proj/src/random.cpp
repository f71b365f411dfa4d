#include "hnq/random.hpp"

#include <algorithm>

#include "hnq/error.hpp"

namespace hnq {

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational random_rational(Rng& rng, long range, long max_den) {
  return make_rational(uniform(rng, -range, range), uniform(rng, 1, max_den));
}

CentralCharge random_charge(Rng& rng, std::size_t vertices, long range, long max_den) {
  std::vector<Scalar> v;
  for (std::size_t i = 0; i < vertices; ++i) v.emplace_back(random_rational(rng, range, max_den));
  return CentralCharge(std::move(v));
}

Orientation random_orientation(Rng& rng, std::size_t length) {
  std::vector<bool> bits;
  for (std::size_t i = 0; i < length; ++i) bits.push_back(uniform(rng, 0, 1) == 1);
  return Orientation(bits);
}

Representation random_representation(Rng& rng, const QuiverPtr& q, Field field, long max_total, long max_vertex) {
  if (!field.is_finite()) throw UnsupportedError("random maps need a finite field");
  const std::size_t n = q->vertex_count();
  DimensionVector dims(n, 0);
  long budget = uniform(rng, 1, std::max<long>(1, max_total));
  // Spread the budget over random vertices.
  for (long k = 0; k < budget; ++k) {
    Vertex x = static_cast<Vertex>(uniform(rng, 0, static_cast<long>(n) - 1));
    if (dims[x] < max_vertex) ++dims[x];
  }
  std::vector<RationalMatrix> maps;
  for (const Edge& e : q->edges()) {
    RationalMatrix m(static_cast<std::size_t>(dims[e.target]), static_cast<std::size_t>(dims[e.source]), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = uniform(rng, 0, field.characteristic - 1);
    maps.push_back(std::move(m));
  }
  return Representation(q, field, dims, std::move(maps));
}

Subrepresentation random_subrep(Rng& rng, const Representation& v) {
  std::vector<RationalMatrix> seeds;
  const long p = v.field().is_finite() ? v.field().characteristic : 3;
  for (Vertex x = 0; x < v.quiver().vertex_count(); ++x) {
    const auto d = static_cast<std::size_t>(v.dim(x));
    RationalMatrix s(0, d);
    if (d > 0 && uniform(rng, 0, 2) == 0) {
      RationalMatrix row(1, d, Rational(0));
      for (std::size_t j = 0; j < d; ++j) row(0, j) = uniform(rng, 0, p - 1);
      s = row;
    }
    seeds.push_back(std::move(s));
  }
  return generated_subrep(v, seeds);
}

Barcode random_barcode(Rng& rng, int length, long max_total) {
  Barcode out;
  long budget = uniform(rng, 1, std::max<long>(1, max_total));
  for (int tries = 0; tries < 20 && out.total_dimension() < budget; ++tries) {
    int a = static_cast<int>(uniform(rng, 0, length));
    int b = static_cast<int>(uniform(rng, a, length));
    if (out.total_dimension() + (b - a + 1) > budget) continue;
    out.add({a, b});
  }
  if (out.empty()) {
    int a = static_cast<int>(uniform(rng, 0, length));
    out.add({a, a});
  }
  return out;
}

RectangleMultiset random_rectangles(Rng& rng, const Shape& shape, long max_total) {
  RectangleMultiset out;
  long budget = uniform(rng, 1, std::max<long>(1, max_total));
  for (int tries = 0; tries < 20 && out.total_dimension() < budget; ++tries) {
    Rectangle r;
    for (int l : shape) {
      int a = static_cast<int>(uniform(rng, 0, l));
      r.lo.push_back(a);
      r.hi.push_back(static_cast<int>(uniform(rng, a, l)));
    }
    if (out.total_dimension() + r.size() > budget) continue;
    out.add(r);
  }
  if (out.counts.empty()) {
    Rectangle r;
    for (int l : shape) {
      int a = static_cast<int>(uniform(rng, 0, l));
      r.lo.push_back(a);
      r.hi.push_back(a);
    }
    out.add(r);
  }
  return out;
}

LadderMultiset random_nestfree(Rng& rng, int length, long max_total, long max_vertex) {
  auto catalog = nestfree_indecomposables(length);
  const std::size_t n = static_cast<std::size_t>(2 * (length + 1));
  LadderMultiset out;
  DimensionVector dims(n, 0);
  long budget = uniform(rng, 1, std::max<long>(1, max_total));
  for (int tries = 0; tries < 40 && out.total_dimension() < budget; ++tries) {
    const auto& i = catalog[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(catalog.size()) - 1))];
    if (out.total_dimension() + i.dimension() > budget) continue;
    VertexSet s = ladder_support(length, i);
    bool fits = true;
    for (Vertex x : s.members())
      if (dims[x] + 1 > max_vertex) fits = false;
    if (!fits) continue;
    LadderMultiset trial = out;
    trial.add(i);
    if (!is_nestfree(trial)) continue;
    out = std::move(trial);
    for (Vertex x : s.members()) ++dims[x];
  }
  if (out.counts.empty()) out.add(ladder_top_only(0, 0));
  return out;
}

Representation random_equalised_grid(Rng& rng, const QuiverPtr& grid, Field field, long max_total) {
  const auto* fam = std::get_if<GridFamily>(&grid->family());
  if (!fam) throw InputError("expected a grid quiver");
  auto ambient = from_rectangles(grid, random_rectangles(rng, fam->shape, max_total), field).module;
  auto v = conjugate(ambient, static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
  Subrepresentation u = random_subrep(rng, v);
  if (u.total_dimension() == 0) return v;
  return subrep_as_representation(v, u);
}

}  // namespace hnq
