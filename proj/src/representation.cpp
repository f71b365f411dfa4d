#include "hnq/representation.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "hnq/error.hpp"
#include "typed_rep.hpp"

namespace hnq {

using detail::Mat;
using detail::Tuple;
using detail::TypedRep;

Field Field::parse(std::string_view name) {
  if (name == "Q") return Q();
  if (name.size() >= 2 && name[0] == 'F') {
    std::string digits(name.substr(1));
    if (digits == "2" || digits == "3" || digits == "5" || digits == "7")
      return {std::stoi(digits)};
  }
  throw InputError("unknown field '" + std::string(name) + "' (expected F2, F3, F5, F7 or Q)");
}

std::string Field::name() const {
  return characteristic == 0 ? "Q" : "F" + std::to_string(characteristic);
}

long total(const DimensionVector& d) {
  long s = 0;
  for (long x : d) s += x;
  return s;
}

DimensionVector operator+(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw InputError("dimension vectors of different length");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

DimensionVector operator-(const DimensionVector& a, const DimensionVector& b) {
  if (a.size() != b.size()) throw InputError("dimension vectors of different length");
  DimensionVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

DimensionVector operator*(long k, const DimensionVector& d) {
  DimensionVector out(d);
  for (auto& x : out) x *= k;
  return out;
}

std::vector<std::string> validate(const Quiver& q, Field field, const DimensionVector& dims,
                                  const std::vector<RationalMatrix>& maps) {
  std::vector<std::string> problems;
  if (dims.size() != q.vertex_count())
    problems.push_back("expected " + std::to_string(q.vertex_count()) + " dimensions, got " +
                       std::to_string(dims.size()));
  for (std::size_t v = 0; v < dims.size(); ++v)
    if (dims[v] < 0) problems.push_back("negative dimension at vertex " + std::to_string(v));
  if (maps.size() != q.edge_count())
    problems.push_back("expected " + std::to_string(q.edge_count()) + " edge maps, got " +
                       std::to_string(maps.size()));
  if (!problems.empty()) return problems;
  for (std::size_t e = 0; e < maps.size(); ++e) {
    const Edge& edge = q.edge(e);
    const auto& m = maps[e];
    auto rows = static_cast<std::size_t>(dims[edge.target]);
    auto cols = static_cast<std::size_t>(dims[edge.source]);
    if (m.rows() != rows || m.cols() != cols) {
      std::ostringstream os;
      os << "edge " << edge.label << ": matrix is " << m.rows() << "x" << m.cols() << ", expected "
         << rows << "x" << cols;
      problems.push_back(os.str());
      continue;
    }
    if (!field.is_finite()) continue;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& x = m(i, j);
        if (x.get_den() != 1 || sgn(x) < 0 || x >= field.characteristic) {
          std::ostringstream os;
          os << "edge " << edge.label << ": entry (" << i << "," << j << ") = " << format_rational(x)
             << " is not in 0.." << field.characteristic - 1;
          problems.push_back(os.str());
        }
      }
  }
  return problems;
}

Representation::Representation(QuiverPtr quiver, Field field, DimensionVector dims,
                               std::vector<RationalMatrix> maps)
    : quiver_(std::move(quiver)), field_(field), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw InputError("representation without a quiver");
  auto problems = validate(*quiver_, field_, dims_, maps_);
  if (!problems.empty()) {
    std::string msg = "invalid representation:";
    for (const auto& p : problems) msg += "\n  " + p;
    throw InputError(msg);
  }
}

Representation Representation::zero(QuiverPtr quiver, Field field) {
  DimensionVector dims(quiver->vertex_count(), 0);
  std::vector<RationalMatrix> maps(quiver->edge_count());
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

bool Representation::is_thin() const {
  return std::all_of(dims_.begin(), dims_.end(), [](long d) { return d <= 1; });
}

VertexSet Representation::support() const {
  VertexSet s(dims_.size());
  for (Vertex v = 0; v < dims_.size(); ++v)
    if (dims_[v] > 0) s.insert(v);
  return s;
}

bool operator==(const Representation& a, const Representation& b) {
  return *a.quiver_ == *b.quiver_ && a.field_ == b.field_ && a.dims_ == b.dims_ && a.maps_ == b.maps_;
}

std::vector<std::string> validate(const Representation& v) {
  return validate(v.quiver(), v.field(), v.dimension_vector(), v.maps());
}

DimensionVector Subrepresentation::dimension_vector() const {
  DimensionVector d;
  for (const auto& b : bases) d.push_back(static_cast<long>(b.rows()));
  return d;
}

Subrepresentation zero_subrep(const Representation& v) {
  Subrepresentation u;
  for (long d : v.dimension_vector()) u.bases.emplace_back(0, static_cast<std::size_t>(d));
  return u;
}

Subrepresentation full_subrep(const Representation& v) {
  Subrepresentation u;
  for (long d : v.dimension_vector()) {
    RationalMatrix m(static_cast<std::size_t>(d), static_cast<std::size_t>(d), Rational(0));
    for (long i = 0; i < d; ++i) m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = 1;
    u.bases.push_back(std::move(m));
  }
  return u;
}

bool is_subrepresentation(const Representation& v, const Subrepresentation& u) {
  if (u.bases.size() != v.quiver().vertex_count()) return false;
  return detail::with_field(v.field(), [&](const auto& f) {
    auto tv = detail::typed(v, f);
    auto t = detail::to_tuple(f, u);
    for (Vertex x = 0; x < t.size(); ++x)
      if (t[x].cols() != static_cast<std::size_t>(v.dim(x))) return false;
    for (std::size_t e = 0; e < v.quiver().edge_count(); ++e) {
      const Edge& edge = v.quiver().edge(e);
      if (!linalg::contains(f, t[edge.target], linalg::image(f, t[edge.source], tv.maps[e])))
        return false;
    }
    return true;
  });
}

bool contains(const Representation& v, const Subrepresentation& big, const Subrepresentation& small) {
  return detail::with_field(v.field(), [&](const auto& f) {
    return detail::tuple_contains(f, detail::to_tuple(f, big), detail::to_tuple(f, small));
  });
}

Representation direct_sum(const Representation& v, const Representation& w) {
  if (!(v.quiver() == w.quiver())) throw InputError("direct sum of representations of different quivers");
  if (!(v.field() == w.field())) throw InputError("direct sum of representations over different fields");
  const Quiver& q = v.quiver();
  DimensionVector dims = v.dimension_vector() + w.dimension_vector();
  std::vector<RationalMatrix> maps;
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const Edge& edge = q.edge(e);
    RationalMatrix m(static_cast<std::size_t>(dims[edge.target]),
                     static_cast<std::size_t>(dims[edge.source]), Rational(0));
    const auto& a = v.map(e);
    const auto& b = w.map(e);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    maps.push_back(std::move(m));
  }
  return Representation(v.quiver_ptr(), v.field(), std::move(dims), std::move(maps));
}

Representation direct_sum(const std::vector<Representation>& parts, QuiverPtr quiver, Field field) {
  Representation out = Representation::zero(std::move(quiver), field);
  for (const auto& p : parts) out = direct_sum(out, p);
  return out;
}

Representation subrep_as_representation(const Representation& v, const Subrepresentation& u) {
  return detail::with_field(v.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto tv = detail::typed(v, f);
    auto t = detail::to_tuple(f, u);
    const Quiver& q = v.quiver();
    std::vector<RationalMatrix> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
      const Edge& edge = q.edge(e);
      const auto& src = t[edge.source];
      const auto& tgt = t[edge.target];
      auto pivots = linalg::pivots_of(f, tgt);
      // Images of the source basis, written in the target RREF basis: the
      // coordinate on row r is the entry at that row's pivot column.
      Mat<F> img = src.rows() ? linalg::multiply(f, src, linalg::transpose<F>(tv.maps[e]))
                              : Mat<F>(0, tgt.cols());
      Mat<F> m(tgt.rows(), src.rows(), f.zero());
      for (std::size_t j = 0; j < src.rows(); ++j)
        for (std::size_t r = 0; r < tgt.rows(); ++r) m(r, j) = img(j, pivots[r]);
      maps.push_back(detail::untyped(f, m));
    }
    return Representation(v.quiver_ptr(), v.field(), u.dimension_vector(), std::move(maps));
  });
}

Representation quotient(const Representation& v, const Subrepresentation& u) {
  return detail::with_field(v.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto tv = detail::typed(v, f);
    auto t = detail::to_tuple(f, u);
    const Quiver& q = v.quiver();
    DimensionVector dims;
    std::vector<std::vector<std::size_t>> free(q.vertex_count());
    for (Vertex x = 0; x < q.vertex_count(); ++x) {
      free[x] = linalg::free_columns(f, t[x]);
      dims.push_back(static_cast<long>(free[x].size()));
    }
    std::vector<RationalMatrix> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
      const Edge& edge = q.edge(e);
      const auto& fs = free[edge.source];
      const auto& ft = free[edge.target];
      auto pivots = linalg::pivots_of(f, t[edge.target]);
      const auto& m = tv.maps[e];
      Mat<F> out(ft.size(), fs.size(), f.zero());
      std::vector<typename F::value_type> col(m.rows());
      for (std::size_t j = 0; j < fs.size(); ++j) {
        for (std::size_t i = 0; i < m.rows(); ++i) col[i] = m(i, fs[j]);
        linalg::reduce(f, t[edge.target], pivots, col.data());
        for (std::size_t i = 0; i < ft.size(); ++i) out(i, j) = col[ft[i]];
      }
      maps.push_back(detail::untyped(f, out));
    }
    return Representation(v.quiver_ptr(), v.field(), std::move(dims), std::move(maps));
  });
}

namespace {

// Composites C(x, y) for every y reachable from x; nullopt entries mean
// "not reachable". Sets `consistent` to false at the first disagreement.
template <class F>
std::vector<std::optional<Mat<F>>> composites_from(const TypedRep<F>& v, Vertex x, bool& consistent) {
  const Quiver& q = *v.quiver;
  std::vector<std::optional<Mat<F>>> c(q.vertex_count());
  c[x] = linalg::identity(v.field, static_cast<std::size_t>(v.dims[x]));
  consistent = true;
  for (Vertex y : q.topological_order()) {
    if (y == x) continue;
    for (std::size_t e : q.in_edges(y)) {
      Vertex u = q.edge(e).source;
      if (!c[u]) continue;
      Mat<F> cand = linalg::multiply(v.field, v.maps[e], *c[u]);
      if (!c[y]) c[y] = std::move(cand);
      else if (!(*c[y] == cand)) consistent = false;
    }
  }
  return c;
}

}  // namespace

bool is_equalised(const Representation& v) {
  return detail::with_field(v.field(), [&](const auto& f) {
    auto tv = detail::typed(v, f);
    for (Vertex x = 0; x < v.quiver().vertex_count(); ++x) {
      bool ok = true;
      composites_from(tv, x, ok);
      if (!ok) return false;
    }
    return true;
  });
}

RationalMatrix path_composite(const Representation& v, Vertex x, Vertex y) {
  if (!v.quiver().leq(x, y)) throw InputError("path composite requires x <= y");
  return detail::with_field(v.field(), [&](const auto& f) {
    auto tv = detail::typed(v, f);
    bool ok = true;
    auto c = composites_from(tv, x, ok);
    return detail::untyped(f, *c[y]);
  });
}

Subrepresentation generated_subrep(const Representation& v, const std::vector<RationalMatrix>& seeds) {
  if (seeds.size() != v.quiver().vertex_count()) throw InputError("one seed subspace per vertex expected");
  return detail::with_field(v.field(), [&](const auto& f) {
    auto tv = detail::typed(v, f);
    auto t = detail::to_tuple(f, Subrepresentation{seeds});
    for (auto& b : t) b = linalg::span(f, std::move(b));
    return detail::from_tuple(f, detail::close(tv, std::move(t)));
  });
}

Subrepresentation spanning_subrep(const Representation& v, const VertexSet& s) {
  Subrepresentation seeds = zero_subrep(v);
  Subrepresentation full = full_subrep(v);
  for (Vertex x : s.members()) seeds.bases[x] = full.bases[x];
  return generated_subrep(v, seeds.bases);
}

long generalized_rank(const Representation& v, Vertex x, Vertex y) {
  VertexSet s(v.quiver().vertex_count(), {x});
  return static_cast<long>(spanning_subrep(v, s).bases[y].rows());
}

namespace detail {

bool for_each_subrep_between(const TypedRep<PrimeField>& v, const Tuple<PrimeField>& lower,
                             const std::function<bool(const Tuple<PrimeField>&)>& visit,
                             const Tuple<PrimeField>* upper) {
  const Quiver& q = *v.quiver;
  const auto& order = q.topological_order();
  const PrimeField& f = v.field;
  Tuple<PrimeField> current = lower;
  std::function<bool(std::size_t)> recurse = [&](std::size_t depth) -> bool {
    if (depth == order.size()) return visit(current);
    Vertex x = order[depth];
    auto n = static_cast<std::size_t>(v.dims[x]);
    Mat<PrimeField> required = lower[x];
    for (std::size_t e : q.in_edges(x)) {
      const auto& src = current[q.edge(e).source];
      if (src.rows() == 0) continue;
      required.append_rows(linalg::multiply(f, src, linalg::transpose<PrimeField>(v.maps[e])));
    }
    required = linalg::span(f, std::move(required));
    const Mat<PrimeField>* top = upper ? &(*upper)[x] : nullptr;
    std::size_t top_dim = top ? top->rows() : n;
    if (required.rows() == top_dim) {
      current[x] = std::move(required);
      return recurse(depth + 1);
    }
    if (!top || top->rows() == n) {
      return linalg::for_each_superspace(f, required, n, [&](const Mat<PrimeField>& w) {
        current[x] = w;
        return recurse(depth + 1);
      });
    }
    // Work in coordinates of the upper basis: the coordinate of a vector in
    // an RREF basis is read off at the pivot columns.
    auto pivots = linalg::pivots_of(f, *top);
    Mat<PrimeField> coords(required.rows(), top_dim, 0);
    for (std::size_t r = 0; r < required.rows(); ++r)
      for (std::size_t k = 0; k < top_dim; ++k) coords(r, k) = required(r, pivots[k]);
    coords = linalg::span(f, std::move(coords));
    return linalg::for_each_superspace(f, coords, top_dim, [&](const Mat<PrimeField>& w) {
      current[x] = linalg::span(f, linalg::multiply(f, w, *top));
      return recurse(depth + 1);
    });
  };
  return recurse(0);
}

}  // namespace detail

std::vector<Subrepresentation> enumerate_subreps(const Representation& v, EnumerationOptions options) {
  if (!v.field().is_finite()) throw UnsupportedError("subrepresentation enumeration needs a finite field");
  if (v.total_dimension() > options.max_total_dimension)
    throw SizeGuardError("subrepresentation enumeration refused: total dimension " +
                         std::to_string(v.total_dimension()) + " exceeds the bound of " +
                         std::to_string(options.max_total_dimension));
  PrimeField f(v.field().characteristic);
  auto tv = detail::typed(v, f);
  std::vector<Subrepresentation> out;
  detail::for_each_subrep_between(tv, detail::zero_tuple(tv), [&](const Tuple<PrimeField>& t) {
    out.push_back(detail::from_tuple(f, t));
    return true;
  });
  return out;
}

Representation conjugate(const Representation& v, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return detail::with_field(v.field(), [&](const auto& f) {
    using F = std::decay_t<decltype(f)>;
    auto tv = detail::typed(v, f);
    const Quiver& q = v.quiver();
    std::vector<Mat<F>> g, g_inv;
    for (Vertex x = 0; x < q.vertex_count(); ++x) {
      auto n = static_cast<std::size_t>(v.dim(x));
      g.push_back(linalg::random_invertible(f, n, rng));
      g_inv.push_back(*linalg::inverse(f, g.back()));
    }
    std::vector<RationalMatrix> maps;
    for (std::size_t e = 0; e < q.edge_count(); ++e) {
      const Edge& edge = q.edge(e);
      Mat<F> m = linalg::multiply(f, g[edge.target], linalg::multiply(f, tv.maps[e], g_inv[edge.source]));
      maps.push_back(detail::untyped(f, m));
    }
    return Representation(v.quiver_ptr(), v.field(), v.dimension_vector(), std::move(maps));
  });
}

std::vector<VertexSet> thin_subrep_supports(const Representation& v) {
  if (!v.is_thin()) throw UnsupportedError("thin_subrep_supports needs a thin representation");
  const Quiver& q = v.quiver();
  VertexSet supp = v.support();
  std::vector<Vertex> members = supp.members();
  if (members.size() > 24) throw SizeGuardError("support too large for up-set enumeration");
  // Edges carrying a nonzero 1x1 map.
  std::vector<std::vector<Vertex>> succ(q.vertex_count());
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const auto& m = v.map(e);
    if (m.rows() == 1 && m.cols() == 1 && sgn(m(0, 0)) != 0) succ[q.edge(e).source].push_back(q.edge(e).target);
  }
  // Sinks first so every successor is decided before its predecessors.
  std::vector<Vertex> order;
  for (auto it = q.topological_order().rbegin(); it != q.topological_order().rend(); ++it)
    if (supp.contains(*it)) order.push_back(*it);
  std::vector<VertexSet> out;
  VertexSet current(q.vertex_count());
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == order.size()) {
      out.push_back(current);
      return;
    }
    Vertex x = order[depth];
    recurse(depth + 1);
    for (Vertex y : succ[x])
      if (!current.contains(y)) return;
    current.insert(x);
    recurse(depth + 1);
    current.erase(x);
  };
  recurse(0);
  return out;
}

Subrepresentation thin_subrep(const Representation& v, const VertexSet& support) {
  Subrepresentation u = zero_subrep(v);
  for (Vertex x : support.members()) {
    if (v.dim(x) != 1) throw InputError("thin_subrep: vertex outside the support");
    u.bases[x] = RationalMatrix(1, 1, Rational(1));
  }
  return u;
}

DecomposedRepresentation assemble(QuiverPtr quiver, Field field,
                                  std::vector<DecomposedRepresentation::Summand> summands) {
  Representation module = Representation::zero(quiver, field);
  for (const auto& s : summands) {
    if (s.multiplicity < 0) throw InputError("negative multiplicity");
    for (long i = 0; i < s.multiplicity; ++i) module = direct_sum(module, s.rep);
  }
  return {std::move(module), std::move(summands)};
}

DecomposedRepresentation conjugate(const DecomposedRepresentation& v, std::uint64_t seed) {
  return {conjugate(v.module, seed), v.summands};
}

}  // namespace hnq

namespace hnq {

Representation thin_module(QuiverPtr quiver, const VertexSet& support, Field field) {
  const Quiver& q = *quiver;
  if (support.universe() != q.vertex_count()) throw InputError("support does not match the quiver");
  DimensionVector dims(q.vertex_count(), 0);
  for (Vertex x : support.members()) dims[x] = 1;
  std::vector<RationalMatrix> maps;
  for (const Edge& e : q.edges()) {
    RationalMatrix m(static_cast<std::size_t>(dims[e.target]), static_cast<std::size_t>(dims[e.source]), Rational(0));
    if (dims[e.source] && dims[e.target]) m(0, 0) = 1;
    maps.push_back(std::move(m));
  }
  return Representation(std::move(quiver), field, std::move(dims), std::move(maps));
}

}  // namespace hnq
