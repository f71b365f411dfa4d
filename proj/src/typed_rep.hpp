#pragma once

// Field-typed working copies of representations, used by the hot loops.

#include <functional>
#include <utility>
#include <vector>

#include "hnq/error.hpp"
#include "hnq/linalg.hpp"
#include "hnq/representation.hpp"

namespace hnq::detail {

template <class F>
using Mat = linalg::Mat<F>;
template <class F>
using Tuple = std::vector<Mat<F>>;

template <class F>
struct TypedRep {
  F field;
  const Quiver* quiver;
  DimensionVector dims;
  std::vector<Mat<F>> maps;
};

template <class F>
TypedRep<F> typed(const Representation& v, const F& f) {
  TypedRep<F> out{f, &v.quiver(), v.dimension_vector(), {}};
  out.maps.reserve(v.maps().size());
  for (const auto& m : v.maps())
    out.maps.push_back(m.template map<typename F::value_type>(
        [&](const Rational& q) { return f.from_rational(q); }));
  return out;
}

template <class F>
RationalMatrix untyped(const F& f, const Mat<F>& m) {
  return m.template map<Rational>([&](const typename F::value_type& x) { return f.to_rational(x); });
}

template <class F>
Tuple<F> to_tuple(const F& f, const Subrepresentation& u) {
  Tuple<F> out;
  for (const auto& b : u.bases)
    out.push_back(b.template map<typename F::value_type>(
        [&](const Rational& q) { return f.from_rational(q); }));
  return out;
}

template <class F>
Subrepresentation from_tuple(const F& f, const Tuple<F>& t) {
  Subrepresentation out;
  for (const auto& b : t) out.bases.push_back(untyped(f, b));
  return out;
}

template <class F>
Tuple<F> zero_tuple(const TypedRep<F>& v) {
  Tuple<F> t;
  for (long d : v.dims) t.emplace_back(0, static_cast<std::size_t>(d));
  return t;
}

template <class F>
Tuple<F> full_tuple(const TypedRep<F>& v) {
  Tuple<F> t;
  for (long d : v.dims) t.push_back(linalg::identity(v.field, static_cast<std::size_t>(d)));
  return t;
}

template <class F>
long tuple_dim(const Tuple<F>& t) {
  long s = 0;
  for (const auto& b : t) s += static_cast<long>(b.rows());
  return s;
}

template <class F>
DimensionVector tuple_dimvec(const Tuple<F>& t) {
  DimensionVector d;
  for (const auto& b : t) d.push_back(static_cast<long>(b.rows()));
  return d;
}

/// Closes `t` under the edge maps (each entry must be in RREF).
template <class F>
Tuple<F> close(const TypedRep<F>& v, Tuple<F> t) {
  const F& f = v.field;
  const Quiver& q = *v.quiver;
  if (q.is_acyclic()) {
    for (Vertex x : q.topological_order()) {
      bool grew = false;
      Mat<F> acc = t[x];
      for (std::size_t e : q.in_edges(x)) {
        const Edge& edge = q.edge(e);
        if (t[edge.source].rows() == 0) continue;
        acc.append_rows(linalg::multiply(f, t[edge.source], linalg::transpose<F>(v.maps[e])));
        grew = true;
      }
      if (grew) t[x] = linalg::span(f, std::move(acc));
    }
    return t;
  }
  std::vector<Vertex> work;
  for (Vertex x = 0; x < t.size(); ++x)
    if (t[x].rows() > 0) work.push_back(x);
  while (!work.empty()) {
    Vertex x = work.back();
    work.pop_back();
    for (std::size_t e : q.out_edges(x)) {
      Vertex y = q.edge(e).target;
      Mat<F> img = linalg::image(f, t[x], v.maps[e]);
      if (linalg::contains(f, t[y], img)) continue;
      t[y] = linalg::sum(f, t[y], img);
      work.push_back(y);
    }
  }
  return t;
}

template <class F>
bool tuple_contains(const F& f, const Tuple<F>& big, const Tuple<F>& small) {
  for (std::size_t x = 0; x < big.size(); ++x)
    if (!linalg::contains(f, big[x], small[x])) return false;
  return true;
}

/// Scalar sum of alpha over the dimension vector.
inline Scalar charge_mass(const std::vector<Scalar>& alpha, const DimensionVector& d) {
  Scalar s;
  for (std::size_t x = 0; x < d.size(); ++x)
    if (d[x] != 0) s += alpha[x] * Scalar(d[x]);
  return s;
}

/// Runs `fn(field)` with the PrimeField or RationalField matching v.
template <class Fn>
decltype(auto) with_field(Field field, Fn&& fn) {
  if (field.is_finite()) return fn(PrimeField(field.characteristic));
  return fn(RationalField{});
}

}  // namespace hnq::detail

namespace hnq::detail {

/// Visits every subrepresentation U with lower <= U <= upper (both
/// subrepresentations of v, upper defaulting to v), choosing the subspace at
/// each vertex in topological order among those containing lower_x and the
/// images of the already chosen subspaces. Returns false if `visit` asked
/// to stop.
bool for_each_subrep_between(const TypedRep<PrimeField>& v, const Tuple<PrimeField>& lower,
                             const std::function<bool(const Tuple<PrimeField>&)>& visit,
                             const Tuple<PrimeField>* upper = nullptr);

}  // namespace hnq::detail
