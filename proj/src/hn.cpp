#include "hnq/hn.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hnq/error.hpp"
#include "typed_rep.hpp"

namespace hnq {

using detail::Mat;
using detail::Tuple;
using detail::TypedRep;

CentralCharge CentralCharge::skyscraper(const Quiver& q, Vertex x) {
  if (x >= q.vertex_count()) throw InputError("skyscraper vertex out of range");
  std::vector<Scalar> v(q.vertex_count(), Scalar(0));
  v[x] = Scalar(1);
  return CentralCharge(std::move(v));
}

CentralCharge CentralCharge::constant(const Quiver& q, const Scalar& c) {
  return CentralCharge(std::vector<Scalar>(q.vertex_count(), c));
}

CentralCharge CentralCharge::descending(const Quiver& q) {
  std::vector<Scalar> v(q.vertex_count(), Scalar(0));
  std::vector<long> height(q.vertex_count(), 0);
  const auto& order = q.topological_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    for (std::size_t e : q.out_edges(*it))
      height[*it] = std::max(height[*it], height[q.edge(e).target] + 1);
  for (Vertex x = 0; x < q.vertex_count(); ++x) v[x] = Scalar(height[x]);
  return CentralCharge(std::move(v));
}

CentralCharge CentralCharge::shifted(const Scalar& c) const {
  CentralCharge out(*this);
  for (auto& x : out.values) x += c;
  return out;
}

bool CentralCharge::is_rational() const {
  return std::all_of(values.begin(), values.end(), [](const Scalar& s) { return s.is_rational(); });
}

Scalar slope(const DimensionVector& d, const CentralCharge& alpha) {
  if (d.size() != alpha.size()) throw InputError("charge and dimension vector sizes differ");
  long n = total(d);
  if (n == 0) throw ArithmeticError("slope of the zero representation is undefined");
  return detail::charge_mass(alpha.values, d) / Scalar(n);
}

Scalar slope(const Representation& v, const CentralCharge& alpha) {
  return slope(v.dimension_vector(), alpha);
}

HNType::HNType(std::vector<HNStep> steps) : steps_(std::move(steps)) {
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (hnq::total(steps_[i].dimvec) <= 0) throw InputError("HN type with an empty step");
    for (long x : steps_[i].dimvec)
      if (x < 0) throw InputError("HN type with a negative dimension");
    if (i > 0 && !(steps_[i].slope < steps_[i - 1].slope))
      throw InputError("HN type slopes must strictly decrease");
  }
}

DimensionVector HNType::value_at(const Scalar& mu, std::size_t vertex_count) const {
  for (const auto& s : steps_)
    if (s.slope == mu) return s.dimvec;
  return DimensionVector(vertex_count, 0);
}

DimensionVector HNType::total(std::size_t vertex_count) const {
  DimensionVector d(vertex_count, 0);
  for (const auto& s : steps_) d = d + s.dimvec;
  return d;
}

HNType operator+(const HNType& a, const HNType& b) {
  std::vector<HNStep> out;
  std::size_t i = 0, j = 0;
  while (i < a.steps_.size() || j < b.steps_.size()) {
    if (j == b.steps_.size() || (i < a.steps_.size() && a.steps_[i].slope > b.steps_[j].slope)) {
      out.push_back(a.steps_[i++]);
    } else if (i == a.steps_.size() || b.steps_[j].slope > a.steps_[i].slope) {
      out.push_back(b.steps_[j++]);
    } else {
      out.push_back({a.steps_[i].slope, a.steps_[i].dimvec + b.steps_[j].dimvec});
      ++i;
      ++j;
    }
  }
  return HNType(std::move(out));
}

HNType operator*(long k, const HNType& a) {
  if (k < 0) throw InputError("negative multiple of an HN type");
  if (k == 0) return HNType();
  std::vector<HNStep> out = a.steps_;
  for (auto& s : out) s.dimvec = k * s.dimvec;
  return HNType(std::move(out));
}

std::string HNType::to_string(const Quiver& q) const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << steps_[i].slope.to_string() << ", {";
    bool first = true;
    for (Vertex x = 0; x < steps_[i].dimvec.size(); ++x) {
      if (steps_[i].dimvec[x] == 0) continue;
      if (!first) os << ", ";
      os << q.vertex_name(x) << ":" << steps_[i].dimvec[x];
      first = false;
    }
    os << "})";
  }
  os << "]";
  return os.str();
}

HNType HNFiltration::type(const CentralCharge& alpha) const {
  std::vector<HNStep> steps;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    DimensionVector d = chain[k].dimension_vector() - chain[k - 1].dimension_vector();
    steps.push_back({slope(d, alpha), d});
  }
  return HNType(std::move(steps));
}

std::string to_string(HnMethod m) {
  switch (m) {
    case HnMethod::brute_force: return "brute_force";
    case HnMethod::thin: return "thin";
    case HnMethod::spanning: return "spanning";
    case HnMethod::decomposed: return "decomposed";
  }
  return "unknown";
}

namespace {

// Tracks the candidate of maximal slope, then maximal dimension, and
// whether a second, different candidate ties with it.
template <class Key>
struct BestCandidate {
  bool has = false;
  Scalar mass;  // alpha-mass of the quotient U / lower
  long dim = 0;
  Key key{};
  bool tie = false;

  // Returns -1, 0, 1 comparing mass/dim with the current best.
  int compare(const Scalar& m, long d) const {
    // m/d vs mass/dim, both denominators positive.
    return (m * Scalar(dim) - mass * Scalar(d)).sign();
  }

  void offer(const Scalar& m, long d, const Key& k) {
    if (d <= 0) return;
    if (!has) {
      has = true;
      mass = m;
      dim = d;
      key = k;
      tie = false;
      return;
    }
    int c = compare(m, d);
    if (c > 0 || (c == 0 && d > dim)) {
      mass = m;
      dim = d;
      key = k;
      tie = false;
    } else if (c == 0 && d == dim && !(k == key)) {
      tie = true;
    }
  }
};

void require_finite(const Representation& v, const char* what) {
  if (!v.field().is_finite())
    throw UnsupportedError(std::string(what) + " needs a finite field (subspace enumeration)");
}

void guard_dimension(const Representation& v, const HnOptions& options) {
  if (v.total_dimension() > options.max_total_dimension)
    throw SizeGuardError("brute-force HN refused: total dimension " + std::to_string(v.total_dimension()) +
                         " exceeds the bound of " + std::to_string(options.max_total_dimension));
}

void check_charge(const Representation& v, const CentralCharge& alpha) {
  if (alpha.size() != v.quiver().vertex_count())
    throw InputError("central charge has " + std::to_string(alpha.size()) + " values for " +
                     std::to_string(v.quiver().vertex_count()) + " vertices");
}

// The next HN step above `lower` by brute force over the lattice.
Tuple<PrimeField> next_step_brute(const TypedRep<PrimeField>& tv, const CentralCharge& alpha,
                                  const Tuple<PrimeField>& lower) {
  const DimensionVector lower_dims = detail::tuple_dimvec<PrimeField>(lower);
  const Scalar lower_mass = detail::charge_mass(alpha.values, lower_dims);
  const long lower_dim = total(lower_dims);
  BestCandidate<Tuple<PrimeField>> best;
  detail::for_each_subrep_between(tv, lower, [&](const Tuple<PrimeField>& u) {
    DimensionVector d = detail::tuple_dimvec<PrimeField>(u);
    long n = total(d) - lower_dim;
    if (n > 0) best.offer(detail::charge_mass(alpha.values, d) - lower_mass, n, u);
    return true;
  });
  if (!best.has) throw InternalError("no subrepresentation above a proper HN step");
  if (best.tie) throw InternalError("two distinct maximal destabilizing subrepresentations");
  return best.key;
}

HNFiltration filtration_from_tuples(const PrimeField& f, const std::vector<Tuple<PrimeField>>& chain) {
  HNFiltration out;
  for (const auto& t : chain) out.chain.push_back(detail::from_tuple(f, t));
  return out;
}

// Re-checks the defining properties of a filtration computed by any path.
void verify_filtration(const TypedRep<PrimeField>& tv, const CentralCharge& alpha,
                       const std::vector<Tuple<PrimeField>>& chain) {
  std::optional<Scalar> previous;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    DimensionVector lo = detail::tuple_dimvec<PrimeField>(chain[k - 1]);
    DimensionVector hi = detail::tuple_dimvec<PrimeField>(chain[k]);
    DimensionVector q = hi - lo;
    if (total(q) <= 0) throw InternalError("HN filtration is not strictly increasing");
    Scalar mu = slope(q, alpha);
    if (previous && !(mu < *previous)) throw InternalError("HN slopes do not strictly decrease");
    previous = mu;
    const Scalar lo_mass = detail::charge_mass(alpha.values, lo);
    const long lo_dim = total(lo);
    bool ok = true;
    detail::for_each_subrep_between(
        tv, chain[k - 1],
        [&](const Tuple<PrimeField>& u) {
          DimensionVector d = detail::tuple_dimvec<PrimeField>(u);
          long n = total(d) - lo_dim;
          if (n <= 0) return true;
          Scalar s = (detail::charge_mass(alpha.values, d) - lo_mass) / Scalar(n);
          if (s > mu) ok = false;
          return ok;
        },
        &chain[k]);
    if (!ok) throw InternalError("HN quotient is not semistable");
  }
}

std::vector<Tuple<PrimeField>> brute_chain(const TypedRep<PrimeField>& tv, const CentralCharge& alpha) {
  std::vector<Tuple<PrimeField>> chain{detail::zero_tuple(tv)};
  const long full = total(tv.dims);
  while (detail::tuple_dim<PrimeField>(chain.back()) < full)
    chain.push_back(next_step_brute(tv, alpha, chain.back()));
  return chain;
}

// Vertices where alpha exceeds its minimum; the maximal destabilizing
// subobject of every quotient is generated there.
std::vector<Vertex> generating_vertices(const CentralCharge& alpha) {
  std::vector<Vertex> s;
  if (alpha.size() == 0) return s;
  Scalar lo = *std::min_element(alpha.values.begin(), alpha.values.end());
  for (Vertex x = 0; x < alpha.size(); ++x)
    if (alpha[x] > lo) s.push_back(x);
  return s;
}

std::uint64_t spanning_cost(const Representation& v, const CentralCharge& alpha, std::uint64_t cap) {
  std::uint64_t cost = 1;
  for (Vertex x : generating_vertices(alpha)) {
    std::uint64_t c = linalg::subspace_count(v.field().characteristic, static_cast<std::size_t>(v.dim(x)), cap);
    if (c != 0 && cost > cap / c) return cap;
    cost *= c;
  }
  return cost;
}

Tuple<PrimeField> next_step_spanning(const TypedRep<PrimeField>& tv, const CentralCharge& alpha,
                                     const std::vector<Vertex>& s, const Tuple<PrimeField>& lower) {
  const PrimeField& f = tv.field;
  const DimensionVector lower_dims = detail::tuple_dimvec<PrimeField>(lower);
  const long lower_dim = total(lower_dims);
  // Shifting alpha by its minimum changes no comparison between quotient
  // slopes; afterwards alpha vanishes off s and every slope is >= 0.
  Scalar lo = *std::min_element(alpha.values.begin(), alpha.values.end());
  CentralCharge shifted = alpha.shifted(-lo);
  const Scalar lower_mass = detail::charge_mass(shifted.values, lower_dims);
  BestCandidate<Tuple<PrimeField>> best;
  Tuple<PrimeField> seed = lower;
  std::function<void(std::size_t)> recurse = [&](std::size_t i) {
    if (i == s.size()) {
      Tuple<PrimeField> u = detail::close(tv, seed);
      DimensionVector d = detail::tuple_dimvec<PrimeField>(u);
      long n = total(d) - lower_dim;
      if (n > 0) best.offer(detail::charge_mass(shifted.values, d) - lower_mass, n, u);
      return;
    }
    Vertex x = s[i];
    linalg::for_each_superspace(f, lower[x], static_cast<std::size_t>(tv.dims[x]), [&](const Mat<PrimeField>& w) {
      seed[x] = w;
      recurse(i + 1);
      return true;
    });
    seed[x] = lower[x];
  };
  recurse(0);
  if (!best.has || best.mass.sign() == 0) return detail::full_tuple(tv);
  if (best.tie) throw InternalError("two distinct maximal destabilizing subrepresentations");
  return best.key;
}

std::vector<Tuple<PrimeField>> spanning_chain(const TypedRep<PrimeField>& tv, const CentralCharge& alpha) {
  std::vector<Vertex> s = generating_vertices(alpha);
  std::vector<Tuple<PrimeField>> chain{detail::zero_tuple(tv)};
  const long full = total(tv.dims);
  while (detail::tuple_dim<PrimeField>(chain.back()) < full)
    chain.push_back(next_step_spanning(tv, alpha, s, chain.back()));
  return chain;
}

HNType type_of_chain(const std::vector<DimensionVector>& dims, const CentralCharge& alpha) {
  std::vector<HNStep> steps;
  for (std::size_t k = 1; k < dims.size(); ++k) {
    DimensionVector d = dims[k] - dims[k - 1];
    steps.push_back({slope(d, alpha), d});
  }
  return HNType(std::move(steps));
}

HNType type_of_tuples(const std::vector<Tuple<PrimeField>>& chain, const CentralCharge& alpha) {
  std::vector<DimensionVector> dims;
  for (const auto& t : chain) dims.push_back(detail::tuple_dimvec<PrimeField>(t));
  return type_of_chain(dims, alpha);
}

}  // namespace

bool is_semistable(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  if (v.is_zero()) throw ArithmeticError("semistability of the zero representation is undefined");
  if (v.is_thin() && options.allow_thin) return hn_type_thin(v, alpha).size() == 1;
  require_finite(v, "is_semistable");
  guard_dimension(v, options);
  Scalar mu = slope(v, alpha);
  for (const auto& u : enumerate_subreps(v, {options.max_total_dimension})) {
    if (u.total_dimension() == 0) continue;
    if (slope(u.dimension_vector(), alpha) > mu) return false;
  }
  return true;
}

bool is_stable(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  if (v.is_zero()) throw ArithmeticError("stability of the zero representation is undefined");
  Scalar mu = slope(v, alpha);
  const long n = v.total_dimension();
  if (v.is_thin() && options.allow_thin) {
    for (const auto& s : up_closed_subsets(thin_poset(v))) {
      auto size = static_cast<long>(s.size());
      if (size == 0 || size == n) continue;
      DimensionVector d(v.quiver().vertex_count(), 0);
      for (Vertex x : s.members()) d[x] = 1;
      if (slope(d, alpha) >= mu) return false;
    }
    return true;
  }
  require_finite(v, "is_stable");
  guard_dimension(v, options);
  for (const auto& u : enumerate_subreps(v, {options.max_total_dimension})) {
    long k = u.total_dimension();
    if (k == 0 || k == n) continue;
    if (slope(u.dimension_vector(), alpha) >= mu) return false;
  }
  return true;
}

Subrepresentation max_destabilizing(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  if (v.is_zero()) throw ArithmeticError("zero representation has no destabilizing subobject");
  require_finite(v, "max_destabilizing");
  guard_dimension(v, options);
  PrimeField f(v.field().characteristic);
  auto tv = detail::typed(v, f);
  return detail::from_tuple(f, next_step_brute(tv, alpha, detail::zero_tuple(tv)));
}

HNFiltration hn_filtration(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  require_finite(v, "hn_filtration");
  guard_dimension(v, options);
  PrimeField f(v.field().characteristic);
  auto tv = detail::typed(v, f);
  auto chain = brute_chain(tv, alpha);
  verify_filtration(tv, alpha, chain);
  return filtration_from_tuples(f, chain);
}

HNType hn_type_brute_force(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  if (v.is_zero()) return HNType();
  require_finite(v, "brute-force HN");
  guard_dimension(v, options);
  PrimeField f(v.field().characteristic);
  auto tv = detail::typed(v, f);
  return type_of_tuples(brute_chain(tv, alpha), alpha);
}

HNFiltration hn_filtration_spanning(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  require_finite(v, "spanning HN");
  std::uint64_t cost = spanning_cost(v, alpha, options.spanning_budget + 1);
  if (cost > options.spanning_budget)
    throw SizeGuardError("spanning HN refused: more than " + std::to_string(options.spanning_budget) +
                         " subspace tuples per step");
  PrimeField f(v.field().characteristic);
  auto tv = detail::typed(v, f);
  return filtration_from_tuples(f, spanning_chain(tv, alpha));
}

HNType hn_type_spanning(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  if (v.is_zero()) return HNType();
  return hn_filtration_spanning(v, alpha, options).type(alpha);
}

ThinPoset thin_poset(const Representation& v) {
  if (!v.is_thin()) throw UnsupportedError("representation is not thin");
  ThinPoset p{v.quiver_ptr(), v.support(), {}};
  for (std::size_t e = 0; e < v.quiver().edge_count(); ++e) {
    const auto& m = v.map(e);
    if (m.rows() == 1 && m.cols() == 1 && sgn(m(0, 0)) != 0)
      p.arrows.emplace_back(v.quiver().edge(e).source, v.quiver().edge(e).target);
  }
  return p;
}

std::vector<VertexSet> up_closed_subsets(const ThinPoset& p) {
  const Quiver& q = *p.quiver;
  std::vector<std::vector<Vertex>> succ(q.vertex_count());
  for (auto [s, t] : p.arrows) succ[s].push_back(t);
  std::vector<Vertex> order;
  const auto& topo = q.topological_order();
  for (auto it = topo.rbegin(); it != topo.rend(); ++it)
    if (p.support.contains(*it)) order.push_back(*it);
  if (order.size() > 24) throw SizeGuardError("support too large for up-set enumeration");
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

HNType hn_type_thin(const ThinPoset& p, const CentralCharge& alpha) {
  const std::size_t nv = p.quiver->vertex_count();
  if (alpha.size() != nv) throw InputError("central charge size does not match the quiver");
  auto sets = up_closed_subsets(p);
  auto dimvec = [nv](const VertexSet& s) {
    DimensionVector d(nv, 0);
    for (Vertex x : s.members()) d[x] = 1;
    return d;
  };
  std::vector<DimensionVector> chain{DimensionVector(nv, 0)};
  VertexSet current(nv);
  const std::size_t full = p.support.size();
  while (current.size() < full) {
    const DimensionVector lo = chain.back();
    const Scalar lo_mass = detail::charge_mass(alpha.values, lo);
    const long lo_dim = total(lo);
    BestCandidate<VertexSet> best;
    for (const auto& s : sets) {
      if (!current.is_subset_of(s)) continue;
      DimensionVector d = dimvec(s);
      long n = total(d) - lo_dim;
      if (n > 0) best.offer(detail::charge_mass(alpha.values, d) - lo_mass, n, s);
    }
    if (!best.has) throw InternalError("thin HN: no up-set above the current step");
    if (best.tie) throw InternalError("thin HN: two distinct maximal destabilizing up-sets");
    current = best.key;
    chain.push_back(dimvec(current));
  }
  return type_of_chain(chain, alpha);
}

HNType hn_type_thin(const Representation& v, const CentralCharge& alpha) {
  check_charge(v, alpha);
  return hn_type_thin(thin_poset(v), alpha);
}

HnResult hn_type(const Representation& v, const CentralCharge& alpha, HnOptions options) {
  check_charge(v, alpha);
  if (v.is_zero()) return {HNType(), HnMethod::brute_force};
  if (options.allow_thin && v.is_thin()) return {hn_type_thin(v, alpha), HnMethod::thin};
  require_finite(v, "hn_type of a non-thin representation");
  const bool brute_ok = v.total_dimension() <= options.max_total_dimension;
  if (options.allow_spanning) {
    std::uint64_t cost = spanning_cost(v, alpha, options.spanning_budget + 1);
    // Prefer the spanning path when it is clearly small; otherwise fall back
    // to brute force while that is permitted.
    if (cost <= options.spanning_budget && (!brute_ok || cost <= 4096))
      return {hn_type_spanning(v, alpha, options), HnMethod::spanning};
  }
  return {hn_type_brute_force(v, alpha, options), HnMethod::brute_force};
}

HnResult hn_type(const DecomposedRepresentation& v, const CentralCharge& alpha, HnOptions options) {
  HNType out;
  for (const auto& s : v.summands) {
    if (s.multiplicity == 0) continue;
    out = out + s.multiplicity * hn_type(s.rep, alpha, options).type;
  }
  return {out, HnMethod::decomposed};
}

std::vector<HNType> skyscraper_invariant(const Representation& v, HnOptions options) {
  std::vector<HNType> out;
  for (Vertex x = 0; x < v.quiver().vertex_count(); ++x)
    out.push_back(hn_type(v, CentralCharge::skyscraper(v.quiver(), x), options).type);
  return out;
}

long rank_from_hn(const HNType& hn, Vertex x, Vertex y, long dim_vx) {
  if (dim_vx < 0) throw InputError("negative dimension");
  if (dim_vx == 0) return 0;
  long at_x = 0, at_y = 0;
  for (const auto& s : hn.steps()) {
    if (x >= s.dimvec.size() || y >= s.dimvec.size()) throw InputError("vertex out of range");
    at_x += s.dimvec[x];
    at_y += s.dimvec[y];
    if (at_x == dim_vx) return at_y;
    if (at_x > dim_vx) break;
  }
  throw InputError("HN type is inconsistent with dim V_x = " + std::to_string(dim_vx));
}

SkyscraperStructure skyscraper_structure(const Representation& v, Vertex x, HnOptions options) {
  CentralCharge delta = CentralCharge::skyscraper(v.quiver(), x);
  HNFiltration filt = v.total_dimension() <= options.max_total_dimension ? hn_filtration(v, delta, options)
                                                                         : hn_filtration_spanning(v, delta, options);
  SkyscraperStructure out;
  out.n = filt.chain.size() - 1;
  const long dx = v.dim(x);
  std::size_t j = 0;
  while (j < filt.chain.size() && static_cast<long>(filt.chain[j].bases[x].rows()) < dx) ++j;
  out.j = j;
  out.j_in_range = (j == out.n) || (out.n >= 1 && j == out.n - 1);
  out.steps_are_spanning = true;
  for (std::size_t k = 1; k <= j && k < filt.chain.size(); ++k) {
    std::vector<RationalMatrix> seeds = zero_subrep(v).bases;
    seeds[x] = filt.chain[k].bases[x];
    if (!(generated_subrep(v, seeds) == filt.chain[k])) out.steps_are_spanning = false;
  }
  out.top_is_spanning =
      j < filt.chain.size() && spanning_subrep(v, VertexSet(v.quiver().vertex_count(), {x})) == filt.chain[j];
  return out;
}

std::optional<CounterexamplePair> completeness_counterexample(const Representation& indecomposable,
                                                             const CentralCharge& alpha, HnOptions options) {
  check_charge(indecomposable, alpha);
  const Representation& rep = indecomposable;
  if (rep.is_zero()) throw InputError("counterexample needs a nonzero representation");
  const long n = rep.total_dimension();
  const Scalar mu = slope(rep, alpha);
  auto split_along = [&](const Subrepresentation& j, bool semistable) {
    Representation split = direct_sum(subrep_as_representation(rep, j), quotient(rep, j));
    return CounterexamplePair{rep, std::move(split), 1, 2, semistable};
  };

  std::vector<Subrepresentation> subs;
  if (rep.is_thin()) {
    for (const auto& s : up_closed_subsets(thin_poset(rep))) subs.push_back(thin_subrep(rep, s));
  } else {
    require_finite(rep, "completeness_counterexample");
    guard_dimension(rep, options);
    subs = enumerate_subreps(rep, {options.max_total_dimension});
  }
  // Maximal destabilizing subobject: maximal slope, then maximal dimension.
  const Subrepresentation* top = nullptr;
  Scalar top_slope;
  long top_dim = 0;
  for (const auto& u : subs) {
    long k = u.total_dimension();
    if (k == 0) continue;
    Scalar s = slope(u.dimension_vector(), alpha);
    if (!top || s > top_slope || (s == top_slope && k > top_dim)) {
      top = &u;
      top_slope = s;
      top_dim = k;
    }
  }
  if (top && top_slope > mu) return split_along(*top, false);
  for (const auto& u : subs) {
    long k = u.total_dimension();
    if (k == 0 || k == n) continue;
    if (slope(u.dimension_vector(), alpha) == mu) return split_along(u, true);
  }
  return std::nullopt;
}

FixturePair fixtures_ww(Field field) {
  QuiverPtr q = build_grid({1, 1});
  // Vertex order (first coordinate fastest): bl, br, tl, tr.
  // Edge order: bl->br, bl->tl, br->tr, tl->tr.
  auto make = [&](std::vector<long> up_row) {
    std::vector<RationalMatrix> maps;
    RationalMatrix bottom(1, 2, Rational(0));
    bottom(0, 0) = 1;
    RationalMatrix left(1, 2, Rational(0));
    left(0, 0) = up_row[0];
    left(0, 1) = up_row[1];
    maps.push_back(bottom);
    maps.push_back(left);
    maps.emplace_back(0, 1);
    maps.emplace_back(0, 1);
    return Representation(q, field, {2, 1, 1, 0}, std::move(maps));
  };
  return {make({0, 1}), make({1, 0})};
}

}  // namespace hnq
