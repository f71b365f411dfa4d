#include "hnq/ladder.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "hnq/error.hpp"

namespace hnq {

namespace {

std::size_t vertex_total(int length) { return static_cast<std::size_t>(2 * (length + 1)); }

std::string endpoint(int x) { return x == LadderIndec::inf ? "inf" : std::to_string(x); }

// Vertices reachable from `from` through edges with both ends in `support`.
VertexSet reach(const Quiver& q, const VertexSet& support, const VertexSet& from) {
  VertexSet out(q.vertex_count());
  std::deque<Vertex> queue;
  for (Vertex x : from.members())
    if (support.contains(x)) {
      out.insert(x);
      queue.push_back(x);
    }
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (std::size_t e : q.out_edges(x)) {
      Vertex y = q.edge(e).target;
      if (support.contains(y) && !out.contains(y)) {
        out.insert(y);
        queue.push_back(y);
      }
    }
  }
  return out;
}

const Quiver& ladder_quiver(int length) {
  static std::map<int, QuiverPtr> cache;
  auto it = cache.find(length);
  if (it == cache.end()) it = cache.emplace(length, build_ladder(length)).first;
  return *it->second;
}

DimensionVector indicator(const VertexSet& s) {
  DimensionVector d(s.universe(), 0);
  for (Vertex x : s.members()) d[x] = 1;
  return d;
}

}  // namespace

long LadderIndec::dimension() const {
  long n = 0;
  if (has_top()) n += b - a + 1;
  if (has_bottom()) n += d - c + 1;
  return n;
}

std::string LadderIndec::to_string() const {
  return "R^{" + endpoint(a) + "," + endpoint(b) + "}_{" + endpoint(c) + "," + endpoint(d) + "}";
}

LadderIndec ladder_full(int a, int b, int c, int d) { return {a, b, c, d}; }
LadderIndec ladder_top_only(int a, int b) { return {a, b, LadderIndec::inf, LadderIndec::inf}; }
LadderIndec ladder_bottom_only(int c, int d) { return {LadderIndec::inf, LadderIndec::inf, c, d}; }

void validate_indec(int length, const LadderIndec& i) {
  auto in_range = [length](int x) { return x >= 0 && x <= length; };
  bool ok = false;
  if (i.has_top() && i.has_bottom())
    ok = in_range(i.a) && in_range(i.b) && in_range(i.c) && in_range(i.d) && i.c <= i.a && i.a <= i.d && i.d <= i.b;
  else if (i.has_top())
    ok = i.c == LadderIndec::inf && i.d == LadderIndec::inf && i.b != LadderIndec::inf && in_range(i.a) &&
         in_range(i.b) && i.a <= i.b;
  else if (i.has_bottom())
    ok = i.b == LadderIndec::inf && i.d != LadderIndec::inf && in_range(i.c) && in_range(i.d) && i.c <= i.d;
  if (!ok) throw InputError(i.to_string() + " is not a nestfree indecomposable of length " + std::to_string(length));
}

std::vector<LadderIndec> nestfree_indecomposables(int length) {
  if (length < 1) throw InputError("ladder length must be at least 1");
  std::vector<LadderIndec> out;
  for (int c = 0; c <= length; ++c)
    for (int a = c; a <= length; ++a)
      for (int d = a; d <= length; ++d)
        for (int b = d; b <= length; ++b) out.push_back(ladder_full(a, b, c, d));
  for (int a = 0; a <= length; ++a)
    for (int b = a; b <= length; ++b) out.push_back(ladder_top_only(a, b));
  for (int c = 0; c <= length; ++c)
    for (int d = c; d <= length; ++d) out.push_back(ladder_bottom_only(c, d));
  return out;
}

VertexSet ladder_support(int length, const LadderIndec& i) {
  validate_indec(length, i);
  VertexSet s(vertex_total(length));
  if (i.has_top())
    for (int x = i.a; x <= i.b; ++x) s.insert(ladder_top(x));
  if (i.has_bottom())
    for (int x = i.c; x <= i.d; ++x) s.insert(ladder_bottom(length, x));
  return s;
}

Representation ladder_module(const QuiverPtr& ladder, const LadderIndec& i, Field field) {
  const auto* fam = std::get_if<LadderFamily>(&ladder->family());
  if (!fam) throw InputError("expected a ladder quiver");
  return thin_module(ladder, ladder_support(fam->length, i), field);
}

void LadderMultiset::add(const LadderIndec& i, long multiplicity) {
  if (multiplicity < 0) throw InputError("negative multiplicity");
  if (multiplicity > 0) counts[i] += multiplicity;
}

long LadderMultiset::total_dimension() const {
  long s = 0;
  for (const auto& [i, m] : counts) s += m * i.dimension();
  return s;
}

std::string LadderMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, m] : counts) {
    os << (first ? "" : ", ") << i.to_string() << ":" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

DecomposedRepresentation from_ladder_multiset(const QuiverPtr& ladder, const LadderMultiset& m, Field field) {
  std::vector<DecomposedRepresentation::Summand> summands;
  for (const auto& [i, k] : m.counts) summands.push_back({ladder_module(ladder, i, field), k});
  return assemble(ladder, field, std::move(summands));
}

bool has_strict_nesting(const Barcode& b) {
  for (const auto& [outer, m1] : b.bars)
    for (const auto& [inner, m2] : b.bars)
      if (outer.a < inner.a && inner.b < outer.b) return true;
  return false;
}

RowBarcodes row_barcodes(const Representation& v) {
  const auto* fam = std::get_if<LadderFamily>(&v.quiver().family());
  if (!fam) throw InputError("expected a ladder quiver");
  if (!is_equalised(v)) throw InputError("row barcodes need an equalised module");
  const int l = fam->length;
  auto row = [&](bool top) {
    auto vertex = [&](int i) { return top ? ladder_top(i) : ladder_bottom(l, i); };
    auto rk = [&](int a, int b) -> long {
      if (a < 0 || b > l) return 0;
      return generalized_rank(v, vertex(a), vertex(b));
    };
    Barcode out;
    for (int a = 0; a <= l; ++a)
      for (int b = a; b <= l; ++b) {
        long m = rk(a, b) - rk(a - 1, b) - rk(a, b + 1) + rk(a - 1, b + 1);
        if (m < 0) throw InternalError("negative bar multiplicity");
        out.add({a, b}, m);
      }
    return out;
  };
  return {row(true), row(false)};
}

bool is_nestfree(const Representation& v) {
  RowBarcodes r = row_barcodes(v);
  return !has_strict_nesting(r.top) && !has_strict_nesting(r.bottom);
}

bool is_nestfree(const LadderMultiset& m) {
  Barcode top, bottom;
  for (const auto& [i, k] : m.counts) {
    if (i.has_top()) top.add({i.a, i.b}, k);
    if (i.has_bottom()) bottom.add({i.c, i.d}, k);
  }
  return !has_strict_nesting(top) && !has_strict_nesting(bottom);
}

bool inclusion_relation(const LadderIndec& s, const LadderIndec& l) {
  if (s == l) return false;
  const bool s_top = s.has_top() && !s.has_bottom();
  const bool s_bottom = !s.has_top() && s.has_bottom();
  const bool s_full = s.has_top() && s.has_bottom();
  const bool l_top = l.has_top() && !l.has_bottom();
  const bool l_bottom = !l.has_top() && l.has_bottom();
  const bool l_full = l.has_top() && l.has_bottom();
  if (s_top && l_top) return s.b == l.b && l.a < s.a;
  if (s_bottom && l_bottom) return s.d == l.d && l.c < s.c;
  if (s_top && l_full) return s.b == l.b && l.d < s.a;
  if (s_bottom && l_full) return s.d == l.d && l.c <= s.c;
  // Both left endpoints may only move right.
  if (s_full && l_full) return s.b == l.b && s.d == l.d && l.a <= s.a && l.c <= s.c;
  return false;
}

VertexSet minimal_vertices(int length, const LadderIndec& i) {
  const Quiver& q = ladder_quiver(length);
  VertexSet supp = ladder_support(length, i);
  VertexSet out(q.vertex_count());
  for (Vertex x : supp.members()) {
    bool minimal = true;
    for (Vertex y : supp.members())
      if (y != x && q.leq(y, x)) minimal = false;
    if (minimal) out.insert(x);
  }
  return out;
}

VertexSet spanning_support(int length, const LadderIndec& i, const VertexSet& s) {
  return reach(ladder_quiver(length), ladder_support(length, i), s);
}

IndecClass class_of(int length, const LadderIndec& i) {
  return {i.dimension(), minimal_vertices(length, i).members()};
}

std::map<IndecClass, std::vector<LadderIndec>> indec_partition(int length) {
  std::map<IndecClass, std::vector<LadderIndec>> out;
  for (const auto& i : nestfree_indecomposables(length)) out[class_of(length, i)].push_back(i);
  for (auto& [k, members] : out) {
    std::sort(members.begin(), members.end(), [](const LadderIndec& x, const LadderIndec& y) {
      // Bottom-only members have no b; they are alone in their class.
      return x.b > y.b;
    });
    for (std::size_t j = 1; j < members.size(); ++j)
      if (members[j].b == members[j - 1].b) throw InternalError("two members of a class share b");
  }
  return out;
}

Scalar t_value(long p, long q) {
  if (q < 0 || p < q + 2) throw InputError("t_value needs 0 <= q and p >= q + 2");
  Rational lo = make_rational(q, p - q);
  Rational hi = make_rational(q + 1, p - q - 1);
  return Scalar(lo, (hi - lo) / 2);
}

std::vector<ChargeFamilyEntry> charge_family(int length) {
  const std::size_t n = vertex_total(length);
  auto classes = indec_partition(length);
  std::vector<ChargeFamilyEntry> out;
  // Skyscrapers first, in vertex order, each listing every class size k.
  for (Vertex x = 0; x < n; ++x) {
    ChargeFamilyEntry e{{x}, CentralCharge::skyscraper(ladder_quiver(length), x), {}};
    for (const auto& [cls, members] : classes)
      if (cls.s.size() == 1 && cls.s[0] == x) e.levels.push_back({cls.k, Scalar(make_rational(1, cls.k))});
    if (!e.levels.empty()) out.push_back(std::move(e));
  }
  for (const auto& [cls, members] : classes) {
    if (cls.s.size() != 2) continue;
    // s is sorted: the top vertex x_a+ has the smaller index.
    const int a = static_cast<int>(cls.s[0]);
    const int c = static_cast<int>(cls.s[1]) - (length + 1);
    Scalar t = t_value(cls.k, a - c);
    std::vector<Scalar> values(n, Scalar(0));
    values[cls.s[0]] = Scalar(1);
    values[cls.s[1]] = t;
    out.push_back({cls.s, CentralCharge(std::move(values)), {{cls.k, (Scalar(1) + t) / Scalar(cls.k)}}});
  }
  return out;
}

long charge_family_size(int length) {
  const long l = length;
  return (2 * l * l * l + 3 * l * l + 13 * l + 12) / 6;
}

HNType hn_type_indec(int length, const LadderIndec& i, const CentralCharge& alpha) {
  const Quiver& q = ladder_quiver(length);
  if (alpha.size() != q.vertex_count()) throw InputError("charge size does not match the ladder");
  std::vector<Vertex> weighted;
  for (Vertex x = 0; x < alpha.size(); ++x) {
    int s = alpha[x].sign();
    if (s < 0) throw InputError("closed form needs a nonnegative charge");
    if (s > 0) weighted.push_back(x);
  }
  if (weighted.size() > 2) throw InputError("closed form needs a charge on at most two vertices");

  VertexSet rest = ladder_support(length, i);
  std::vector<HNStep> steps;
  for (;;) {
    std::vector<Vertex> present;
    for (Vertex x : weighted)
      if (rest.contains(x)) present.push_back(x);
    if (present.empty()) break;
    // The destabilizing candidates are the subsets generated by the
    // weighted vertices still present.
    std::optional<Scalar> best;
    VertexSet best_set;
    for (unsigned mask = 1; mask < (1u << present.size()); ++mask) {
      VertexSet seeds(q.vertex_count());
      for (std::size_t j = 0; j < present.size(); ++j)
        if ((mask >> j) & 1u) seeds.insert(present[j]);
      VertexSet u = reach(q, rest, seeds);
      Scalar mass;
      for (Vertex x : present)
        if (u.contains(x)) mass += alpha[x];
      Scalar mu = mass / Scalar(static_cast<long>(u.size()));
      if (!best || mu > *best || (mu == *best && u.size() > best_set.size())) {
        best = mu;
        best_set = u;
      }
    }
    steps.push_back({*best, indicator(best_set)});
    for (Vertex x : best_set.members()) rest.erase(x);
  }
  if (!rest.empty()) steps.push_back({Scalar(0), indicator(rest)});
  return HNType(std::move(steps));
}

LadderMultiset recover_ladder(int length, const std::vector<HNType>& hn_types) {
  auto family = charge_family(length);
  if (hn_types.size() != family.size())
    throw InputError("expected " + std::to_string(family.size()) + " HN types, got " +
                     std::to_string(hn_types.size()));
  const std::size_t n = vertex_total(length);
  auto classes = indec_partition(length);

  // r^+ for every catalog member, class by class.
  std::map<LadderIndec, long> r_plus;
  for (std::size_t e = 0; e < family.size(); ++e) {
    for (const auto& level : family[e].levels) {
      const auto& members = classes.at(IndecClass{level.k, family[e].s});
      DimensionVector residual = hn_types[e].value_at(level.lambda, n);
      if (residual.size() != n) throw InputError("HN type does not match the ladder");
      for (std::size_t j = 0; j < members.size(); ++j) {
        VertexSet own = ladder_support(length, members[j]);
        for (std::size_t later = j + 1; later < members.size(); ++later) {
          VertexSet other = ladder_support(length, members[later]);
          for (Vertex x : other.members()) own.erase(x);
        }
        if (own.empty()) throw InternalError("class member without a private vertex");
        long m = residual[own.members().front()];
        if (m < 0) throw InconsistencyError("negative multiplicity for " + members[j].to_string());
        residual = residual - m * indicator(ladder_support(length, members[j]));
        r_plus[members[j]] = m;
      }
      for (long r : residual)
        if (r != 0)
          throw InconsistencyError("HN value at slope " + level.lambda.to_string() +
                                   " is not a combination of its class");
    }
  }

  // r_I = r_I^+ minus r_J over the strictly larger J with <J_S> = I.
  auto catalog = nestfree_indecomposables(length);
  std::stable_sort(catalog.begin(), catalog.end(),
                   [](const LadderIndec& x, const LadderIndec& y) { return x.dimension() > y.dimension(); });
  LadderMultiset out;
  std::map<LadderIndec, long> r;
  for (const auto& i : catalog) {
    VertexSet s = minimal_vertices(length, i);
    VertexSet supp = ladder_support(length, i);
    long value = r_plus.at(i);
    for (const auto& [j, rj] : r) {
      if (rj == 0) continue;
      VertexSet js = ladder_support(length, j);
      if (!s.is_subset_of(js)) continue;
      if (spanning_support(length, j, s) == supp) value -= rj;
    }
    if (value < 0) throw InconsistencyError("negative multiplicity for " + i.to_string());
    r[i] = value;
    out.add(i, value);
  }
  return out;
}

std::string InfeasibilityReport::summary() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < inequalities.size(); ++k)
    os << "(" << static_cast<char>('a' + k) << ") " << inequality_text[k] << "   from " << smaller[k].to_string()
       << " < " << larger[k].to_string() << (inclusions_valid[k] ? "" : " [not an inclusion]") << "\n";
  os << "combination";
  for (long c : combination) os << " " << c;
  os << (cancels ? ": every charge variable cancels, leaving 0 < 0" : ": does not cancel") << "\n";
  os << "exact elimination: " << (lp_infeasible ? "no charge satisfies all five" : "feasible") << "\n";
  return os.str();
}

InfeasibilityReport infeasibility_certificate() {
  const int l = 4;
  const QuiverPtr q = build_ladder(l);
  const std::size_t n = vertex_total(l);
  InfeasibilityReport rep;
  rep.smaller = {ladder_full(1, 1, 1, 1), ladder_bottom_only(0, 1), ladder_full(3, 4, 3, 3), ladder_full(2, 3, 2, 2),
                 ladder_top_only(4, 4)};
  rep.larger = {ladder_full(1, 1, 0, 1), ladder_full(1, 4, 0, 1), ladder_full(3, 4, 2, 3), ladder_full(2, 3, 1, 2),
                ladder_full(3, 4, 2, 3)};
  rep.combination = {4, 4, 1, 4, 1};
  std::vector<std::string> names = q->vertex_names();
  for (std::size_t k = 0; k < rep.smaller.size(); ++k) {
    const auto& s = rep.smaller[k];
    const auto& big = rep.larger[k];
    rep.inclusions_valid.push_back(inclusion_relation(s, big));
    // Stability of the larger module: mu(s) < mu(big), i.e.
    // |big| * mass(s) - |s| * mass(big) < 0, divided by gcd(|big|, |s|).
    const long g = std::gcd(big.dimension(), s.dimension());
    LinearConstraint c;
    c.coefficients.assign(n, Rational(0));
    for (Vertex x : ladder_support(l, s).members()) c.coefficients[x] += big.dimension() / g;
    for (Vertex x : ladder_support(l, big).members()) c.coefficients[x] -= s.dimension() / g;
    c.relation = LinearConstraint::Relation::less;
    rep.inequality_text.push_back(c.to_string(names));
    rep.inequalities.push_back(std::move(c));
  }
  std::vector<Rational> sum(n, Rational(0));
  Rational constant(0);
  for (std::size_t k = 0; k < rep.inequalities.size(); ++k) {
    for (std::size_t x = 0; x < n; ++x) sum[x] += rep.combination[k] * rep.inequalities[k].coefficients[x];
    constant += rep.combination[k] * rep.inequalities[k].constant;
  }
  rep.cancels = constant == 0 && std::all_of(sum.begin(), sum.end(), [](const Rational& r) { return r == 0; });
  rep.lp_infeasible = !is_feasible(rep.inequalities);
  return rep;
}

Representation fixture_v_lambda(long lambda, Field field) {
  if (field.characteristic == 2) throw UnsupportedError("the nested fixture needs a field with more than two elements");
  Rational lam(lambda);
  if (field.is_finite()) {
    long p = field.characteristic;
    lam = Rational(((lambda % p) + p) % p);
  }
  QuiverPtr q = build_ladder(4);
  auto m = [](std::size_t r, std::size_t c, std::vector<Rational> e) {
    RationalMatrix out(r, c, Rational(0));
    for (std::size_t i = 0; i < e.size(); ++i) out(i / c, i % c) = e[i];
    return out;
  };
  const Rational one(1), zero(0);
  // Dimensions: top 0,1,2,2,1 and bottom 1,2,2,1,0.
  std::vector<RationalMatrix> maps{
      m(1, 0, {}),                       // x0+ -> x1+
      m(2, 1, {one, zero}),              // x1+ -> x2+
      m(2, 2, {one, zero, zero, one}),   // x2+ -> x3+
      m(1, 2, {one, zero}),              // x3+ -> x4+
      m(2, 1, {one, zero}),              // x0- -> x1-
      m(2, 2, {one, zero, zero, one}),   // x1- -> x2-
      m(1, 2, {one, zero}),              // x2- -> x3-
      m(0, 1, {}),                       // x3- -> x4-
      m(1, 0, {}),                       // x0+ -> x0-
      m(2, 1, {one, one}),               // x1+ -> x1-
      m(2, 2, {one, lam, one, one}),     // x2+ -> x2-
      m(1, 2, {one, lam}),               // x3+ -> x3-
      m(0, 1, {}),                       // x4+ -> x4-
  };
  return Representation(q, field, {0, 1, 2, 2, 1, 1, 2, 2, 1, 0}, std::move(maps));
}

std::optional<std::string> identity_morphism_failure(const Representation& v, const Representation& w) {
  if (!(v.quiver() == w.quiver()) || v.dimension_vector() != w.dimension_vector())
    return std::string("dimension vectors differ");
  for (std::size_t e = 0; e < v.quiver().edge_count(); ++e)
    if (!(v.map(e) == w.map(e))) return v.quiver().edge(e).label;
  return std::nullopt;
}

}  // namespace hnq
