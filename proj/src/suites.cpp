#include "hnq/suites.hpp"

#include <algorithm>
#include <numeric>

#include "hnq/error.hpp"
#include "hnq/io.hpp"
#include "hnq/random.hpp"

namespace hnq {

namespace {

constexpr std::size_t kMaxFailures = 5;

long pick(long value, long fallback) { return value > 0 ? value : fallback; }

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

std::string dump(const Representation& v) { return to_json(v).dump(); }
std::string dump(const CentralCharge& alpha, const Quiver& q) { return to_json(alpha, q).dump(); }
std::string dump(const HNType& hn, const Quiver& q) { return to_json(hn, q).dump(); }

/// Small quiver from the mixed pool used by the random-module suites:
/// zigzags up to length 4, grids up to (2,2), ladders up to length 2.
QuiverPtr random_small_quiver(Rng& rng) {
  switch (uniform(rng, 0, 2)) {
    case 0:
      return build_type_a(random_orientation(rng, static_cast<std::size_t>(uniform(rng, 1, 4))));
    case 1: {
      static const std::vector<Shape> shapes{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
      return build_grid(shapes[static_cast<std::size_t>(uniform(rng, 0, 5))]);
    }
    default:
      return build_ladder(static_cast<int>(uniform(rng, 1, 2)));
  }
}

/// HN type through the dispatcher; falls back to the summands when every
/// direct path is refused by its guard.
HnResult hn_type_with_fallback(const DecomposedRepresentation& v, const CentralCharge& alpha, HnOptions options) {
  try {
    return hn_type(v.module, alpha, options);
  } catch (const SizeGuardError&) {
    return hn_type(v, alpha, options);
  }
}

HnOptions roundtrip_options() {
  HnOptions o;
  o.max_total_dimension = 10;
  o.spanning_budget = 1000000;
  return o;
}

/// Random charge, or with probability 1/2 one that satisfies the
/// block inequalities up to a small perturbation.
CentralCharge mixed_type_a_charge(Rng& rng, const Orientation& tau) {
  const std::size_t n = tau.length() + 1;
  if (uniform(rng, 0, 1) == 0) return random_charge(rng, n);
  CentralCharge base = complete_type_a_charge(tau);
  std::vector<Scalar> v;
  for (std::size_t x = 0; x < n; ++x) v.push_back(base[x] * Scalar(uniform(rng, 1, 3)) + Scalar(Rational(random_rational(rng, 1, 8) / 8)));
  return CentralCharge(std::move(v));
}

struct TypeACase {
  Orientation tau;
  CentralCharge alpha;
};

/// All orientations of lengths 1..4 (or the given length), `per` charges each.
std::vector<TypeACase> type_a_cases(const SuiteOptions& o, long per) {
  Rng rng(o.seed);
  std::vector<TypeACase> out;
  const int lo = o.length > 0 ? o.length : 1;
  const int hi = o.length > 0 ? o.length : 4;
  for (int l = lo; l <= hi; ++l)
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<bool> bits;
      for (int i = 0; i < l; ++i) bits.push_back((mask >> i) & 1u);
      Orientation tau(bits);
      for (long k = 0; k < per; ++k) out.push_back({tau, mixed_type_a_charge(rng, tau)});
    }
  return out;
}

/// Meets and joins of subsets of a poset given by lattice coordinates.
std::vector<int> meet(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::min(x[i], y[i]);
  return out;
}
std::vector<int> join(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i], y[i]);
  return out;
}

VertexSet random_subset(Rng& rng, std::size_t n) {
  VertexSet s(n);
  for (Vertex x = 0; x < n; ++x)
    if (uniform(rng, 0, 1)) s.insert(x);
  return s;
}

std::string set_text(const Quiver& q, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex x : s.members()) {
    if (!first) out += ",";
    first = false;
    out += q.vertex_name(x);
  }
  return out + "}";
}

}  // namespace

void SuiteReport::check(bool condition, const std::function<std::string()>& describe) {
  ++checks;
  if (condition) return;
  ++violations;
  if (failures.size() < kMaxFailures) failures.push_back(describe());
}

SuiteReport suite_fixtures(const SuiteOptions& o) {
  SuiteReport r{"fixtures"};
  auto [w, wp] = fixtures_ww(o.field);
  const Quiver& q = w.quiver();
  const std::size_t n = q.vertex_count();
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      long a = generalized_rank(w, x, y), b = generalized_rank(wp, x, y);
      r.check(a == b, [&] {
        return "rank differs at (" + q.vertex_name(x) + "," + q.vertex_name(y) + "): " + std::to_string(a) + " vs " +
               std::to_string(b);
      });
    }
  auto sw = skyscraper_invariant(w), swp = skyscraper_invariant(wp);
  r.check(sw != swp, [] { return std::string("skyscraper invariants agree"); });
  const Vertex bl = grid_vertex({1, 1}, {0, 0});
  const CentralCharge delta = CentralCharge::skyscraper(q, bl);
  HNType hw = hn_type_brute_force(w, delta), hwp = hn_type_brute_force(wp, delta);
  HNType expect_w({{Scalar(make_rational(1, 2)), {2, 1, 1, 0}}});
  HNType expect_wp({{Scalar(1), {1, 0, 0, 0}}, {Scalar(make_rational(1, 3)), {1, 1, 1, 0}}});
  r.check(hw == expect_w, [&] { return "W along delta_bl: " + dump(hw, q); });
  r.check(hwp == expect_wp, [&] { return "W' along delta_bl: " + dump(hwp, q); });
  r.note("W  along delta_bl: " + hw.to_string(q));
  r.note("W' along delta_bl: " + hwp.to_string(q));
  return r;
}

SuiteReport suite_hn_postconditions(const SuiteOptions& o) {
  SuiteReport r{"hn-postconditions"};
  Rng rng(o.seed);
  const long count = pick(o.count, 500);
  const long budget = pick(o.budget, 8);
  for (long c = 0; c < count; ++c) {
    QuiverPtr q = random_small_quiver(rng);
    Representation v = random_representation(rng, q, o.field, budget);
    CentralCharge alpha = random_charge(rng, q->vertex_count());
    auto where = [&] { return "module " + dump(v) + " charge " + dump(alpha, *q); };

    HnOptions opts;
    opts.max_total_dimension = std::max<long>(budget, 10);
    HNFiltration filt = hn_filtration(v, alpha, opts);
    auto subs = enumerate_subreps(v, {opts.max_total_dimension});
    const auto& chain = filt.chain;
    r.check(!chain.empty() && chain.front().total_dimension() == 0 && chain.back() == full_subrep(v),
            [&] { return "chain does not run from 0 to V: " + where(); });
    std::optional<Scalar> previous;
    for (std::size_t k = 1; k < chain.size(); ++k) {
      const DimensionVector base = chain[k - 1].dimension_vector();
      const DimensionVector step = chain[k].dimension_vector() - base;
      r.check(contains(v, chain[k], chain[k - 1]) && total(step) > 0,
              [&] { return "step " + std::to_string(k) + " is not a strict inclusion: " + where(); });
      const Scalar mu = slope(step, alpha);
      if (previous) r.check(mu < *previous, [&] { return "slopes not strictly decreasing: " + where(); });
      previous = mu;
      // Quotient semistability: every W with V^{k-1} < W <= V^k has W/V^{k-1}
      // of slope at most mu.
      bool semistable = true;
      for (const auto& u : subs) {
        if (!contains(v, chain[k], u) || !contains(v, u, chain[k - 1])) continue;
        const DimensionVector d = u.dimension_vector() - base;
        if (total(d) == 0) continue;
        if (slope(d, alpha) > mu) semistable = false;
      }
      r.check(semistable, [&] { return "quotient " + std::to_string(k) + " not semistable: " + where(); });
    }
    HNType brute = filt.type(alpha);
    HnResult fast = hn_type(v, alpha);
    ++r.counters["method:" + to_string(fast.method)];
    r.check(fast.type == brute, [&] {
      return "dispatcher (" + to_string(fast.method) + ") " + dump(fast.type, *q) + " vs brute " + dump(brute, *q) +
             ": " + where();
    });
    if (v.is_thin()) {
      HNType thin = hn_type_thin(v, alpha);
      r.check(thin == brute, [&] { return "thin path disagrees: " + where(); });
    }
  }
  return r;
}

SuiteReport suite_additivity(const SuiteOptions& o) {
  SuiteReport r{"additivity"};
  Rng rng(o.seed);
  const long count = pick(o.count, 200);
  const long budget = pick(o.budget, 8);
  for (long c = 0; c < count; ++c) {
    QuiverPtr q = random_small_quiver(rng);
    Representation v = random_representation(rng, q, o.field, budget / 2);
    Representation w = random_representation(rng, q, o.field, budget - budget / 2);
    CentralCharge alpha = random_charge(rng, q->vertex_count());
    auto where = [&] { return "V " + dump(v) + " W " + dump(w) + " charge " + dump(alpha, *q); };
    HNType hv = hn_type_brute_force(v, alpha), hw = hn_type_brute_force(w, alpha);
    HNType hsum = hn_type_brute_force(direct_sum(v, w), alpha);
    r.check(hsum == hv + hw, [&] { return "hn(V+W) != hn(V)+hn(W): " + where(); });

    Representation vc = conjugate(v, static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
    r.check(hn_type_brute_force(vc, alpha) == hv, [&] { return "not invariant under basis change: " + where(); });

    const Scalar shift = random_rational(rng, 3, 3);
    HNType shifted = hn_type_brute_force(v, alpha.shifted(shift));
    bool shift_ok = shifted.size() == hv.size();
    for (std::size_t i = 0; shift_ok && i < hv.size(); ++i)
      shift_ok = shifted.steps()[i].dimvec == hv.steps()[i].dimvec &&
                 shifted.steps()[i].slope == hv.steps()[i].slope + shift;
    r.check(shift_ok, [&] { return "constant shift changed more than the slopes: " + where(); });

    // V + V' with V' a conjugate: semistable exactly when V is.
    bool ss = hv.size() == 1;
    bool ss_sum = is_semistable(direct_sum(v, vc), alpha);
    r.check(ss == ss_sum, [&] { return "semistability of V+V differs from V: " + where(); });
    if (ss) ++r.counters["semistable"];
  }
  return r;
}

SuiteReport suite_seesaw(const SuiteOptions& o) {
  SuiteReport r{"seesaw"};
  Rng rng(o.seed);
  const long count = pick(o.count, 300);
  const long budget = pick(o.budget, 8);
  for (long c = 0; c < count; ++c) {
    QuiverPtr q = random_small_quiver(rng);
    Representation v = random_representation(rng, q, o.field, budget);
    if (v.total_dimension() < 2) {
      --c;
      continue;
    }
    Subrepresentation u = random_subrep(rng, v);
    if (u.total_dimension() == 0 || u == full_subrep(v)) {
      --c;
      continue;
    }
    CentralCharge alpha = random_charge(rng, q->vertex_count());
    Representation quo = quotient(v, u);
    auto where = [&] { return "module " + dump(v) + " charge " + dump(alpha, *q); };
    r.check(quo.dimension_vector() == v.dimension_vector() - u.dimension_vector(),
            [&] { return "quotient has the wrong dimension: " + where(); });
    const Scalar mu_u = slope(u.dimension_vector(), alpha), mu_v = slope(v, alpha), mu_q = slope(quo, alpha);
    int orders = (mu_u < mu_v && mu_v < mu_q) + (mu_u == mu_v && mu_v == mu_q) + (mu_u > mu_v && mu_v > mu_q);
    r.check(orders == 1, [&] {
      return "slopes " + mu_u.to_string() + ", " + mu_v.to_string() + ", " + mu_q.to_string() + ": " + where();
    });
  }
  return r;
}

SuiteReport suite_skyscraper_structure(const SuiteOptions& o) {
  SuiteReport r{"skyscraper-structure"};
  Rng rng(o.seed);
  const long count = pick(o.count, 100);
  const long budget = pick(o.budget, 8);
  for (long c = 0; c < count; ++c) {
    // Alternate equalised grid modules with arbitrary random modules.
    Representation v = c % 2 == 0
                           ? random_equalised_grid(rng, build_grid(uniform(rng, 0, 1) ? Shape{1, 1} : Shape{2, 1}),
                                                   o.field, budget)
                           : random_representation(rng, random_small_quiver(rng), o.field, budget);
    const bool equalised = is_equalised(v);
    ++r.counters[equalised ? "equalised" : "not equalised"];
    for (Vertex x = 0; x < v.quiver().vertex_count(); ++x) {
      if (v.dim(x) == 0) continue;
      SkyscraperStructure s = skyscraper_structure(v, x);
      const bool holds = s.j_in_range && s.steps_are_spanning && s.top_is_spanning;
      auto where = [&] {
        return "vertex " + v.quiver().vertex_name(x) + " n=" + std::to_string(s.n) + " j=" + std::to_string(s.j) +
               " module " + dump(v);
      };
      if (equalised) {
        r.check(holds, where);
      } else if (!holds) {
        // Outside the equalised class this is reported, not asserted.
        ++r.counters["not equalised, structure fails"];
        if (r.notes.size() < kMaxFailures) r.note("structure fails on a non-equalised module: " + where());
      }
    }
  }
  return r;
}

SuiteReport suite_rank_from_hn(const SuiteOptions& o) {
  SuiteReport r{"rank-from-hn"};
  Rng rng(o.seed);
  const long count = pick(o.count, 200);
  const long budget = pick(o.budget, 8);
  static const std::vector<Shape> shapes{{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}};
  for (long c = 0; c < count; ++c) {
    QuiverPtr q = build_grid(shapes[static_cast<std::size_t>(c) % shapes.size()]);
    Representation v = random_equalised_grid(rng, q, o.field, budget);
    r.check(is_equalised(v), [&] { return "generator produced a non-equalised module " + dump(v); });
    auto inv = skyscraper_invariant(v);
    for (Vertex x = 0; x < q->vertex_count(); ++x)
      for (Vertex y = 0; y < q->vertex_count(); ++y) {
        if (!q->leq(x, y)) continue;
        long expect = generalized_rank(v, x, y);
        long got = rank_from_hn(inv[x], x, y, v.dim(x));
        r.check(got == expect, [&] {
          return "rank at (" + q->vertex_name(x) + "," + q->vertex_name(y) + ") " + std::to_string(got) + " vs " +
                 std::to_string(expect) + ": " + dump(v);
        });
      }
  }
  return r;
}

SuiteReport suite_type_a_oracle(const SuiteOptions& o) {
  SuiteReport r{"type-a-oracle"};
  HnOptions brute;
  brute.allow_thin = false;
  for (const auto& [tau, alpha] : type_a_cases(o, pick(o.count, 50))) {
    QuiverPtr q = build_type_a(tau);
    const int l = static_cast<int>(tau.length());
    bool all_stable = true;
    for (int a = 0; a <= l && all_stable; ++a)
      for (int b = a; b <= l && all_stable; ++b) all_stable = is_stable(interval_module(q, a, b, o.field), alpha, brute);
    const bool verdict = is_complete_type_a(tau, alpha);
    ++r.counters[verdict ? "complete" : "incomplete"];
    r.check(verdict == all_stable, [&] {
      return "tau=" + tau.to_string() + " charge " + dump(alpha, *q) + ": classifier " + (verdict ? "complete" : "incomplete") +
             ", oracle " + (all_stable ? "all stable" : "some interval unstable");
    });
  }
  LevelSets ls = chi_eta(Orientation::parse("1101"));
  r.check(ls.chi == std::vector<long>{0, 1, 2, 2, 3} && ls.eta == std::vector<long>{0, 0, 0, 1, 1},
          [] { return std::string("chi/eta for 1101 differ from (0,1,2,2,3)/(0,0,0,1,1)"); });
  return r;
}

SuiteReport suite_counterexamples(const SuiteOptions& o) {
  SuiteReport r{"counterexamples"};
  for (const auto& [tau, alpha] : type_a_cases(o, pick(o.count, 50))) {
    QuiverPtr q = build_type_a(tau);
    const int l = static_cast<int>(tau.length());
    HnOptions brute;
    brute.allow_thin = false;
    for (int a = 0; a <= l; ++a)
      for (int b = a; b <= l; ++b) {
        Representation i = interval_module(q, a, b, o.field);
        if (is_stable(i, alpha, brute)) continue;
        auto where = [&] {
          return "tau=" + tau.to_string() + " [" + std::to_string(a) + "," + std::to_string(b) + "] charge " +
                 dump(alpha, *q);
        };
        auto pair = completeness_counterexample(i, alpha);
        r.check(pair.has_value(), [&] { return "no counterexample for an unstable interval: " + where(); });
        if (!pair) continue;
        ++r.counters[pair->semistable ? "equal-slope split" : "destabilizing split"];
        HNType h1 = hn_type_brute_force(pair->original, alpha), h2 = hn_type_brute_force(pair->split, alpha);
        r.check(h1 == h2, [&] { return "HN types differ: " + where(); });
        r.check(pair->original_summands != pair->split_summands &&
                    pair->original.dimension_vector() == pair->split.dimension_vector(),
                [&] { return "pair is not a valid non-isomorphic pair: " + where(); });
      }
  }
  return r;
}

SuiteReport suite_zigzag_roundtrip(const SuiteOptions& o) {
  SuiteReport r{"zigzag-roundtrip"};
  Rng rng(o.seed);
  const long count = pick(o.count, 200);
  const long budget = pick(o.budget, 10);
  for (long c = 0; c < count; ++c) {
    const int l = o.length > 0 ? o.length : static_cast<int>(uniform(rng, 1, 4));
    Orientation tau = random_orientation(rng, static_cast<std::size_t>(l));
    QuiverPtr q = build_type_a(tau);
    Barcode bars = random_barcode(rng, l, budget);
    // A random complete charge when one turns up quickly, else the solver's.
    CentralCharge alpha;
    for (int t = 0; t < 20 && alpha.size() == 0; ++t) {
      CentralCharge cand = random_charge(rng, q->vertex_count());
      if (is_complete_type_a(tau, cand)) alpha = cand;
    }
    if (alpha.size() == 0) alpha = complete_type_a_charge(tau);
    auto v = conjugate(from_barcode(q, bars, o.field), static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
    HnResult hn = hn_type_with_fallback(v, alpha, roundtrip_options());
    ++r.counters["method:" + to_string(hn.method)];
    Barcode got;
    std::string error;
    try {
      got = recover_barcode(hn.type, tau, alpha);
    } catch (const Error& e) {
      error = e.what();
    }
    r.check(error.empty() && got == bars, [&] {
      return "tau=" + tau.to_string() + " barcode " + bars.to_string() + " recovered " +
             (error.empty() ? got.to_string() : error) + " charge " + dump(alpha, *q);
    });
  }
  return r;
}

SuiteReport suite_grid_oracle(const SuiteOptions& o) {
  SuiteReport r{"grid-oracle"};
  Rng rng(o.seed);
  const long count = pick(o.count, 100);
  static const std::vector<Shape> shapes{{1, 1}, {2, 1}, {2, 2}, {1, 1, 1}};
  HnOptions brute;
  brute.allow_thin = false;
  for (const Shape& shape : shapes) {
    QuiverPtr q = build_grid(shape);
    auto rects = enumerate_rectangles(shape);
    for (long c = 0; c < count; ++c) {
      CentralCharge alpha;
      do {
        alpha = c % 2 == 0 ? random_charge(rng, q->vertex_count())
                           : generic_descending_charge(shape, static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
      } while (in_hyperplane_arrangement(alpha, shape).on_hyperplane);
      GridVerdict verdict = is_complete_grid_charge(alpha, shape);
      ++r.counters[to_string(verdict)];
      bool all_stable = true;
      for (const auto& rect : rects)
        if (!is_stable(rectangle_module(q, rect, o.field), alpha, brute)) {
          all_stable = false;
          break;
        }
      r.check((verdict == GridVerdict::complete) == all_stable, [&] {
        return "charge " + dump(alpha, *q) + ": classifier " + to_string(verdict) + ", oracle " +
               (all_stable ? "all stable" : "some rectangle unstable");
      });
    }
  }
  // Rectangle recovery along generic descending charges.
  const long budget = pick(o.budget, 8);
  for (long c = 0; c < count; ++c) {
    const Shape& shape = shapes[static_cast<std::size_t>(c) % shapes.size()];
    QuiverPtr q = build_grid(shape);
    RectangleMultiset m = random_rectangles(rng, shape, budget);
    CentralCharge alpha = generic_descending_charge(shape, static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
    auto v = conjugate(from_rectangles(q, m, o.field), static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
    HnResult hn = hn_type_with_fallback(v, alpha, roundtrip_options());
    ++r.counters["recovery method:" + to_string(hn.method)];
    RectangleMultiset got;
    std::string error;
    try {
      got = recover_rectangles(hn.type, alpha, shape);
    } catch (const Error& e) {
      error = e.what();
    }
    r.check(error.empty() && got == m, [&] {
      return "rectangles " + m.to_string() + " recovered " + (error.empty() ? got.to_string() : error) + " charge " +
             dump(alpha, *q);
    });
  }
  return r;
}

SuiteReport suite_flow_mincut(const SuiteOptions& o) {
  SuiteReport r{"flow-mincut"};
  auto check_network = [&r](const Quiver& q, const VertexSet& u) {
    FlowNetwork net = build_flow_network(q, u);
    Scalar flow = max_flow(net), cut = min_cut_bruteforce(net);
    r.check(flow == cut && cut >= Scalar(1), [&] {
      return "U=" + set_text(q, u) + " max_flow " + flow.to_string() + " min_cut " + cut.to_string() + "\n" +
             net.dump();
    });
  };
  static const std::vector<Shape> small{{1}, {2}, {1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (const Shape& shape : small) {
    QuiverPtr q = build_grid(shape);
    for (const auto& u : enumerate_up_closed(*q)) {
      if (u.empty() || u.size() == q->vertex_count()) continue;
      check_network(*q, u);
      ++r.counters["exhaustive"];
    }
  }
  Rng rng(o.seed);
  QuiverPtr big = build_grid({3, 3});
  const long count = pick(o.count, 100);
  for (long c = 0; c < count;) {
    VertexSet u = up_closure(*big, random_subset(rng, big->vertex_count()));
    if (u.empty() || u.size() == big->vertex_count()) continue;
    check_network(*big, u);
    ++c;
    ++r.counters["random (3,3)"];
  }
  return r;
}

SuiteReport suite_lattice(const SuiteOptions& o) {
  SuiteReport r{"lattice"};
  auto check = [&r](const Quiver& q, const VertexSet& u, const VertexSet& a) {
    r.check(lattice_inequality_check(q, u, a),
            [&] { return "lattice inequality fails for U=" + set_text(q, u) + " A=" + set_text(q, a); });
  };
  static const std::vector<Shape> small{{1, 1}, {2, 1}, {1, 2}, {2, 2}};
  for (const Shape& shape : small) {
    QuiverPtr q = build_grid(shape);
    for (const auto& u : enumerate_up_closed(*q)) {
      std::vector<Vertex> d = u.complement().members();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.size()); ++mask) {
        VertexSet a(q->vertex_count());
        for (std::size_t k = 0; k < d.size(); ++k)
          if ((mask >> k) & 1u) a.insert(d[k]);
        check(*q, u, a);
        ++r.counters["exhaustive"];
      }
    }
  }
  Rng rng(o.seed);
  QuiverPtr big = build_grid({3, 3});
  const long count = pick(o.count, 10000);
  for (long c = 0; c < count; ++c) {
    VertexSet u = up_closure(*big, random_subset(rng, big->vertex_count()));
    VertexSet a = random_subset(rng, big->vertex_count()) & u.complement();
    check(*big, u, a);
  }
  r.counters["random (3,3)"] = count;
  // |X| |Y| <= |X meet Y| |X join Y| on grids and ladders.
  std::vector<QuiverPtr> lattices{build_grid({2, 2}), build_grid({3, 3}), build_grid({1, 1, 1}), build_ladder(3)};
  for (const auto& q : lattices) {
    auto coords = *lattice_coordinates(*q);
    std::map<std::vector<int>, Vertex> at;
    for (Vertex x = 0; x < q->vertex_count(); ++x) at[coords[x]] = x;
    for (int c = 0; c < 250; ++c) {
      VertexSet x = random_subset(rng, q->vertex_count()), y = random_subset(rng, q->vertex_count());
      VertexSet meets(q->vertex_count()), joins(q->vertex_count());
      for (Vertex i : x.members())
        for (Vertex j : y.members()) {
          meets.insert(at.at(meet(coords[i], coords[j])));
          joins.insert(at.at(join(coords[i], coords[j])));
        }
      r.check(x.size() * y.size() <= meets.size() * joins.size(),
              [&] { return "four-function bound fails: X=" + set_text(*q, x) + " Y=" + set_text(*q, y); });
      ++r.counters["four-function"];
    }
  }
  return r;
}

SuiteReport suite_ladder_closed_form(const SuiteOptions& o) {
  SuiteReport r{"ladder-closed-form"};
  const int lo = o.length > 0 ? o.length : 1;
  const int hi = o.length > 0 ? o.length : 3;
  for (int l = lo; l <= hi; ++l) {
    QuiverPtr ladder = build_ladder(l);
    auto catalog = nestfree_indecomposables(l);
    for (const auto& e : charge_family(l)) {
      for (const auto& i : catalog) {
        Representation v = ladder_module(ladder, i, o.field);
        HNType closed = hn_type_indec(l, i, e.charge);
        HNType brute = hn_type_brute_force(v, e.charge);
        r.check(closed == brute, [&] {
          return "l=" + std::to_string(l) + " " + i.to_string() + " charge " + dump(e.charge, *ladder) + ": closed " +
                 dump(closed, *ladder) + " brute " + dump(brute, *ladder);
        });
      }
      // Pair charges: the spanning submodule at S of every class member has
      // dimension k and slope lambda = (1 + t) / k.
      if (e.s.size() != 2) continue;
      VertexSet s(ladder->vertex_count(), e.s);
      for (const auto& i : catalog) {
        if (!s.is_subset_of(ladder_support(l, i))) continue;
        IndecClass cls = class_of(l, i);
        if (cls.s != e.s || cls.k != e.levels.front().k) continue;
        VertexSet span = spanning_support(l, i, s);
        DimensionVector d(ladder->vertex_count(), 0);
        for (Vertex x : span.members()) d[x] = 1;
        const Scalar expect = e.levels.front().lambda;
        r.check(static_cast<long>(span.size()) == cls.k && slope(d, e.charge) == expect, [&] {
          return "slope of the spanning part of " + i.to_string() + " is " + slope(d, e.charge).to_string() +
                 ", expected " + expect.to_string();
        });
      }
    }
  }
  for (long l = 1; l <= 6; ++l) {
    const long formula = (2 * l * l * l + 3 * l * l + 13 * l + 12) / 6;
    const long got = static_cast<long>(charge_family(static_cast<int>(l)).size());
    r.check(got == formula && charge_family_size(static_cast<int>(l)) == formula, [&] {
      return "|A(" + std::to_string(l) + ")| = " + std::to_string(got) + ", formula " + std::to_string(formula);
    });
  }
  const std::vector<std::pair<int, long>> pinned{{1, 5}, {2, 11}, {4, 40}};
  for (auto [l, n] : pinned)
    r.check(static_cast<long>(charge_family(l).size()) == n,
            [l = l, n = n] { return "|A(" + std::to_string(l) + ")| != " + std::to_string(n); });
  return r;
}

SuiteReport suite_ladder_roundtrip(const SuiteOptions& o) {
  SuiteReport r{"ladder-roundtrip"};
  Rng rng(o.seed);
  const long count = pick(o.count, 200);
  const long budget = pick(o.budget, 12);
  for (long c = 0; c < count; ++c) {
    const int l = o.length > 0 ? o.length : static_cast<int>(uniform(rng, 1, 4));
    QuiverPtr ladder = build_ladder(l);
    LadderMultiset m = random_nestfree(rng, l, budget, 3);
    auto v = conjugate(from_ladder_multiset(ladder, m, o.field), static_cast<std::uint64_t>(uniform(rng, 0, 1L << 40)));
    r.check(is_nestfree(v.module), [&] { return "generated module has nested rows: " + m.to_string(); });
    std::vector<HNType> types;
    for (const auto& e : charge_family(l)) {
      HnResult hn = hn_type_with_fallback(v, e.charge, roundtrip_options());
      ++r.counters["method:" + to_string(hn.method)];
      types.push_back(hn.type);
    }
    LadderMultiset got;
    std::string error;
    try {
      got = recover_ladder(l, types);
    } catch (const Error& e) {
      error = e.what();
    }
    r.check(error.empty() && got == m, [&] {
      return "l=" + std::to_string(l) + " multiset " + m.to_string() + " recovered " +
             (error.empty() ? got.to_string() : error);
    });
  }
  return r;
}

SuiteReport suite_ladder_infeasibility(const SuiteOptions&) {
  SuiteReport r{"ladder-infeasibility"};
  InfeasibilityReport rep = infeasibility_certificate();
  for (std::size_t i = 0; i < rep.inclusions_valid.size(); ++i)
    r.check(rep.inclusions_valid[i],
            [&] { return rep.smaller[i].to_string() + " is not included in " + rep.larger[i].to_string(); });
  r.check(rep.combination == std::vector<long>{4, 4, 1, 4, 1}, [] { return std::string("unexpected combination"); });
  r.check(rep.cancels, [&] { return "combination does not cancel: " + rep.summary(); });
  r.check(rep.lp_infeasible, [&] { return "elimination found a charge: " + rep.summary(); });
  r.note(rep.summary());
  return r;
}

namespace {

/// Identity-candidate failure and HN agreement for V(lambda), V(mu) along
/// every skyscraper charge and `count` random charges.
void nested_pair_checks(SuiteReport& r, Field field, long lambda, long mu, std::uint64_t seed, long count,
                        const std::string& tag) {
  Representation v1 = fixture_v_lambda(lambda, field), v2 = fixture_v_lambda(mu, field);
  const Quiver& q = v1.quiver();
  auto failure = identity_morphism_failure(v1, v2);
  r.check(failure.has_value(), [&] { return tag + ": identity matrices commute with every edge map"; });
  if (failure) r.note(tag + ": identity fails to commute on edge " + *failure);
  HnOptions opts;
  opts.max_total_dimension = 20;
  std::vector<CentralCharge> charges;
  for (Vertex x = 0; x < q.vertex_count(); ++x) charges.push_back(CentralCharge::skyscraper(q, x));
  Rng rng(seed);
  for (long c = 0; c < count; ++c) charges.push_back(random_charge(rng, q.vertex_count()));
  long mismatches = 0;
  for (const auto& alpha : charges) {
    HNType h1 = hn_type_brute_force(v1, alpha, opts), h2 = hn_type_brute_force(v2, alpha, opts);
    mismatches += !(h1 == h2);
    r.check(h1 == h2, [&] {
      return tag + " charge " + dump(alpha, q) + ": first " + dump(h1, q) + " second " + dump(h2, q);
    });
  }
  r.counters[tag + " charges"] = static_cast<long>(charges.size());
  r.counters[tag + " mismatches"] = mismatches;
  const long subs1 = static_cast<long>(enumerate_subreps(v1, {20}).size());
  const long subs2 = static_cast<long>(enumerate_subreps(v2, {20}).size());
  r.note(tag + ": " + std::to_string(subs1) + " vs " + std::to_string(subs2) + " subrepresentations");
}

}  // namespace

SuiteReport suite_nested_fixture(const SuiteOptions& o) {
  SuiteReport r{"nested-fixture"};
  const Field field = o.field.is_finite() && o.field.characteristic > 2 ? o.field : Field::F3();
  const long count = pick(o.count, 50);
  nested_pair_checks(r, field, 1, 2, o.seed, count, field.name() + " V(1)/V(2)");
  // At lambda = 1 the vertical map at x2 is singular, which adds
  // subrepresentations V(2) lacks; over F5 both scalars avoid 0 and 1.
  nested_pair_checks(r, Field{5}, 2, 3, o.seed, count, "F5 V(2)/V(3)");
  return r;
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> registry{
      {"fixtures", suite_fixtures},
      {"hn-postconditions", suite_hn_postconditions},
      {"additivity", suite_additivity},
      {"seesaw", suite_seesaw},
      {"skyscraper-structure", suite_skyscraper_structure},
      {"rank-from-hn", suite_rank_from_hn},
      {"type-a-oracle", suite_type_a_oracle},
      {"counterexamples", suite_counterexamples},
      {"zigzag-roundtrip", suite_zigzag_roundtrip},
      {"grid-oracle", suite_grid_oracle},
      {"flow-mincut", suite_flow_mincut},
      {"lattice", suite_lattice},
      {"ladder-closed-form", suite_ladder_closed_form},
      {"ladder-roundtrip", suite_ladder_roundtrip},
      {"ladder-infeasibility", suite_ladder_infeasibility},
      {"nested-fixture", suite_nested_fixture},
  };
  return registry;
}

}  // namespace hnq
