#include "hnq/zigzag.hpp"

#include <sstream>

#include "hnq/error.hpp"

namespace hnq {

namespace {

const Orientation& orientation_of(const Quiver& q) {
  if (const auto* f = std::get_if<TypeAFamily>(&q.family())) return f->orientation;
  throw InputError("expected a type-A quiver");
}

void check_interval(int length, Interval i) {
  if (i.a < 0 || i.a > i.b || i.b > length)
    throw InputError("interval [" + std::to_string(i.a) + "," + std::to_string(i.b) + "] is not inside [0," +
                     std::to_string(length) + "]");
}

DimensionVector interval_dimvec(std::size_t n, Interval i) {
  DimensionVector d(n, 0);
  for (int x = i.a; x <= i.b; ++x) d[static_cast<std::size_t>(x)] = 1;
  return d;
}

}  // namespace

void Barcode::add(Interval i, long multiplicity) {
  if (multiplicity < 0) throw InputError("negative multiplicity");
  if (i.a > i.b) throw InputError("interval with a > b");
  if (multiplicity == 0) return;
  bars[i] += multiplicity;
}

long Barcode::total_dimension() const {
  long s = 0;
  for (const auto& [i, m] : bars) s += m * (i.b - i.a + 1);
  return s;
}

std::string Barcode::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, m] : bars) {
    if (!first) os << ", ";
    os << "[" << i.a << "," << i.b << "]:" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

Representation interval_module(const QuiverPtr& quiver, int a, int b, Field field) {
  const Orientation& tau = orientation_of(*quiver);
  check_interval(static_cast<int>(tau.length()), {a, b});
  VertexSet s(quiver->vertex_count());
  for (int x = a; x <= b; ++x) s.insert(static_cast<Vertex>(x));
  return thin_module(quiver, s, field);
}

DecomposedRepresentation from_barcode(const QuiverPtr& quiver, const Barcode& barcode, Field field) {
  std::vector<DecomposedRepresentation::Summand> summands;
  for (const auto& [i, m] : barcode.bars) summands.push_back({interval_module(quiver, i.a, i.b, field), m});
  return assemble(quiver, field, std::move(summands));
}

Scalar interval_slope(const CentralCharge& alpha, int a, int b) {
  if (a < 0 || a > b || static_cast<std::size_t>(b) >= alpha.size()) throw InputError("interval outside the charge");
  Scalar s;
  for (int x = a; x <= b; ++x) s += alpha[static_cast<Vertex>(x)];
  return s / Scalar(b - a + 1);
}

LevelSets chi_eta(const Orientation& tau) {
  LevelSets out;
  const std::size_t n = tau.length();
  out.chi.assign(n + 1, 0);
  out.eta.assign(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    out.chi[i] = out.chi[i - 1] + (tau.forward(i) ? 1 : 0);
    out.eta[i] = out.eta[i - 1] + (tau.forward(i) ? 0 : 1);
  }
  auto blocks = [n](const std::vector<long>& f) {
    std::vector<Interval> b;
    int start = 0;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      if (i == n + 1 || f[i] != f[i - 1]) {
        b.push_back({start, static_cast<int>(i - 1)});
        start = static_cast<int>(i);
      }
    }
    return b;
  };
  out.x_blocks = blocks(out.chi);
  out.y_blocks = blocks(out.eta);
  return out;
}

TypeAVerdict classify_type_a(const Orientation& tau, const CentralCharge& alpha) {
  if (alpha.size() != tau.length() + 1) throw InputError("charge size does not match the orientation");
  LevelSets ls = chi_eta(tau);
  auto name = [](Interval i) { return "I[" + std::to_string(i.a) + "," + std::to_string(i.b) + "]"; };
  for (std::size_t k = 1; k < ls.x_blocks.size(); ++k) {
    Scalar hi = interval_slope(alpha, ls.x_blocks[k - 1].a, ls.x_blocks[k - 1].b);
    Scalar lo = interval_slope(alpha, ls.x_blocks[k].a, ls.x_blocks[k].b);
    if (!(hi > lo))
      return {false, "slope of " + name(ls.x_blocks[k - 1]) + " (" + hi.to_string() + ") must exceed slope of " +
                         name(ls.x_blocks[k]) + " (" + lo.to_string() + ")"};
  }
  for (std::size_t k = 1; k < ls.y_blocks.size(); ++k) {
    Scalar lo = interval_slope(alpha, ls.y_blocks[k - 1].a, ls.y_blocks[k - 1].b);
    Scalar hi = interval_slope(alpha, ls.y_blocks[k].a, ls.y_blocks[k].b);
    if (!(lo < hi))
      return {false, "slope of " + name(ls.y_blocks[k - 1]) + " (" + lo.to_string() + ") must be below slope of " +
                         name(ls.y_blocks[k]) + " (" + hi.to_string() + ")"};
  }
  return {true, ""};
}

bool is_complete_type_a(const Orientation& tau, const CentralCharge& alpha) {
  return classify_type_a(tau, alpha).complete;
}

std::vector<LinearConstraint> type_a_constraints(const Orientation& tau) {
  const std::size_t n = tau.length() + 1;
  LevelSets ls = chi_eta(tau);
  // mean(first) - mean(second) < 0, scaled by both block lengths.
  auto less = [n](Interval first, Interval second) {
    LinearConstraint c;
    c.coefficients.assign(n, Rational(0));
    const long lf = first.b - first.a + 1, ls2 = second.b - second.a + 1;
    for (int x = first.a; x <= first.b; ++x) c.coefficients[static_cast<std::size_t>(x)] += ls2;
    for (int x = second.a; x <= second.b; ++x) c.coefficients[static_cast<std::size_t>(x)] -= lf;
    c.relation = LinearConstraint::Relation::less;
    return c;
  };
  std::vector<LinearConstraint> out;
  for (std::size_t k = 1; k < ls.x_blocks.size(); ++k) out.push_back(less(ls.x_blocks[k], ls.x_blocks[k - 1]));
  for (std::size_t k = 1; k < ls.y_blocks.size(); ++k) out.push_back(less(ls.y_blocks[k - 1], ls.y_blocks[k]));
  return out;
}

CentralCharge complete_type_a_charge(const Orientation& tau) {
  auto system = type_a_constraints(tau);
  std::vector<Scalar> values;
  if (system.empty()) {
    values.assign(tau.length() + 1, Scalar(0));
  } else {
    auto point = find_feasible_point(system);
    if (!point) throw InternalError("block inequalities are infeasible");
    for (const auto& r : *point) values.emplace_back(r);
  }
  CentralCharge alpha(std::move(values));
  if (!is_complete_type_a(tau, alpha)) throw InternalError("solver returned a charge that is not complete");
  return alpha;
}

Barcode recover_barcode(const HNType& hn, const Orientation& tau, const CentralCharge& alpha) {
  TypeAVerdict verdict = classify_type_a(tau, alpha);
  if (!verdict.complete) throw RefusalError("charge is not complete: " + verdict.explanation);
  const int length = static_cast<int>(tau.length());
  const std::size_t n = tau.length() + 1;
  Barcode out;
  for (const auto& step : hn.steps()) {
    if (step.dimvec.size() != n) throw InputError("HN type does not match the quiver");
    // Intervals at this slope, at most one per right endpoint.
    std::map<int, int, std::greater<>> by_end;
    for (int b = 0; b <= length; ++b)
      for (int a = 0; a <= b; ++a)
        if (interval_slope(alpha, a, b) == step.slope) {
          if (by_end.count(b))
            throw InconsistencyError("two intervals ending at " + std::to_string(b) + " share slope " +
                                     step.slope.to_string());
          by_end[b] = a;
        }
    DimensionVector residual = step.dimvec;
    for (const auto& [b, a] : by_end) {
      long m = residual[static_cast<std::size_t>(b)];
      if (m < 0) throw InconsistencyError("negative multiplicity while peeling slope " + step.slope.to_string());
      if (m == 0) continue;
      residual = residual - m * interval_dimvec(n, {a, b});
      out.add({a, b}, m);
    }
    for (long r : residual)
      if (r != 0)
        throw InconsistencyError("dimension vector at slope " + step.slope.to_string() +
                                 " is not a sum of intervals of that slope");
  }
  return out;
}

}  // namespace hnq
