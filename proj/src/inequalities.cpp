#include "hnq/inequalities.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hnq/error.hpp"

namespace hnq {

bool LinearConstraint::holds_at(const std::vector<Rational>& point) const {
  Rational value = constant;
  for (std::size_t i = 0; i < coefficients.size(); ++i) value += coefficients[i] * point.at(i);
  return strict() ? sgn(value) < 0 : sgn(value) <= 0;
}

std::string LinearConstraint::to_string(const std::vector<std::string>& names) const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (sgn(coefficients[i]) == 0) continue;
    Rational c = coefficients[i];
    if (!first) os << (sgn(c) > 0 ? " + " : " - ");
    else if (sgn(c) < 0) os << "-";
    Rational mag = abs(c);
    if (mag != 1) os << format_rational(mag) << "*";
    os << (i < names.size() ? names[i] : "v" + std::to_string(i));
    first = false;
  }
  if (sgn(constant) != 0 || first) {
    if (!first) os << (sgn(constant) >= 0 ? " + " : " - ") << format_rational(abs(constant));
    else os << format_rational(constant);
  }
  os << (strict() ? " < 0" : " <= 0");
  return os.str();
}

namespace {

using System = std::vector<LinearConstraint>;

// Scale so the first nonzero entry (coefficients, then constant) has
// absolute value one; makes duplicate detection syntactic.
LinearConstraint normalized(LinearConstraint c) {
  Rational scale = 0;
  for (const auto& v : c.coefficients)
    if (sgn(v) != 0) {
      scale = abs(v);
      break;
    }
  if (sgn(scale) == 0 && sgn(c.constant) != 0) scale = abs(c.constant);
  if (sgn(scale) != 0) {
    for (auto& v : c.coefficients) v /= scale;
    c.constant /= scale;
  }
  return c;
}

struct ConstraintKey {
  const LinearConstraint* c;
  bool operator<(const ConstraintKey& o) const {
    if (c->relation != o.c->relation) return c->relation < o.c->relation;
    for (std::size_t i = 0; i < c->coefficients.size(); ++i) {
      int cmp = ::cmp(c->coefficients[i], o.c->coefficients[i]);
      if (cmp != 0) return cmp < 0;
    }
    return ::cmp(c->constant, o.c->constant) < 0;
  }
};

System deduplicate(const System& sys) {
  System normalized_sys;
  normalized_sys.reserve(sys.size());
  for (const auto& c : sys) normalized_sys.push_back(normalized(c));
  std::set<ConstraintKey> seen;
  System out;
  for (const auto& c : normalized_sys) {
    if (seen.insert(ConstraintKey{&c}).second) out.push_back(c);
  }
  return out;
}

// Eliminates the variable `var`, producing constraints in which its
// coefficient is zero.
System eliminate(const System& sys, std::size_t var) {
  System keep, pos, neg;
  for (const auto& c : sys) {
    int s = sgn(c.coefficients[var]);
    if (s == 0) keep.push_back(c);
    else if (s > 0) pos.push_back(c);
    else neg.push_back(c);
  }
  for (const auto& p : pos) {
    for (const auto& n : neg) {
      // p: a x + r, n: -b x + s with a,b > 0  ->  b*p + a*n eliminates x.
      Rational a = p.coefficients[var];
      Rational b = -n.coefficients[var];
      LinearConstraint combo;
      combo.coefficients.resize(p.coefficients.size());
      for (std::size_t i = 0; i < combo.coefficients.size(); ++i)
        combo.coefficients[i] = b * p.coefficients[i] + a * n.coefficients[i];
      combo.coefficients[var] = 0;
      combo.constant = b * p.constant + a * n.constant;
      combo.relation = (p.strict() || n.strict()) ? LinearConstraint::Relation::less
                                                  : LinearConstraint::Relation::less_equal;
      keep.push_back(std::move(combo));
    }
  }
  return deduplicate(keep);
}

}  // namespace

std::optional<std::vector<Rational>> find_feasible_point(const System& system) {
  if (system.empty()) return std::vector<Rational>{};
  const std::size_t nvars = system.front().coefficients.size();
  for (const auto& c : system)
    if (c.coefficients.size() != nvars)
      throw InputError("constraints have different numbers of variables");

  // stages[k] involves only variables 0..k-1.
  std::vector<System> stages(nvars + 1);
  stages[nvars] = deduplicate(system);
  for (std::size_t k = nvars; k > 0; --k) stages[k - 1] = eliminate(stages[k], k - 1);

  for (const auto& c : stages[0]) {
    int s = sgn(c.constant);
    if (c.strict() ? s >= 0 : s > 0) return std::nullopt;
  }

  std::vector<Rational> point(nvars, Rational(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Rational> lower, upper;
    bool lower_strict = false, upper_strict = false;
    for (const auto& c : stages[k + 1]) {
      const Rational& a = c.coefficients[k];
      if (sgn(a) == 0) continue;
      Rational rest = c.constant;
      for (std::size_t i = 0; i < k; ++i) rest += c.coefficients[i] * point[i];
      Rational bound = -rest / a;
      if (sgn(a) > 0) {
        if (!upper || bound < *upper) {
          upper = bound;
          upper_strict = c.strict();
        } else if (bound == *upper) {
          upper_strict = upper_strict || c.strict();
        }
      } else {
        if (!lower || bound > *lower) {
          lower = bound;
          lower_strict = c.strict();
        } else if (bound == *lower) {
          lower_strict = lower_strict || c.strict();
        }
      }
    }
    if (lower && upper) {
      if (*lower == *upper) {
        if (lower_strict || upper_strict) throw InternalError("elimination produced an empty interval");
        point[k] = *lower;
      } else {
        point[k] = (*lower + *upper) / 2;
      }
    } else if (lower) {
      point[k] = *lower + 1;
    } else if (upper) {
      point[k] = *upper - 1;
    }
  }
  for (const auto& c : system)
    if (!c.holds_at(point)) throw InternalError("back-substituted point violates a constraint");
  return point;
}

}  // namespace hnq
