#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hnq/scalar.hpp"

namespace hnq {

/// sum_i coefficients[i] * x_i + constant  (< or <=)  0
struct LinearConstraint {
  enum class Relation { less, less_equal };

  std::vector<Rational> coefficients;
  Rational constant{0};
  Relation relation = Relation::less;

  bool strict() const { return relation == Relation::less; }
  bool holds_at(const std::vector<Rational>& point) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

/// Exact Fourier-Motzkin elimination over Q.
///
/// Returns a point satisfying every constraint, or nullopt when the system
/// is infeasible. All constraints must have the same number of variables.
std::optional<std::vector<Rational>> find_feasible_point(
    const std::vector<LinearConstraint>& system);

inline bool is_feasible(const std::vector<LinearConstraint>& system) {
  return find_feasible_point(system).has_value();
}

}  // namespace hnq
