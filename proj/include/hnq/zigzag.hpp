#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnq/hn.hpp"
#include "hnq/inequalities.hpp"

namespace hnq {

struct Interval {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Multiset of intervals [a,b] of {0..l} with positive multiplicities.
struct Barcode {
  std::map<Interval, long> bars;

  void add(Interval i, long multiplicity = 1);
  long total_dimension() const;
  bool empty() const { return bars.empty(); }
  std::string to_string() const;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Thin module on [a,b] with identity maps inside the support.
Representation interval_module(const QuiverPtr& quiver, int a, int b, Field field = Field::F2());

/// Direct sum of interval modules; the summands are kept as ground truth.
DecomposedRepresentation from_barcode(const QuiverPtr& quiver, const Barcode& barcode, Field field = Field::F2());

/// Mean of alpha over x_a..x_b.
Scalar interval_slope(const CentralCharge& alpha, int a, int b);

struct LevelSets {
  std::vector<long> chi;
  std::vector<long> eta;
  std::vector<Interval> x_blocks;  // level sets of chi, in order
  std::vector<Interval> y_blocks;  // level sets of eta, in order
};
LevelSets chi_eta(const Orientation& tau);

struct TypeAVerdict {
  bool complete = false;
  std::string explanation;  // first violated inequality, if any
};
/// Slopes over the chi blocks strictly decrease and over the eta blocks
/// strictly increase.
TypeAVerdict classify_type_a(const Orientation& tau, const CentralCharge& alpha);
bool is_complete_type_a(const Orientation& tau, const CentralCharge& alpha);

/// The block inequalities in the form used by the feasibility solver
/// (one variable per vertex).
std::vector<LinearConstraint> type_a_constraints(const Orientation& tau);

/// Some rational complete charge for tau, found by exact elimination.
CentralCharge complete_type_a_charge(const Orientation& tau);

/// Inverts the HN type along a complete charge. Throws RefusalError if alpha
/// is not complete and InconsistencyError if hn cannot come from a module.
Barcode recover_barcode(const HNType& hn, const Orientation& tau, const CentralCharge& alpha);

}  // namespace hnq
