#pragma once

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hnq/hn.hpp"
#include "hnq/inequalities.hpp"
#include "hnq/zigzag.hpp"

namespace hnq {

/// Nestfree ladder indecomposable R^{a,b}_{c,d}: top row [a,b], bottom row
/// [c,d]. A missing row has both endpoints equal to `inf`.
struct LadderIndec {
  static constexpr int inf = INT_MAX;
  int a = inf;
  int b = inf;
  int c = inf;
  int d = inf;

  bool has_top() const { return a != inf; }
  bool has_bottom() const { return c != inf; }
  long dimension() const;
  std::string to_string() const;
  friend auto operator<=>(const LadderIndec&, const LadderIndec&) = default;
};

LadderIndec ladder_full(int a, int b, int c, int d);
LadderIndec ladder_top_only(int a, int b);
LadderIndec ladder_bottom_only(int c, int d);
/// Throws InputError unless the endpoints describe a catalog member.
void validate_indec(int length, const LadderIndec& i);

/// The catalog: c <= a <= d <= b, then top-only, then bottom-only.
std::vector<LadderIndec> nestfree_indecomposables(int length);

VertexSet ladder_support(int length, const LadderIndec& i);
Representation ladder_module(const QuiverPtr& ladder, const LadderIndec& i, Field field = Field::F2());

struct LadderMultiset {
  std::map<LadderIndec, long> counts;

  void add(const LadderIndec& i, long multiplicity = 1);
  long total_dimension() const;
  std::string to_string() const;
  friend bool operator==(const LadderMultiset&, const LadderMultiset&) = default;
};
DecomposedRepresentation from_ladder_multiset(const QuiverPtr& ladder, const LadderMultiset& m,
                                              Field field = Field::F2());

/// a < c <= d < b for some pair of bars.
bool has_strict_nesting(const Barcode& b);

struct RowBarcodes {
  Barcode top;
  Barcode bottom;
};
/// Row barcodes from ranks by inclusion-exclusion. Requires an equalised
/// module (InputError otherwise).
RowBarcodes row_barcodes(const Representation& v);
bool is_nestfree(const Representation& v);
bool is_nestfree(const LadderMultiset& m);

/// Strict inclusion `smaller` < `larger` among catalog members.
bool inclusion_relation(const LadderIndec& smaller, const LadderIndec& larger);

/// Minimal vertices of the support in the flow order.
VertexSet minimal_vertices(int length, const LadderIndec& i);
/// Support of the spanning subrepresentation of I at S (S inside supp I).
VertexSet spanning_support(int length, const LadderIndec& i, const VertexSet& s);

struct IndecClass {
  long k = 0;
  std::vector<Vertex> s;  // sorted
  friend auto operator<=>(const IndecClass&, const IndecClass&) = default;
};
IndecClass class_of(int length, const LadderIndec& i);
/// Members of each (k, S) class, sorted by decreasing top endpoint b.
std::map<IndecClass, std::vector<LadderIndec>> indec_partition(int length);

/// q/(p-q) + (U - L) * sqrt2/2 with L = q/(p-q), U = (q+1)/(p-q-1).
Scalar t_value(long p, long q);

struct ChargeLevel {
  long k;
  Scalar lambda;
};
/// One charge of the family: a skyscraper (S = {x}, every class size k)
/// or delta_{a+} + t * delta_{c-} for one class (k, {x_a+, x_c-}).
struct ChargeFamilyEntry {
  std::vector<Vertex> s;
  CentralCharge charge;
  std::vector<ChargeLevel> levels;
};
std::vector<ChargeFamilyEntry> charge_family(int length);
/// (2l^3 + 3l^2 + 13l + 12) / 6
long charge_family_size(int length);

/// HN type of a catalog member along any charge supported on at most two
/// vertices with positive values (every member of the family is of that kind).
HNType hn_type_indec(int length, const LadderIndec& i, const CentralCharge& alpha);

/// Multiplicities from the HN types along every entry of charge_family(l),
/// in the same order. Throws InconsistencyError when no nestfree module fits.
LadderMultiset recover_ladder(int length, const std::vector<HNType>& hn_types);

struct InfeasibilityReport {
  std::vector<LadderIndec> smaller;
  std::vector<LadderIndec> larger;
  std::vector<bool> inclusions_valid;
  std::vector<LinearConstraint> inequalities;  // |I| mu(I') - |I'| mu(I) < 0, scaled
  std::vector<std::string> inequality_text;
  std::vector<long> combination;
  bool cancels = false;         // combination has zero coefficients and constant
  bool lp_infeasible = false;   // exact elimination finds no charge
  std::string summary() const;
};
InfeasibilityReport infeasibility_certificate();

/// The length-4 module with nested rows; needs a field with at least three
/// elements.
Representation fixture_v_lambda(long lambda, Field field = Field::F3());
/// First edge on which identity matrices fail to commute, if any.
std::optional<std::string> identity_morphism_failure(const Representation& v, const Representation& w);

}  // namespace hnq
