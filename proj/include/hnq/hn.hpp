#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnq/representation.hpp"
#include "hnq/scalar.hpp"

namespace hnq {

/// Standard stability condition given by one real value per vertex.
struct CentralCharge {
  std::vector<Scalar> values;

  CentralCharge() = default;
  explicit CentralCharge(std::vector<Scalar> v) : values(std::move(v)) {}

  static CentralCharge skyscraper(const Quiver& q, Vertex x);
  static CentralCharge constant(const Quiver& q, const Scalar& c);
  /// alpha(x) = length of the longest path from x to a sink; strictly
  /// decreasing along every edge.
  static CentralCharge descending(const Quiver& q);

  std::size_t size() const { return values.size(); }
  const Scalar& operator[](Vertex x) const { return values.at(x); }
  CentralCharge shifted(const Scalar& c) const;
  bool is_rational() const;

  friend bool operator==(const CentralCharge&, const CentralCharge&) = default;
};

/// sum alpha(x) dim_x / sum dim_x. Throws ArithmeticError for the zero vector.
Scalar slope(const DimensionVector& d, const CentralCharge& alpha);
Scalar slope(const Representation& v, const CentralCharge& alpha);

struct HNStep {
  Scalar slope;
  DimensionVector dimvec;
  friend bool operator==(const HNStep&, const HNStep&) = default;
};

/// Slopes strictly decreasing, dimension vectors nonzero. The zero
/// representation has the empty type.
class HNType {
 public:
  HNType() = default;
  /// Validates the invariants; throws InputError otherwise.
  explicit HNType(std::vector<HNStep> steps);

  const std::vector<HNStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }

  /// The function form: dimension vector at `mu`, or zeros.
  DimensionVector value_at(const Scalar& mu, std::size_t vertex_count) const;
  DimensionVector total(std::size_t vertex_count) const;

  /// Slopewise sum (the HN type of a direct sum).
  friend HNType operator+(const HNType& a, const HNType& b);
  friend HNType operator*(long k, const HNType& a);
  friend bool operator==(const HNType&, const HNType&) = default;

  std::string to_string(const Quiver& q) const;

 private:
  std::vector<HNStep> steps_;
};

/// 0 = V^0 < V^1 < ... < V^n = V.
struct HNFiltration {
  std::vector<Subrepresentation> chain;
  HNType type(const CentralCharge& alpha) const;
};

enum class HnMethod { brute_force, thin, spanning, decomposed };
std::string to_string(HnMethod m);

struct HnOptions {
  long max_total_dimension = 10;          // brute-force enumeration guard
  std::uint64_t spanning_budget = 200000; // subspace tuples per spanning step
  bool allow_thin = true;
  bool allow_spanning = true;
};

struct HnResult {
  HNType type;
  HnMethod method;
};

/// Brute force over the subrepresentation lattice (F_p only).
bool is_semistable(const Representation& v, const CentralCharge& alpha, HnOptions options = {});
/// No proper nonzero subrepresentation of equal or larger slope.
bool is_stable(const Representation& v, const CentralCharge& alpha, HnOptions options = {});
/// The subrepresentation of maximal slope, then maximal dimension.
Subrepresentation max_destabilizing(const Representation& v, const CentralCharge& alpha,
                                    HnOptions options = {});
/// Brute-force filtration; every quotient is re-checked for semistability
/// and the slope chain for strict decrease (InternalError on failure).
HNFiltration hn_filtration(const Representation& v, const CentralCharge& alpha, HnOptions options = {});

/// Chooses the cheapest applicable path: thin, spanning (subspace tuples at
/// the vertices where alpha exceeds its minimum), then brute force.
HnResult hn_type(const Representation& v, const CentralCharge& alpha, HnOptions options = {});
/// Additive path over the recorded summands.
HnResult hn_type(const DecomposedRepresentation& v, const CentralCharge& alpha, HnOptions options = {});

HNType hn_type_brute_force(const Representation& v, const CentralCharge& alpha, HnOptions options = {});
HNFiltration hn_filtration_spanning(const Representation& v, const CentralCharge& alpha,
                                    HnOptions options = {});
HNType hn_type_spanning(const Representation& v, const CentralCharge& alpha, HnOptions options = {});

/// Support poset of a thin representation: the support and the edges that
/// carry nonzero maps.
struct ThinPoset {
  QuiverPtr quiver;
  VertexSet support;
  std::vector<std::pair<Vertex, Vertex>> arrows;
};
ThinPoset thin_poset(const Representation& v);
/// Subsets of the support closed under the arrows.
std::vector<VertexSet> up_closed_subsets(const ThinPoset& p);
HNType hn_type_thin(const ThinPoset& p, const CentralCharge& alpha);
HNType hn_type_thin(const Representation& v, const CentralCharge& alpha);

/// HN types along every skyscraper charge, indexed by vertex.
std::vector<HNType> skyscraper_invariant(const Representation& v, HnOptions options = {});

/// rho_V(x, y) from the HN type of V along delta_x.
long rank_from_hn(const HNType& hn, Vertex x, Vertex y, long dim_vx);

struct SkyscraperStructure {
  std::size_t n = 0;  // filtration length
  std::size_t j = 0;  // first index with V^j_x = V_x
  bool j_in_range = false;        // j in {n, n-1}
  bool steps_are_spanning = false; // V^k = <V^k_x> for k <= j
  bool top_is_spanning = false;    // V^j = <V_x>
};
SkyscraperStructure skyscraper_structure(const Representation& v, Vertex x, HnOptions options = {});

/// Two representations with equal HN types along alpha, built from an
/// indecomposable I that is not alpha-stable.
struct CounterexamplePair {
  Representation original;
  Representation split;
  long original_summands = 1;
  long split_summands = 2;
  bool semistable = false;  // true: equal-slope subobject; false: first HN step
};
std::optional<CounterexamplePair> completeness_counterexample(const Representation& indecomposable,
                                                             const CentralCharge& alpha,
                                                             HnOptions options = {});

struct FixturePair {
  Representation w;
  Representation w_prime;
};
/// The two grid-(1,1) modules with equal rank invariants and different
/// skyscraper invariants (dimensions 2,1,1,0 at bl, br, tl, tr).
FixturePair fixtures_ww(Field field = Field::F2());

}  // namespace hnq
