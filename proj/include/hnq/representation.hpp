#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hnq/linalg.hpp"
#include "hnq/quiver.hpp"
#include "hnq/scalar.hpp"

namespace hnq {

/// Coefficient field of a representation: F_p for a small prime p, or Q.
struct Field {
  int characteristic = 2;  // 0 stands for Q

  static Field F2() { return {2}; }
  static Field F3() { return {3}; }
  static Field Q() { return {0}; }
  /// Accepts "F2", "F3", "F5", "F7" and "Q".
  static Field parse(std::string_view name);
  std::string name() const;
  bool is_finite() const { return characteristic > 0; }

  friend bool operator==(const Field&, const Field&) = default;
};

using DimensionVector = std::vector<long>;
using RationalMatrix = Matrix<Rational>;

long total(const DimensionVector& d);
DimensionVector operator+(const DimensionVector& a, const DimensionVector& b);
DimensionVector operator-(const DimensionVector& a, const DimensionVector& b);
DimensionVector operator*(long k, const DimensionVector& d);

/// Every problem with the given data, empty when it describes a valid
/// representation: vector lengths, matrix shapes (target x source) and
/// entries outside 0..p-1 for F_p.
std::vector<std::string> validate(const Quiver& q, Field field, const DimensionVector& dims,
                                  const std::vector<RationalMatrix>& maps);

/// Finite-dimensional representation. Edge maps are stored with rational
/// entries; for F_p they are integers in 0..p-1. Immutable.
class Representation {
 public:
  /// Throws InputError listing every diagnostic from validate().
  Representation(QuiverPtr quiver, Field field, DimensionVector dims,
                 std::vector<RationalMatrix> maps);

  static Representation zero(QuiverPtr quiver, Field field);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  Field field() const { return field_; }

  long dim(Vertex v) const { return dims_.at(v); }
  const DimensionVector& dimension_vector() const { return dims_; }
  long total_dimension() const { return total(dims_); }
  bool is_zero() const { return total_dimension() == 0; }
  bool is_thin() const;
  VertexSet support() const;

  const RationalMatrix& map(std::size_t edge) const { return maps_.at(edge); }
  const std::vector<RationalMatrix>& maps() const { return maps_; }

  friend bool operator==(const Representation& a, const Representation& b);

 private:
  QuiverPtr quiver_;
  Field field_;
  DimensionVector dims_;
  std::vector<RationalMatrix> maps_;
};

std::vector<std::string> validate(const Representation& v);

/// Per-vertex subspaces, each given by its RREF row basis.
struct Subrepresentation {
  std::vector<RationalMatrix> bases;

  DimensionVector dimension_vector() const;
  long total_dimension() const { return total(dimension_vector()); }
  friend bool operator==(const Subrepresentation&, const Subrepresentation&) = default;
};

Subrepresentation zero_subrep(const Representation& v);
Subrepresentation full_subrep(const Representation& v);
bool is_subrepresentation(const Representation& v, const Subrepresentation& u);
bool contains(const Representation& v, const Subrepresentation& big, const Subrepresentation& small);

Representation direct_sum(const Representation& v, const Representation& w);
Representation direct_sum(const std::vector<Representation>& parts, QuiverPtr quiver, Field field);

/// U as a representation in its own right (bases from the RREF rows).
Representation subrep_as_representation(const Representation& v, const Subrepresentation& u);
/// V/U, using the unit vectors at non-pivot columns as quotient basis.
Representation quotient(const Representation& v, const Subrepresentation& u);

/// All parallel path composites agree. Exact: composites from each vertex
/// are propagated in topological order and compared at every merge.
bool is_equalised(const Representation& v);
/// Composite of the edge maps along any path x -> y (requires x <= y; only
/// meaningful for equalised representations).
RationalMatrix path_composite(const Representation& v, Vertex x, Vertex y);

/// Smallest subrepresentation containing V_x for every x in S.
Subrepresentation spanning_subrep(const Representation& v, const VertexSet& s);
/// Smallest subrepresentation containing the given per-vertex subspaces.
Subrepresentation generated_subrep(const Representation& v, const std::vector<RationalMatrix>& seeds);
/// dim <V_x>_y.
long generalized_rank(const Representation& v, Vertex x, Vertex y);

struct EnumerationOptions {
  long max_total_dimension = 10;
};

/// Every subrepresentation (0 and V included). F_p only.
std::vector<Subrepresentation> enumerate_subreps(const Representation& v,
                                                 EnumerationOptions options = {});

/// Isomorphic copy after a seeded random basis change at every vertex.
Representation conjugate(const Representation& v, std::uint64_t seed);

/// Supports of the subrepresentations of a thin representation: subsets of
/// the support closed under the nonzero edge maps.
std::vector<VertexSet> thin_subrep_supports(const Representation& v);

/// Module with a copy of the field at every vertex of `support` and the
/// identity on every edge inside it (zero maps elsewhere).
Representation thin_module(QuiverPtr quiver, const VertexSet& support, Field field);

/// Thin subrepresentation with the given support (caller ensures closure).
Subrepresentation thin_subrep(const Representation& v, const VertexSet& support);

/// A representation together with the summands it was assembled from. The
/// summands are ground truth kept for test harnesses and the additive HN
/// path; `module` may be conjugated.
struct DecomposedRepresentation {
  struct Summand {
    Representation rep;
    long multiplicity;
  };

  Representation module;
  std::vector<Summand> summands;
};

DecomposedRepresentation assemble(QuiverPtr quiver, Field field,
                                  std::vector<DecomposedRepresentation::Summand> summands);
DecomposedRepresentation conjugate(const DecomposedRepresentation& v, std::uint64_t seed);

}  // namespace hnq
