#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hnq/hn.hpp"

namespace hnq {

using Shape = std::vector<int>;

/// Product of intervals [lo_i, hi_i].
struct Rectangle {
  std::vector<int> lo;
  std::vector<int> hi;

  bool contains(const std::vector<int>& point) const;
  long size() const;
  std::string to_string() const;
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

struct RectangleMultiset {
  std::map<Rectangle, long> counts;

  void add(const Rectangle& r, long multiplicity = 1);
  long total_dimension() const;
  std::string to_string() const;
  friend bool operator==(const RectangleMultiset&, const RectangleMultiset&) = default;
};

/// Number of rectangles in the grid of the given shape.
std::uint64_t rectangle_count(const Shape& shape);
/// Throws SizeGuardError above `guard` rectangles.
std::vector<Rectangle> enumerate_rectangles(const Shape& shape, std::uint64_t guard = 5000);

VertexSet rectangle_support(const Shape& shape, const Rectangle& r);
Representation rectangle_module(const QuiverPtr& grid, const Rectangle& r, Field field = Field::F2());
DecomposedRepresentation from_rectangles(const QuiverPtr& grid, const RectangleMultiset& m, Field field = Field::F2());
Scalar rectangle_slope(const CentralCharge& alpha, const Shape& shape, const Rectangle& r);

struct HyperplaneCheck {
  bool on_hyperplane = false;
  std::optional<std::pair<Rectangle, Rectangle>> witness;
};
/// Do two distinct rectangles have the same slope?
HyperplaneCheck in_hyperplane_arrangement(const CentralCharge& alpha, const Shape& shape,
                                          std::uint64_t guard = 5000);

enum class GridVerdict { complete, incomplete, on_hyperplane };
std::string to_string(GridVerdict v);

struct GridClassification {
  GridVerdict verdict = GridVerdict::incomplete;
  std::string explanation;
  std::optional<std::pair<Rectangle, Rectangle>> witness;
};
GridClassification classify_grid_charge(const CentralCharge& alpha, const Shape& shape, std::uint64_t guard = 5000);
GridVerdict is_complete_grid_charge(const CentralCharge& alpha, const Shape& shape);

/// Seeded charge that decreases along every edge and avoids the hyperplanes.
CentralCharge generic_descending_charge(const Shape& shape, std::uint64_t seed);

/// Flow network for an up-closed U: s* -> d (capacity 1/|D|), d -> u
/// (infinite) whenever d <= u, u -> t* (capacity 1/|U|), with D = Q0 \ U.
struct FlowNetwork {
  struct Arc {
    std::size_t from;
    std::size_t to;
    std::optional<Scalar> capacity;  // nullopt is +infinity
  };
  static constexpr std::size_t source = 0;
  static constexpr std::size_t sink = 1;

  std::size_t node_count = 2;
  std::vector<std::string> node_names{"s*", "t*"};
  std::vector<Arc> arcs;

  std::string dump() const;
};

FlowNetwork build_flow_network(const Quiver& q, const VertexSet& up_set);
/// Edmonds-Karp over exact scalars.
Scalar max_flow(const FlowNetwork& net);
/// Minimum total capacity of a set of finite arcs separating s* from t*.
/// Throws SizeGuardError with more than `max_finite_arcs` finite arcs.
Scalar min_cut_bruteforce(const FlowNetwork& net, std::size_t max_finite_arcs = 20);

/// |A| * |U| <= |D| * |U meet up(A)| for up-closed U and A inside D = Q0 \ U.
bool lattice_inequality_check(const Quiver& q, const VertexSet& up_set, const VertexSet& a);

/// Inverts the HN type along a complete grid charge.
RectangleMultiset recover_rectangles(const HNType& hn, const CentralCharge& alpha, const Shape& shape);

}  // namespace hnq
