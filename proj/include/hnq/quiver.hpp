#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace hnq {

using Vertex = std::size_t;

struct Edge {
  Vertex source;
  Vertex target;
  std::string label;
};

/// Orientation of a type-A quiver: bit i (1-based) set means the edge e_i
/// points x_{i-1} -> x_i, cleared means x_i -> x_{i-1}.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(std::vector<bool> bits) : bits_(std::move(bits)) {}

  static Orientation parse(std::string_view text);
  static Orientation equioriented(std::size_t length) {
    return Orientation(std::vector<bool>(length, true));
  }

  std::size_t length() const noexcept { return bits_.size(); }
  /// 1-based, as in the edge labels e_1..e_l.
  bool forward(std::size_t i) const { return bits_.at(i - 1); }
  std::string to_string() const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  std::vector<bool> bits_;
};

/// Subset of the vertices of a fixed quiver, stored as a membership mask.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : mask_(universe, false) {}
  VertexSet(std::size_t universe, const std::vector<Vertex>& members);

  static VertexSet all(std::size_t universe) {
    VertexSet s(universe);
    s.mask_.assign(universe, true);
    return s;
  }

  std::size_t universe() const noexcept { return mask_.size(); }
  bool contains(Vertex v) const { return mask_.at(v); }
  void insert(Vertex v) { mask_.at(v) = true; }
  void erase(Vertex v) { mask_.at(v) = false; }
  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<Vertex> members() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet operator&(const VertexSet& other) const;
  VertexSet operator|(const VertexSet& other) const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& x, const VertexSet& y) { return x.mask_ <=> y.mask_; }

 private:
  std::vector<bool> mask_;
};

struct TypeAFamily {
  Orientation orientation;
};
struct GridFamily {
  std::vector<int> shape;
};
struct LadderFamily {
  int length;
};
using QuiverFamily = std::variant<std::monostate, TypeAFamily, GridFamily, LadderFamily>;

/// Finite directed multigraph. Immutable after construction; the flow
/// order is precomputed when the quiver is acyclic.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertex_names, std::vector<Edge> edges,
         QuiverFamily family = {});

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::string>& vertex_names() const noexcept { return names_; }
  const std::string& vertex_name(Vertex v) const { return names_.at(v); }
  std::optional<Vertex> find_vertex(std::string_view name) const;
  /// Throws InputError for unknown names.
  Vertex vertex(std::string_view name) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  std::optional<std::size_t> find_edge(std::string_view label) const;
  const std::vector<std::size_t>& out_edges(Vertex v) const { return out_.at(v); }
  const std::vector<std::size_t>& in_edges(Vertex v) const { return in_.at(v); }

  const QuiverFamily& family() const noexcept { return family_; }

  bool is_acyclic() const noexcept { return acyclic_; }
  /// Sources first. Throws UnsupportedError on cyclic quivers.
  const std::vector<Vertex>& topological_order() const;
  /// Flow order: x <= y iff x == y or some path runs from x to y.
  bool leq(Vertex x, Vertex y) const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  QuiverFamily family_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::vector<std::vector<std::size_t>> out_, in_;
  bool acyclic_ = false;
  std::vector<Vertex> topo_;
  std::vector<std::vector<bool>> reach_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr build_type_a(const Orientation& orientation);
/// Vertices are ordered with the first coordinate varying fastest.
QuiverPtr build_grid(const std::vector<int>& shape);
/// Vertex order x0+..xl+, x0-..xl-; vertical arrows point from + to -.
QuiverPtr build_ladder(int length);

/// Ladder vertex helpers.
inline Vertex ladder_top(int i) { return static_cast<Vertex>(i); }
inline Vertex ladder_bottom(int length, int i) { return static_cast<Vertex>(length + 1 + i); }

/// Grid helpers (first coordinate fastest).
Vertex grid_vertex(const std::vector<int>& shape, const std::vector<int>& point);
std::vector<int> grid_point(const std::vector<int>& shape, Vertex v);
std::string grid_vertex_name(const std::vector<int>& point);

/// Coordinates realising the flow order as the product order, when the
/// quiver is a grid or a ladder (ladder + row is coordinate 0, - row 1).
std::optional<std::vector<std::vector<int>>> lattice_coordinates(const Quiver& q);

bool flow_leq(const Quiver& q, Vertex x, Vertex y);
bool is_up_closed(const Quiver& q, const VertexSet& s);
/// Smallest up-closed set containing `a`.
VertexSet up_closure(const Quiver& q, const VertexSet& a);

struct UpClosedOptions {
  std::size_t max_vertices = 20;
};

/// Every up-closed subset (including the empty set and all of Q0).
std::vector<VertexSet> enumerate_up_closed(const Quiver& q, UpClosedOptions options = {});

}  // namespace hnq
