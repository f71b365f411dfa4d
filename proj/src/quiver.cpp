#include "hnq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hnq/error.hpp"

namespace hnq {

Orientation Orientation::parse(std::string_view text) {
  std::vector<bool> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') bits.push_back(true);
    else if (text[i] == '0') bits.push_back(false);
    else throw InputError("orientation must be a 0/1 string, got '" + std::string(text) + "'");
  }
  return Orientation(std::move(bits));
}

std::string Orientation::to_string() const {
  std::string out;
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

VertexSet::VertexSet(std::size_t universe, const std::vector<Vertex>& members)
    : mask_(universe, false) {
  for (Vertex v : members) mask_.at(v) = true;
}

std::size_t VertexSet::size() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), true));
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i]) out.push_back(i);
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < mask_.size(); ++i)
    if (mask_[i] && !other.mask_.at(i)) return false;
  return true;
}

VertexSet VertexSet::operator&(const VertexSet& other) const {
  VertexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] && other.mask_.at(i);
  return out;
}

VertexSet VertexSet::operator|(const VertexSet& other) const {
  VertexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = mask_[i] || other.mask_.at(i);
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(universe());
  for (std::size_t i = 0; i < mask_.size(); ++i) out.mask_[i] = !mask_[i];
  return out;
}

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Edge> edges, QuiverFamily family)
    : names_(std::move(vertex_names)), edges_(std::move(edges)), family_(std::move(family)) {
  const std::size_t n = names_.size();
  for (Vertex v = 0; v < n; ++v) {
    if (!index_.emplace(names_[v], v).second)
      throw InputError("duplicate vertex name '" + names_[v] + "'");
  }
  out_.assign(n, {});
  in_.assign(n, {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& edge = edges_[e];
    if (edge.source >= n || edge.target >= n)
      throw InputError("edge '" + edge.label + "' references a missing vertex");
    for (std::size_t f = 0; f < e; ++f)
      if (edges_[f].label == edge.label)
        throw InputError("duplicate edge label '" + edge.label + "'");
    out_[edge.source].push_back(e);
    in_[edge.target].push_back(e);
  }

  // Kahn's algorithm; ties broken by vertex index so the order is stable.
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& edge : edges_) ++indegree[edge.target];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  for (Vertex v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push(v);
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    topo_.push_back(v);
    for (std::size_t e : out_[v])
      if (--indegree[edges_[e].target] == 0) ready.push(edges_[e].target);
  }
  acyclic_ = topo_.size() == n;
  if (!acyclic_) {
    topo_.clear();
    return;
  }
  reach_.assign(n, std::vector<bool>(n, false));
  for (auto it = topo_.rbegin(); it != topo_.rend(); ++it) {
    Vertex v = *it;
    reach_[v][v] = true;
    for (std::size_t e : out_[v]) {
      const auto& succ = reach_[edges_[e].target];
      for (Vertex w = 0; w < n; ++w)
        if (succ[w]) reach_[v][w] = true;
    }
  }
}

std::optional<Vertex> Quiver::find_vertex(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Quiver::vertex(std::string_view name) const {
  auto v = find_vertex(name);
  if (!v) throw InputError("unknown vertex '" + std::string(name) + "'");
  return *v;
}

std::optional<std::size_t> Quiver::find_edge(std::string_view label) const {
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (edges_[e].label == label) return e;
  return std::nullopt;
}

const std::vector<Vertex>& Quiver::topological_order() const {
  if (!acyclic_) throw UnsupportedError("quiver has an oriented cycle");
  return topo_;
}

bool Quiver::leq(Vertex x, Vertex y) const {
  if (!acyclic_) throw UnsupportedError("flow order requires an acyclic quiver");
  return reach_.at(x).at(y);
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.names_ != b.names_ || a.edges_.size() != b.edges_.size()) return false;
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const Edge& x = a.edges_[e];
    const Edge& y = b.edges_[e];
    if (x.source != y.source || x.target != y.target || x.label != y.label) return false;
  }
  return true;
}

QuiverPtr build_type_a(const Orientation& orientation) {
  const std::size_t length = orientation.length();
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= length; ++i) names.push_back("x" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= length; ++i) {
    std::string label = "e" + std::to_string(i);
    if (orientation.forward(i)) edges.push_back({i - 1, i, label});
    else edges.push_back({i, i - 1, label});
  }
  return std::make_shared<const Quiver>(std::move(names), std::move(edges), TypeAFamily{orientation});
}

Vertex grid_vertex(const std::vector<int>& shape, const std::vector<int>& point) {
  if (point.size() != shape.size()) throw InputError("grid point has the wrong dimension");
  Vertex index = 0;
  Vertex stride = 1;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (point[i] < 0 || point[i] > shape[i]) throw InputError("grid point out of range");
    index += static_cast<Vertex>(point[i]) * stride;
    stride *= static_cast<Vertex>(shape[i] + 1);
  }
  return index;
}

std::vector<int> grid_point(const std::vector<int>& shape, Vertex v) {
  std::vector<int> point(shape.size());
  for (std::size_t i = 0; i < shape.size(); ++i) {
    const auto extent = static_cast<Vertex>(shape[i] + 1);
    point[i] = static_cast<int>(v % extent);
    v /= extent;
  }
  return point;
}

std::string grid_vertex_name(const std::vector<int>& point) {
  std::string name = "x_(";
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (i) name += ",";
    name += std::to_string(point[i]);
  }
  return name + ")";
}

namespace {

std::string point_text(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

QuiverPtr build_grid(const std::vector<int>& shape) {
  if (shape.empty()) throw InputError("grid shape must have at least one axis");
  std::size_t count = 1;
  for (int l : shape) {
    if (l < 1) throw InputError("grid side lengths must be positive");
    count *= static_cast<std::size_t>(l + 1);
  }
  std::vector<std::string> names;
  for (Vertex v = 0; v < count; ++v) names.push_back(grid_vertex_name(grid_point(shape, v)));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < count; ++v) {
    auto p = grid_point(shape, v);
    for (std::size_t axis = 0; axis < shape.size(); ++axis) {
      if (p[axis] == shape[axis]) continue;
      auto q = p;
      ++q[axis];
      edges.push_back({v, grid_vertex(shape, q), point_text(p) + "->" + point_text(q)});
    }
  }
  return std::make_shared<const Quiver>(std::move(names), std::move(edges), GridFamily{shape});
}

QuiverPtr build_ladder(int length) {
  if (length < 1) throw InputError("ladder length must be at least 1");
  std::vector<std::string> names;
  for (int i = 0; i <= length; ++i) names.push_back("x" + std::to_string(i) + "+");
  for (int i = 0; i <= length; ++i) names.push_back("x" + std::to_string(i) + "-");
  std::vector<Edge> edges;
  for (int i = 1; i <= length; ++i)
    edges.push_back({ladder_top(i - 1), ladder_top(i), "e" + std::to_string(i) + "+"});
  for (int i = 1; i <= length; ++i)
    edges.push_back({ladder_bottom(length, i - 1), ladder_bottom(length, i), "e" + std::to_string(i) + "-"});
  for (int i = 0; i <= length; ++i)
    edges.push_back({ladder_top(i), ladder_bottom(length, i), "e" + std::to_string(i)});
  return std::make_shared<const Quiver>(std::move(names), std::move(edges), LadderFamily{length});
}

std::optional<std::vector<std::vector<int>>> lattice_coordinates(const Quiver& q) {
  if (const auto* grid = std::get_if<GridFamily>(&q.family())) {
    std::vector<std::vector<int>> coords;
    for (Vertex v = 0; v < q.vertex_count(); ++v) coords.push_back(grid_point(grid->shape, v));
    return coords;
  }
  if (const auto* ladder = std::get_if<LadderFamily>(&q.family())) {
    std::vector<std::vector<int>> coords(q.vertex_count());
    for (int i = 0; i <= ladder->length; ++i) {
      coords[ladder_top(i)] = {i, 0};
      coords[ladder_bottom(ladder->length, i)] = {i, 1};
    }
    return coords;
  }
  return std::nullopt;
}

bool flow_leq(const Quiver& q, Vertex x, Vertex y) { return q.leq(x, y); }

bool is_up_closed(const Quiver& q, const VertexSet& s) {
  for (const auto& e : q.edges())
    if (s.contains(e.source) && !s.contains(e.target)) return false;
  return true;
}

VertexSet up_closure(const Quiver& q, const VertexSet& a) {
  if (!q.is_acyclic()) throw UnsupportedError("up-closure requires an acyclic quiver");
  VertexSet out = a;
  std::vector<Vertex> stack = a.members();
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (std::size_t e : q.out_edges(v)) {
      Vertex w = q.edge(e).target;
      if (!out.contains(w)) {
        out.insert(w);
        stack.push_back(w);
      }
    }
  }
  return out;
}

std::vector<VertexSet> enumerate_up_closed(const Quiver& q, UpClosedOptions options) {
  if (q.vertex_count() > options.max_vertices)
    throw SizeGuardError("up-closed enumeration refused: " + std::to_string(q.vertex_count()) +
                         " vertices exceeds the bound of " + std::to_string(options.max_vertices));
  const auto& topo = q.topological_order();
  // Decide vertices sinks-first; a vertex may join only when all of its
  // successors already have.
  std::vector<Vertex> order(topo.rbegin(), topo.rend());
  std::vector<VertexSet> result;
  VertexSet current(q.vertex_count());
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == order.size()) {
      result.push_back(current);
      return;
    }
    Vertex v = order[depth];
    recurse(depth + 1);
    bool allowed = true;
    for (std::size_t e : q.out_edges(v))
      if (!current.contains(q.edge(e).target)) allowed = false;
    if (allowed) {
      current.insert(v);
      recurse(depth + 1);
      current.erase(v);
    }
  };
  recurse(0);
  return result;
}

}  // namespace hnq
