#include "hnq/grid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "hnq/error.hpp"

namespace hnq {

namespace {

const Shape& shape_of(const Quiver& q) {
  if (const auto* f = std::get_if<GridFamily>(&q.family())) return f->shape;
  throw InputError("expected a grid quiver");
}

void check_rectangle(const Shape& shape, const Rectangle& r) {
  if (r.lo.size() != shape.size() || r.hi.size() != shape.size())
    throw InputError("rectangle " + r.to_string() + " has the wrong dimension");
  for (std::size_t i = 0; i < shape.size(); ++i)
    if (r.lo[i] < 0 || r.lo[i] > r.hi[i] || r.hi[i] > shape[i])
      throw InputError("rectangle " + r.to_string() + " is not inside the grid");
}

std::size_t vertex_total(const Shape& shape) {
  std::size_t n = 1;
  for (int l : shape) n *= static_cast<std::size_t>(l + 1);
  return n;
}

std::string point_text(const std::vector<int>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

bool Rectangle::contains(const std::vector<int>& point) const {
  for (std::size_t i = 0; i < lo.size(); ++i)
    if (point[i] < lo[i] || point[i] > hi[i]) return false;
  return true;
}

long Rectangle::size() const {
  long n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) n *= hi[i] - lo[i] + 1;
  return n;
}

std::string Rectangle::to_string() const { return point_text(lo) + "-" + point_text(hi); }

void RectangleMultiset::add(const Rectangle& r, long multiplicity) {
  if (multiplicity < 0) throw InputError("negative multiplicity");
  if (multiplicity > 0) counts[r] += multiplicity;
}

long RectangleMultiset::total_dimension() const {
  long s = 0;
  for (const auto& [r, m] : counts) s += m * r.size();
  return s;
}

std::string RectangleMultiset::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [r, m] : counts) {
    os << (first ? "" : ", ") << r.to_string() << ":" << m;
    first = false;
  }
  os << "}";
  return os.str();
}

std::uint64_t rectangle_count(const Shape& shape) {
  std::uint64_t n = 1;
  for (int l : shape) n *= static_cast<std::uint64_t>(l + 1) * static_cast<std::uint64_t>(l + 2) / 2;
  return n;
}

std::vector<Rectangle> enumerate_rectangles(const Shape& shape, std::uint64_t guard) {
  if (rectangle_count(shape) > guard)
    throw SizeGuardError("grid has " + std::to_string(rectangle_count(shape)) + " rectangles, above the bound of " +
                         std::to_string(guard));
  std::vector<Rectangle> out{Rectangle{}};
  for (int l : shape) {
    std::vector<Rectangle> next;
    for (const auto& r : out)
      for (int a = 0; a <= l; ++a)
        for (int b = a; b <= l; ++b) {
          Rectangle s = r;
          s.lo.push_back(a);
          s.hi.push_back(b);
          next.push_back(std::move(s));
        }
    out = std::move(next);
  }
  return out;
}

VertexSet rectangle_support(const Shape& shape, const Rectangle& r) {
  check_rectangle(shape, r);
  const std::size_t n = vertex_total(shape);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (r.contains(grid_point(shape, v))) s.insert(v);
  return s;
}

Representation rectangle_module(const QuiverPtr& grid, const Rectangle& r, Field field) {
  return thin_module(grid, rectangle_support(shape_of(*grid), r), field);
}

DecomposedRepresentation from_rectangles(const QuiverPtr& grid, const RectangleMultiset& m, Field field) {
  std::vector<DecomposedRepresentation::Summand> summands;
  for (const auto& [r, k] : m.counts) summands.push_back({rectangle_module(grid, r, field), k});
  return assemble(grid, field, std::move(summands));
}

Scalar rectangle_slope(const CentralCharge& alpha, const Shape& shape, const Rectangle& r) {
  if (alpha.size() != vertex_total(shape)) throw InputError("charge size does not match the grid");
  Scalar s;
  for (Vertex v : rectangle_support(shape, r).members()) s += alpha[v];
  return s / Scalar(r.size());
}

HyperplaneCheck in_hyperplane_arrangement(const CentralCharge& alpha, const Shape& shape, std::uint64_t guard) {
  auto rects = enumerate_rectangles(shape, guard);
  std::vector<std::pair<Scalar, std::size_t>> slopes;
  for (std::size_t i = 0; i < rects.size(); ++i) slopes.emplace_back(rectangle_slope(alpha, shape, rects[i]), i);
  std::sort(slopes.begin(), slopes.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  for (std::size_t i = 1; i < slopes.size(); ++i)
    if (slopes[i].first == slopes[i - 1].first)
      return {true, std::make_pair(rects[slopes[i - 1].second], rects[slopes[i].second])};
  return {false, std::nullopt};
}

std::string to_string(GridVerdict v) {
  switch (v) {
    case GridVerdict::complete: return "complete";
    case GridVerdict::incomplete: return "incomplete";
    case GridVerdict::on_hyperplane: return "on_hyperplane";
  }
  return "unknown";
}

GridClassification classify_grid_charge(const CentralCharge& alpha, const Shape& shape, std::uint64_t guard) {
  if (alpha.size() != vertex_total(shape)) throw InputError("charge size does not match the grid");
  auto h = in_hyperplane_arrangement(alpha, shape, guard);
  if (h.on_hyperplane) {
    return {GridVerdict::on_hyperplane,
            "rectangles " + h.witness->first.to_string() + " and " + h.witness->second.to_string() +
                " share the slope " + rectangle_slope(alpha, shape, h.witness->first).to_string(),
            h.witness};
  }
  QuiverPtr q = build_grid(shape);
  for (const Edge& e : q->edges())
    if (!(alpha[e.source] > alpha[e.target]))
      return {GridVerdict::incomplete,
              "charge does not decrease along " + point_text(grid_point(shape, e.source)) + "->" +
                  point_text(grid_point(shape, e.target)),
              std::nullopt};
  return {GridVerdict::complete, "", std::nullopt};
}

GridVerdict is_complete_grid_charge(const CentralCharge& alpha, const Shape& shape) {
  return classify_grid_charge(alpha, shape).verdict;
}

CentralCharge generic_descending_charge(const Shape& shape, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> weight(1, 5);
  std::uniform_int_distribution<int> jitter(-24, 24);
  const std::size_t n = vertex_total(shape);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<int> w;
    for (std::size_t i = 0; i < shape.size(); ++i) w.push_back(weight(rng));
    std::vector<Scalar> values;
    for (Vertex v = 0; v < n; ++v) {
      auto p = grid_point(shape, v);
      long s = 0;
      for (std::size_t i = 0; i < p.size(); ++i) s -= 100L * w[i] * p[i];
      values.emplace_back(make_rational(s + jitter(rng), 100));
    }
    CentralCharge alpha(std::move(values));
    if (classify_grid_charge(alpha, shape).verdict == GridVerdict::complete) return alpha;
  }
  throw InternalError("could not find a generic descending charge");
}

std::string FlowNetwork::dump() const {
  std::ostringstream os;
  for (const auto& a : arcs)
    os << node_names[a.from] << " -> " << node_names[a.to] << " : " << (a.capacity ? a.capacity->to_string() : "inf")
       << "\n";
  return os.str();
}

FlowNetwork build_flow_network(const Quiver& q, const VertexSet& up_set) {
  if (up_set.universe() != q.vertex_count()) throw InputError("vertex set does not match the quiver");
  if (!is_up_closed(q, up_set)) throw InputError("vertex set is not up-closed");
  const std::size_t m = up_set.size();
  const std::size_t n = q.vertex_count() - m;
  if (m == 0 || n == 0) throw InputError("up-closed set must be nonempty and proper");
  FlowNetwork net;
  std::vector<Vertex> d_nodes, u_nodes;
  for (Vertex x = 0; x < q.vertex_count(); ++x) (up_set.contains(x) ? u_nodes : d_nodes).push_back(x);
  auto add_node = [&](const std::string& name) {
    net.node_names.push_back(name);
    return net.node_count++;
  };
  std::vector<std::size_t> d_id, u_id;
  for (Vertex x : d_nodes) d_id.push_back(add_node("d:" + q.vertex_name(x)));
  for (Vertex x : u_nodes) u_id.push_back(add_node("u:" + q.vertex_name(x)));
  const Scalar in_cap(make_rational(1, static_cast<long>(n)));
  const Scalar out_cap(make_rational(1, static_cast<long>(m)));
  for (std::size_t i = 0; i < d_nodes.size(); ++i) net.arcs.push_back({FlowNetwork::source, d_id[i], in_cap});
  for (std::size_t i = 0; i < d_nodes.size(); ++i)
    for (std::size_t j = 0; j < u_nodes.size(); ++j)
      if (q.leq(d_nodes[i], u_nodes[j])) net.arcs.push_back({d_id[i], u_id[j], std::nullopt});
  for (std::size_t j = 0; j < u_nodes.size(); ++j) net.arcs.push_back({u_id[j], FlowNetwork::sink, out_cap});
  return net;
}

Scalar max_flow(const FlowNetwork& net) {
  if (net.arcs.empty()) throw InputError("flow network has no arcs");
  const std::size_t na = net.arcs.size();
  std::vector<Scalar> flow(na);
  std::vector<std::vector<std::size_t>> incident(net.node_count);
  for (std::size_t i = 0; i < na; ++i) {
    incident[net.arcs[i].from].push_back(i);
    incident[net.arcs[i].to].push_back(i);
  }
  Scalar value;
  for (;;) {
    // BFS in the residual graph; parent stores (arc, forward?).
    std::vector<std::optional<std::pair<std::size_t, bool>>> parent(net.node_count);
    std::vector<bool> seen(net.node_count, false);
    seen[FlowNetwork::source] = true;
    std::deque<std::size_t> queue{FlowNetwork::source};
    while (!queue.empty() && !seen[FlowNetwork::sink]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t i : incident[x]) {
        const auto& arc = net.arcs[i];
        if (arc.from == x && !seen[arc.to] && (!arc.capacity || flow[i] < *arc.capacity)) {
          seen[arc.to] = true;
          parent[arc.to] = std::make_pair(i, true);
          queue.push_back(arc.to);
        } else if (arc.to == x && !seen[arc.from] && flow[i].sign() > 0) {
          seen[arc.from] = true;
          parent[arc.from] = std::make_pair(i, false);
          queue.push_back(arc.from);
        }
      }
    }
    if (!seen[FlowNetwork::sink]) break;
    std::optional<Scalar> bottleneck;
    for (std::size_t y = FlowNetwork::sink; y != FlowNetwork::source;) {
      auto [i, forward] = *parent[y];
      const auto& arc = net.arcs[i];
      std::optional<Scalar> r;
      if (forward) {
        if (arc.capacity) r = *arc.capacity - flow[i];
      } else {
        r = flow[i];
      }
      if (r && (!bottleneck || *r < *bottleneck)) bottleneck = r;
      y = forward ? arc.from : arc.to;
    }
    if (!bottleneck) throw InternalError("augmenting path of infinite capacity");
    for (std::size_t y = FlowNetwork::sink; y != FlowNetwork::source;) {
      auto [i, forward] = *parent[y];
      if (forward) flow[i] += *bottleneck;
      else flow[i] -= *bottleneck;
      y = forward ? net.arcs[i].from : net.arcs[i].to;
    }
    value += *bottleneck;
  }
  return value;
}

Scalar min_cut_bruteforce(const FlowNetwork& net, std::size_t max_finite_arcs) {
  if (net.node_count > 64) throw SizeGuardError("min-cut enumeration supports at most 64 nodes");
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < net.arcs.size(); ++i)
    if (net.arcs[i].capacity) finite.push_back(i);
  if (finite.size() > max_finite_arcs)
    throw SizeGuardError("min-cut enumeration refused: " + std::to_string(finite.size()) + " finite arcs");
  // Infinite arcs are never cut; they form a fixed part of the adjacency.
  std::vector<std::uint64_t> fixed(net.node_count, 0);
  for (const auto& arc : net.arcs)
    if (!arc.capacity) fixed[arc.from] |= std::uint64_t{1} << arc.to;
  auto separates = [&](std::uint64_t mask) {
    std::vector<std::uint64_t> adj = fixed;
    for (std::size_t k = 0; k < finite.size(); ++k)
      if (!((mask >> k) & 1u)) adj[net.arcs[finite[k]].from] |= std::uint64_t{1} << net.arcs[finite[k]].to;
    std::uint64_t seen = std::uint64_t{1} << FlowNetwork::source, frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctzll(f))];
      frontier = next & ~seen;
      seen |= next;
    }
    return !((seen >> FlowNetwork::sink) & 1u);
  };
  // Integer weights over a common denominator when every capacity is rational.
  bool rational = true;
  Rational lcd = 1;
  for (std::size_t i : finite) {
    const Scalar& c = *net.arcs[i].capacity;
    if (!c.is_rational()) rational = false;
    else lcd = lcm(lcd.get_num(), c.rational_part().get_den());
  }
  std::optional<Scalar> best;
  if (rational) {
    std::vector<mpz_class> w;
    for (std::size_t i : finite) w.emplace_back(Rational(net.arcs[i].capacity->rational_part() * lcd).get_num());
    std::optional<mpz_class> best_w;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << finite.size()); ++mask) {
      mpz_class cost = 0;
      for (std::size_t k = 0; k < finite.size(); ++k)
        if ((mask >> k) & 1u) cost += w[k];
      if (best_w && cost >= *best_w) continue;
      if (separates(mask)) best_w = cost;
    }
    if (best_w) best = Scalar(Rational(*best_w) / lcd);
  } else {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << finite.size()); ++mask) {
      Scalar cost;
      for (std::size_t k = 0; k < finite.size(); ++k)
        if ((mask >> k) & 1u) cost += *net.arcs[finite[k]].capacity;
      if (best && !(cost < *best)) continue;
      if (separates(mask)) best = cost;
    }
  }
  if (!best) throw InternalError("no finite cut separates the terminals");
  return *best;
}

bool lattice_inequality_check(const Quiver& q, const VertexSet& up_set, const VertexSet& a) {
  if (!is_up_closed(q, up_set)) throw InputError("U is not up-closed");
  if (!(a & up_set).empty()) throw InputError("A must lie outside U");
  const long d = static_cast<long>(q.vertex_count() - up_set.size());
  const long lhs = static_cast<long>(a.size()) * static_cast<long>(up_set.size());
  const long rhs = d * static_cast<long>((up_set & up_closure(q, a)).size());
  return lhs <= rhs;
}

RectangleMultiset recover_rectangles(const HNType& hn, const CentralCharge& alpha, const Shape& shape) {
  auto c = classify_grid_charge(alpha, shape);
  if (c.verdict != GridVerdict::complete)
    throw RefusalError("charge is " + to_string(c.verdict) + ": " + c.explanation);
  std::map<Scalar, Rectangle> by_slope;
  for (const auto& r : enumerate_rectangles(shape)) by_slope.emplace(rectangle_slope(alpha, shape, r), r);
  const std::size_t n = vertex_total(shape);
  RectangleMultiset out;
  for (const auto& step : hn.steps()) {
    auto it = by_slope.find(step.slope);
    if (it == by_slope.end())
      throw InconsistencyError("no rectangle has slope " + step.slope.to_string());
    VertexSet s = rectangle_support(shape, it->second);
    if (step.dimvec.size() != n) throw InputError("HN type does not match the grid");
    long m = step.dimvec[s.members().front()];
    for (Vertex v = 0; v < n; ++v)
      if (step.dimvec[v] != (s.contains(v) ? m : 0))
        throw InconsistencyError("dimension vector at slope " + step.slope.to_string() + " is not a multiple of " +
                                 it->second.to_string());
    out.add(it->second, m);
  }
  return out;
}

}  // namespace hnq
