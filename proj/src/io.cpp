#include "hnq/io.hpp"

#include "hnq/error.hpp"

namespace hnq {

namespace {

Json rational_entry(const Rational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return format_rational(q);
}

Rational rational_entry_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw InputError("expected an integer or a rational string, got " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing JSON key '") + key + "'");
  return j.at(key);
}

Json endpoint_json(int x) { return x == LadderIndec::inf ? Json("inf") : Json(x); }
int endpoint_from(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return LadderIndec::inf;
  if (j.is_number_integer()) return j.get<int>();
  throw InputError("ladder endpoint must be an integer or \"inf\"");
}

Json dimvec_json(const DimensionVector& d, const Quiver& q) {
  Json out = Json::object();
  for (Vertex x = 0; x < q.vertex_count(); ++x) out[q.vertex_name(x)] = d.at(x);
  return out;
}

DimensionVector dimvec_from(const Json& j, const Quiver& q) {
  DimensionVector d(q.vertex_count(), 0);
  if (!j.is_object()) throw InputError("dimension vector must be an object keyed by vertex");
  for (const auto& [name, value] : j.items()) d[q.vertex(name)] = value.get<long>();
  return d;
}

}  // namespace

Json to_json(const Quiver& q) {
  Json out;
  out["vertices"] = q.vertex_names();
  Json edges = Json::array();
  for (const auto& e : q.edges())
    edges.push_back({{"src", q.vertex_name(e.source)}, {"tgt", q.vertex_name(e.target)}, {"label", e.label}});
  out["edges"] = edges;
  std::visit(
      [&](const auto& f) {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, TypeAFamily>)
          out["family"] = {{"kind", "typeA"}, {"orientation", f.orientation.to_string()}};
        else if constexpr (std::is_same_v<F, GridFamily>)
          out["family"] = {{"kind", "grid"}, {"shape", f.shape}};
        else if constexpr (std::is_same_v<F, LadderFamily>)
          out["family"] = {{"kind", "ladder"}, {"length", f.length}};
      },
      q.family());
  return out;
}

QuiverPtr quiver_from_json(const Json& j) {
  QuiverPtr built;
  if (j.contains("family")) {
    const Json& f = j.at("family");
    const std::string kind = member(f, "kind").get<std::string>();
    if (kind == "typeA") built = build_type_a(Orientation::parse(member(f, "orientation").get<std::string>()));
    else if (kind == "grid") built = build_grid(member(f, "shape").get<std::vector<int>>());
    else if (kind == "ladder") built = build_ladder(member(f, "length").get<int>());
    else throw InputError("unknown quiver family '" + kind + "'");
    if (!j.contains("vertices")) return built;
  }
  auto names = member(j, "vertices").get<std::vector<std::string>>();
  std::map<std::string, Vertex> index;
  for (Vertex v = 0; v < names.size(); ++v) index[names[v]] = v;
  std::vector<Edge> edges;
  for (const auto& e : member(j, "edges")) {
    auto src = index.find(member(e, "src").get<std::string>());
    auto tgt = index.find(member(e, "tgt").get<std::string>());
    if (src == index.end() || tgt == index.end()) throw InputError("edge references an unknown vertex: " + e.dump());
    edges.push_back({src->second, tgt->second, member(e, "label").get<std::string>()});
  }
  if (built) {
    Quiver listed(names, edges);
    if (!(listed == *built)) throw InputError("quiver family does not match the listed vertices and edges");
    return built;
  }
  return std::make_shared<const Quiver>(std::move(names), std::move(edges));
}

Json to_json(const Representation& v) {
  const Quiver& q = v.quiver();
  Json out;
  out["quiver"] = to_json(q);
  out["field"] = v.field().name();
  out["spaces"] = dimvec_json(v.dimension_vector(), q);
  Json maps = Json::object();
  for (std::size_t e = 0; e < q.edge_count(); ++e) {
    const auto& m = v.map(e);
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(rational_entry(m(i, k)));
      rows.push_back(row);
    }
    maps[q.edge(e).label] = rows;
  }
  out["maps"] = maps;
  return out;
}

Representation representation_from_json(const Json& j) {
  QuiverPtr q = quiver_from_json(member(j, "quiver"));
  Field field = Field::parse(member(j, "field").get<std::string>());
  DimensionVector dims = dimvec_from(member(j, "spaces"), *q);
  const Json& maps = member(j, "maps");
  if (!maps.is_object()) throw InputError("'maps' must be an object");
  for (const auto& [label, data] : maps.items())
    if (!q->find_edge(label)) throw InputError("map for unknown edge '" + label + "'");
  std::vector<RationalMatrix> out;
  for (const auto& e : q->edges()) {
    const auto rows = static_cast<std::size_t>(dims[e.target]);
    const auto cols = static_cast<std::size_t>(dims[e.source]);
    RationalMatrix m(rows, cols, Rational(0));
    if (maps.contains(e.label)) {
      const Json& data = maps.at(e.label);
      if (!data.is_array() || data.size() != rows)
        throw InputError("map '" + e.label + "' must have " + std::to_string(rows) + " rows");
      for (std::size_t i = 0; i < rows; ++i) {
        if (!data[i].is_array() || data[i].size() != cols)
          throw InputError("map '" + e.label + "' must have " + std::to_string(cols) + " columns");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_entry_from(data[i][k]);
      }
    } else if (rows * cols != 0) {
      throw InputError("missing map for edge '" + e.label + "'");
    }
    out.push_back(std::move(m));
  }
  return Representation(q, field, std::move(dims), std::move(out));
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw InputError("expected a scalar, got " + j.dump());
}

Json to_json(const CentralCharge& alpha, const Quiver& q) {
  Json out = Json::object();
  for (Vertex x = 0; x < q.vertex_count(); ++x) out[q.vertex_name(x)] = to_json(alpha[x]);
  return out;
}

CentralCharge charge_from_json(const Json& j, const Quiver& q) {
  std::vector<Scalar> values(q.vertex_count());
  if (j.is_array()) {
    if (j.size() != q.vertex_count()) throw InputError("charge has the wrong number of entries");
    for (std::size_t x = 0; x < j.size(); ++x) values[x] = scalar_from_json(j[x]);
    return CentralCharge(std::move(values));
  }
  if (!j.is_object()) throw InputError("charge must be an object keyed by vertex or an array");
  std::vector<bool> seen(q.vertex_count(), false);
  for (const auto& [name, value] : j.items()) {
    Vertex x = q.vertex(name);
    values[x] = scalar_from_json(value);
    seen[x] = true;
  }
  for (Vertex x = 0; x < q.vertex_count(); ++x)
    if (!seen[x]) throw InputError("charge has no value for vertex '" + q.vertex_name(x) + "'");
  return CentralCharge(std::move(values));
}

Json to_json(const HNType& hn, const Quiver& q) {
  Json out = Json::array();
  for (const auto& step : hn.steps()) out.push_back({{"slope", to_json(step.slope)}, {"dimvec", dimvec_json(step.dimvec, q)}});
  return out;
}

HNType hn_type_from_json(const Json& j, const Quiver& q) {
  std::vector<HNStep> steps;
  for (const auto& s : j) steps.push_back({scalar_from_json(member(s, "slope")), dimvec_from(member(s, "dimvec"), q)});
  return HNType(std::move(steps));
}

Json to_json(const Barcode& b) {
  Json out = Json::array();
  for (const auto& [i, m] : b.bars) out.push_back({{"a", i.a}, {"b", i.b}, {"mult", m}});
  return out;
}

Barcode barcode_from_json(const Json& j) {
  Barcode out;
  for (const auto& e : j) {
    Interval i{member(e, "a").get<int>(), member(e, "b").get<int>()};
    if (i.a > i.b || i.a < 0) throw InputError("invalid interval " + e.dump());
    out.add(i, e.value("mult", 1L));
  }
  return out;
}

Json to_json(const Rectangle& r) { return {{"lo", r.lo}, {"hi", r.hi}}; }

Rectangle rectangle_from_json(const Json& j) {
  return {member(j, "lo").get<std::vector<int>>(), member(j, "hi").get<std::vector<int>>()};
}

Json to_json(const RectangleMultiset& m) {
  Json out = Json::array();
  for (const auto& [r, k] : m.counts) out.push_back({{"lo", r.lo}, {"hi", r.hi}, {"mult", k}});
  return out;
}

RectangleMultiset rectangles_from_json(const Json& j) {
  RectangleMultiset out;
  for (const auto& e : j) out.add(rectangle_from_json(e), e.value("mult", 1L));
  return out;
}

Json to_json(const LadderIndec& i) {
  return {{"a", endpoint_json(i.a)}, {"b", endpoint_json(i.b)}, {"c", endpoint_json(i.c)}, {"d", endpoint_json(i.d)}};
}

LadderIndec ladder_indec_from_json(const Json& j) {
  return {endpoint_from(member(j, "a")), endpoint_from(member(j, "b")), endpoint_from(member(j, "c")),
          endpoint_from(member(j, "d"))};
}

Json to_json(const LadderMultiset& m) {
  Json out = Json::array();
  for (const auto& [i, k] : m.counts) {
    Json e = to_json(i);
    e["mult"] = k;
    out.push_back(e);
  }
  return out;
}

LadderMultiset ladder_multiset_from_json(const Json& j) {
  LadderMultiset out;
  for (const auto& e : j) out.add(ladder_indec_from_json(e), e.value("mult", 1L));
  return out;
}

Json charge_family_json(int length) {
  auto ladder = build_ladder(length);
  Json out = Json::array();
  for (const auto& e : charge_family(length)) {
    Json s = Json::array();
    for (Vertex x : e.s) s.push_back(ladder->vertex_name(x));
    Json levels = Json::array();
    for (const auto& l : e.levels) levels.push_back({{"k", l.k}, {"lambda", to_json(l.lambda)}});
    Json item;
    item["k"] = e.levels.size() == 1 ? Json(e.levels.front().k) : Json(nullptr);
    item["S"] = s;
    item["charge"] = to_json(e.charge, *ladder);
    item["lambda"] = levels;
    out.push_back(item);
  }
  return out;
}

Json to_json(const InfeasibilityReport& r) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < r.smaller.size(); ++i)
    pairs.push_back({{"smaller", r.smaller[i].to_string()},
                     {"larger", r.larger[i].to_string()},
                     {"inclusion_valid", static_cast<bool>(r.inclusions_valid[i])},
                     {"inequality", r.inequality_text[i]}});
  return {{"inequalities", pairs},
          {"combination", r.combination},
          {"cancels", r.cancels},
          {"lp_infeasible", r.lp_infeasible},
          {"summary", r.summary()}};
}

Json to_json(const SuiteReport& r) {
  Json counters = Json::object();
  for (const auto& [k, v] : r.counters) counters[k] = v;
  return {{"suite", r.name},     {"checks", r.checks}, {"violations", r.violations}, {"ok", r.ok()},
          {"counters", counters}, {"notes", r.notes},   {"failures", r.failures}};
}

}  // namespace hnq
