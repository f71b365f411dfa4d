// hnq: generate modules, compute HN types, classify charges, recover
// decompositions and run the property suites.
//
// Exit codes: 0 ok, 1 property violation or mismatch, 2 input error,
// 3 size-guard refusal.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hnq/error.hpp"
#include "hnq/io.hpp"
#include "hnq/random.hpp"

namespace {

using namespace hnq;

constexpr long kMaxGenBudget = 64;

struct Config {
  std::uint64_t seed = 1;
  std::string field = "F2";
  long budget = 0;
  std::string format = "json";
  std::string out;
};

struct Outcome {
  Json result;
  std::string table;
  int exit_code = 0;
};

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// A module file is either a representation or a gen bundle.
Representation read_module(const std::string& path) {
  Json j = read_json_file(path);
  if (j.contains("module")) j = j.at("module");
  return representation_from_json(j);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep))
    if (!item.empty()) out.push_back(item);
  return out;
}

Shape parse_shape(const std::string& text) {
  Shape out;
  for (const auto& part : split(text, ',')) {
    try {
      out.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw InputError("invalid shape '" + text + "'");
    }
  }
  if (out.empty()) throw InputError("empty shape");
  for (int l : out)
    if (l < 0) throw InputError("negative shape entry in '" + text + "'");
  return out;
}

/// Vertex by name; on two-dimensional grids also bl, br, tl, tr.
Vertex resolve_vertex(const Quiver& q, const std::string& name) {
  if (auto v = q.find_vertex(name)) return *v;
  if (const auto* g = std::get_if<GridFamily>(&q.family()); g && g->shape.size() == 2) {
    const int w = g->shape[0], h = g->shape[1];
    if (name == "bl") return grid_vertex(g->shape, {0, 0});
    if (name == "br") return grid_vertex(g->shape, {w, 0});
    if (name == "tl") return grid_vertex(g->shape, {0, h});
    if (name == "tr") return grid_vertex(g->shape, {w, h});
  }
  throw InputError("unknown vertex '" + name + "'");
}

/// Named charge, JSON file, or comma-separated scalars in vertex order.
CentralCharge resolve_charge(const std::string& spec, const Quiver& q) {
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "skyscraper") return CentralCharge::skyscraper(q, resolve_vertex(q, arg));
  if (head == "descending") return CentralCharge::descending(q);
  if (head == "constant") return CentralCharge::constant(q, Scalar::parse(arg));
  if (head == "generic-descending") {
    const auto* g = std::get_if<GridFamily>(&q.family());
    if (!g) throw InputError("generic-descending needs a grid quiver");
    return generic_descending_charge(g->shape, arg.empty() ? 1 : std::stoull(arg));
  }
  if (head == "complete") {
    const auto* a = std::get_if<TypeAFamily>(&q.family());
    if (!a) throw InputError("'complete' needs a type-A quiver");
    return complete_type_a_charge(a->orientation);
  }
  if (std::filesystem::exists(spec)) return charge_from_json(read_json_file(spec), q);
  std::vector<Scalar> values;
  for (const auto& part : split(spec, ',')) values.push_back(Scalar::parse(part));
  if (values.size() != q.vertex_count())
    throw InputError("charge '" + spec + "' has " + std::to_string(values.size()) + " values, expected " +
                     std::to_string(q.vertex_count()));
  return CentralCharge(std::move(values));
}

std::string charge_text(const CentralCharge& alpha, const Quiver& q) {
  std::string out;
  for (Vertex x = 0; x < q.vertex_count(); ++x)
    out += (x ? ", " : "") + q.vertex_name(x) + "=" + alpha[x].to_string();
  return out;
}

// ---- gen ----------------------------------------------------------------

struct GenArgs {
  std::string kind;
  std::string tau;
  std::string shape = "1,1";
  int length = 2;
  long lambda = 2;
  bool no_conjugate = false;
};

Outcome cmd_gen(const Config& cfg, const GenArgs& a) {
  const long budget = cfg.budget > 0 ? cfg.budget : 8;
  if (budget > kMaxGenBudget)
    throw SizeGuardError("generation budget " + std::to_string(budget) + " exceeds " + std::to_string(kMaxGenBudget));
  const Field field = Field::parse(cfg.field);
  Rng rng(cfg.seed);
  const std::uint64_t conj_seed = rng();
  Json truth;
  DecomposedRepresentation dec{Representation::zero(build_type_a(Orientation()), field), {}};
  std::string table;
  if (a.kind == "zigzag") {
    Orientation tau = a.tau.empty() ? random_orientation(rng, static_cast<std::size_t>(a.length))
                                    : Orientation::parse(a.tau);
    QuiverPtr q = build_type_a(tau);
    Barcode bars = random_barcode(rng, static_cast<int>(tau.length()), budget);
    dec = from_barcode(q, bars, field);
    truth = to_json(bars);
    table = "tau " + tau.to_string() + "\nbarcode " + bars.to_string() + "\n";
  } else if (a.kind == "grid-rect") {
    Shape shape = parse_shape(a.shape);
    QuiverPtr q = build_grid(shape);
    RectangleMultiset m = random_rectangles(rng, shape, budget);
    dec = from_rectangles(q, m, field);
    truth = to_json(m);
    table = "rectangles " + m.to_string() + "\n";
  } else if (a.kind == "ladder-nestfree") {
    if (a.length < 1) throw InputError("ladder length must be at least 1");
    QuiverPtr q = build_ladder(a.length);
    LadderMultiset m = random_nestfree(rng, a.length, budget);
    dec = from_ladder_multiset(q, m, field);
    truth = to_json(m);
    table = "ladder multiset " + m.to_string() + (is_nestfree(m) ? " (nestfree)" : "") + "\n";
  } else if (a.kind == "fixture-w" || a.kind == "fixture-w-prime") {
    auto f = fixtures_ww(field);
    Representation v = a.kind == "fixture-w" ? f.w : f.w_prime;
    dec = {v, {{v, 1}}};
    truth = nullptr;
    table = a.kind + "\n";
  } else if (a.kind == "nested-fixture") {
    Representation v = fixture_v_lambda(a.lambda, cfg.field == "F2" ? Field::F3() : field);
    dec = {v, {{v, 1}}};
    truth = nullptr;
    table = "V(" + std::to_string(a.lambda) + ") over " + v.field().name() + "\n";
  } else {
    throw InputError("unknown generator '" + a.kind + "'");
  }
  const bool fixed = truth.is_null();
  if (!a.no_conjugate && !fixed) dec = conjugate(dec, conj_seed);
  Outcome o;
  o.result = {{"kind", a.kind}, {"seed", cfg.seed}, {"conjugated", !a.no_conjugate && !fixed},
              {"module", to_json(dec.module)}, {"truth", truth}};
  o.table = table;
  return o;
}

// ---- hn -----------------------------------------------------------------

Outcome cmd_hn(const Config& cfg, const std::string& module_path, const std::string& charge_spec, bool filtration) {
  Representation v = read_module(module_path);
  CentralCharge alpha = resolve_charge(charge_spec, v.quiver());
  HnOptions opts;
  if (cfg.budget > 0) opts.max_total_dimension = cfg.budget;
  Outcome o;
  if (v.is_zero()) std::cerr << "warning: zero module, the HN type is empty\n";
  HnResult r = hn_type(v, alpha, opts);
  o.result = {{"charge", to_json(alpha, v.quiver())}, {"method", to_string(r.method)}, {"hn_type", to_json(r.type, v.quiver())}};
  o.table = "charge " + charge_text(alpha, v.quiver()) + "\nmethod " + to_string(r.method) + "\nHN type " +
            r.type.to_string(v.quiver()) + "\n";
  if (filtration && !v.is_zero()) {
    HNFiltration f = v.total_dimension() <= opts.max_total_dimension ? hn_filtration(v, alpha, opts)
                                                                     : hn_filtration_spanning(v, alpha, opts);
    Json chain = Json::array();
    for (const auto& sub : f.chain) {
      Json bases = Json::object();
      for (Vertex x = 0; x < v.quiver().vertex_count(); ++x) {
        Json rows = Json::array();
        const auto& b = sub.bases[x];
        for (std::size_t i = 0; i < b.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t k = 0; k < b.cols(); ++k) row.push_back(format_rational(b(i, k)));
          rows.push_back(row);
        }
        bases[v.quiver().vertex_name(x)] = rows;
      }
      chain.push_back(bases);
    }
    o.result["filtration"] = chain;
  }
  return o;
}

// ---- classify -----------------------------------------------------------

struct ClassifyArgs {
  std::string family;
  std::string tau;
  std::string shape = "1,1";
  int length = 4;
  std::string charge;
  long sweep = 0;
};

Outcome cmd_classify(const Config& cfg, const ClassifyArgs& a) {
  Outcome o;
  if (a.family == "ladder") {
    if (a.length < 1) throw InputError("ladder length must be at least 1");
    const long size = charge_family_size(a.length);
    Json result = {{"length", a.length}, {"family_size", size}, {"charge_family", charge_family_json(a.length)}};
    std::string table = "charge family A(" + std::to_string(a.length) + "): " + std::to_string(size) + " charges\n";
    if (a.length >= 4) {
      InfeasibilityReport rep = infeasibility_certificate();
      result["single_charge"] = "none";
      result["certificate"] = to_json(rep);
      table = "no single complete charge; |A(" + std::to_string(a.length) + ")|=" + std::to_string(size) + "\n" +
              rep.summary() + "\n";
    }
    o.result = result;
    o.table = table;
    return o;
  }
  QuiverPtr q;
  Orientation tau;
  Shape shape;
  if (a.family == "typeA") {
    if (a.tau.empty()) throw InputError("typeA needs --tau");
    tau = Orientation::parse(a.tau);
    q = build_type_a(tau);
  } else if (a.family == "grid") {
    shape = parse_shape(a.shape);
    q = build_grid(shape);
  } else {
    throw InputError("unknown family '" + a.family + "'");
  }
  auto classify = [&](const CentralCharge& alpha) -> std::pair<std::string, std::string> {
    if (a.family == "typeA") {
      TypeAVerdict v = classify_type_a(tau, alpha);
      return {v.complete ? "complete" : "incomplete", v.explanation};
    }
    GridClassification g = classify_grid_charge(alpha, shape);
    return {to_string(g.verdict), g.explanation};
  };
  std::vector<CentralCharge> charges;
  if (!a.charge.empty()) charges.push_back(resolve_charge(a.charge, *q));
  Rng rng(cfg.seed);
  for (long k = 0; k < a.sweep; ++k) charges.push_back(random_charge(rng, q->vertex_count()));
  if (charges.empty()) throw InputError("give --charge or --sweep N");
  Json verdicts = Json::array();
  std::map<std::string, long> counts;
  std::string table;
  for (const auto& alpha : charges) {
    auto [verdict, why] = classify(alpha);
    ++counts[verdict];
    verdicts.push_back({{"charge", to_json(alpha, *q)}, {"verdict", verdict}, {"explanation", why}});
    table += verdict + "  " + charge_text(alpha, *q) + (why.empty() ? "" : "  (" + why + ")") + "\n";
  }
  Json c = Json::object();
  for (const auto& [k, v] : counts) c[k] = v;
  o.result = {{"family", a.family}, {"counts", c}, {"verdicts", verdicts}};
  o.table = table;
  return o;
}

// ---- recover ------------------------------------------------------------

Outcome cmd_recover(const Config& cfg, const std::string& module_path, const std::string& charge_spec,
                    const std::string& truth_path) {
  Representation v = read_module(module_path);
  const Quiver& q = v.quiver();
  HnOptions opts;
  if (cfg.budget > 0) opts.max_total_dimension = cfg.budget;
  Json truth;
  if (!truth_path.empty()) {
    truth = read_json_file(truth_path);
    if (truth.is_object() && truth.contains("truth")) truth = truth.at("truth");
  }
  Outcome o;
  Json recovered;
  std::string text;
  bool match = true;
  if (const auto* a = std::get_if<TypeAFamily>(&q.family())) {
    CentralCharge alpha = charge_spec.empty() ? complete_type_a_charge(a->orientation) : resolve_charge(charge_spec, q);
    Barcode b = recover_barcode(hn_type(v, alpha, opts).type, a->orientation, alpha);
    recovered = to_json(b);
    text = "barcode " + b.to_string();
    if (!truth.is_null()) match = barcode_from_json(truth) == b;
  } else if (const auto* g = std::get_if<GridFamily>(&q.family())) {
    CentralCharge alpha = charge_spec.empty() ? generic_descending_charge(g->shape, 1) : resolve_charge(charge_spec, q);
    RectangleMultiset m = recover_rectangles(hn_type(v, alpha, opts).type, alpha, g->shape);
    recovered = to_json(m);
    text = "rectangles " + m.to_string();
    if (!truth.is_null()) match = rectangles_from_json(truth) == m;
  } else if (const auto* l = std::get_if<LadderFamily>(&q.family())) {
    if (!charge_spec.empty()) throw InputError("ladder recovery uses the fixed charge family; drop --charge");
    if (!is_nestfree(v)) throw RefusalError("module has nested row barcodes; recovery needs a nestfree module");
    std::vector<HNType> types;
    for (const auto& e : charge_family(l->length)) types.push_back(hn_type(v, e.charge, opts).type);
    LadderMultiset m = recover_ladder(l->length, types);
    recovered = to_json(m);
    text = "ladder multiset " + m.to_string();
    if (!truth.is_null()) match = ladder_multiset_from_json(truth) == m;
  } else {
    throw InputError("recovery needs a type-A, grid or ladder module");
  }
  o.result = {{"recovered", recovered}};
  o.table = text + "\n";
  if (!truth.is_null()) {
    o.result["match"] = match;
    o.table += std::string("match ") + (match ? "true" : "false") + "\n";
    if (!match) o.exit_code = 1;
  }
  return o;
}

// ---- verify -------------------------------------------------------------

Outcome cmd_verify(const Config& cfg, std::string suite, long count, int length) {
  if (suite == "kinser-oracle") suite = "type-a-oracle";
  SuiteOptions opts;
  opts.seed = cfg.seed;
  opts.count = count;
  opts.length = length;
  opts.budget = cfg.budget;
  opts.field = Field::parse(cfg.field);
  Json reports = Json::array();
  std::string table;
  bool ok = true;
  bool found = false;
  for (const auto& [name, fn] : suite_registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    SuiteReport r = fn(opts);
    ok = ok && r.ok();
    reports.push_back(to_json(r));
    table += name + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.violations) + " violations" +
             (r.ok() ? "" : "  FAILED") + "\n";
    for (const auto& n : r.notes) table += "  note: " + n + "\n";
    for (const auto& f : r.failures) table += "  counterexample: " + f + "\n";
  }
  if (!found) throw InputError("unknown suite '" + suite + "'");
  Outcome o;
  o.result = {{"ok", ok}, {"suites", reports}};
  o.table = table;
  o.exit_code = ok ? 0 : 1;
  return o;
}

void emit(const Config& cfg, const std::string& command, const Outcome& o, double seconds, bool raw) {
  std::string text;
  if (cfg.format == "table") {
    text = o.table;
  } else if (raw) {
    text = o.result.dump(2) + "\n";
  } else {
    Json report;
    report["command"] = command;
    report["config"] = {{"seed", cfg.seed}, {"field", cfg.field}, {"budget", cfg.budget}};
    report["result"] = o.result;
    report["elapsed_seconds"] = seconds;
    text = report.dump(2) + "\n";
  }
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.out);
  if (!out) throw InputError("cannot write '" + cfg.out + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HN types of quiver representations: generation, invariants, classification, recovery"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
  app.add_option("--field", cfg.field, "coefficient field")
      ->check(CLI::IsMember({"F2", "F3", "F5", "F7", "Q"}))
      ->capture_default_str();
  app.add_option("--budget", cfg.budget, "gen: total dimension; hn/recover: brute-force guard; verify: module size");
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--out", cfg.out, "output path (gen writes PATH.module.json and PATH.truth.json)");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a module with its ground-truth decomposition");
  g->add_option("kind", gen.kind, "zigzag | grid-rect | ladder-nestfree | fixture-w | fixture-w-prime | nested-fixture")
      ->required();
  g->add_option("--tau", gen.tau, "zigzag orientation as a 0/1 string");
  g->add_option("--shape", gen.shape, "grid shape, e.g. 2,2")->capture_default_str();
  g->add_option("--length", gen.length, "zigzag or ladder length")->capture_default_str();
  g->add_option("--lambda", gen.lambda, "scalar of the nested fixture")->capture_default_str();
  g->add_flag("--no-conjugate", gen.no_conjugate, "keep the block-diagonal basis");

  std::string module_path, charge_spec, truth_path;
  bool filtration = false;
  auto* h = app.add_subcommand("hn", "HN type along a central charge");
  h->add_option("module", module_path, "module JSON")->required();
  h->add_option("--charge", charge_spec,
                "skyscraper:<vertex> | descending | constant:<q> | generic-descending[:seed] | complete | file | a,b,..")
      ->required();
  h->add_flag("--filtration", filtration, "include the filtration bases");

  ClassifyArgs cls;
  auto* c = app.add_subcommand("classify", "completeness verdicts for central charges");
  c->add_option("family", cls.family, "typeA | grid | ladder")->required();
  c->add_option("--tau", cls.tau, "type-A orientation");
  c->add_option("--shape", cls.shape, "grid shape")->capture_default_str();
  c->add_option("--length", cls.length, "ladder length")->capture_default_str();
  c->add_option("--charge", cls.charge, "charge to classify");
  c->add_option("--sweep", cls.sweep, "number of seeded random charges to classify");

  std::string rec_module, rec_charge;
  auto* r = app.add_subcommand("recover", "recover the decomposition from HN types");
  r->add_option("module", rec_module, "module JSON")->required();
  r->add_option("--charge", rec_charge, "complete charge (default: a generated one)");
  r->add_option("--truth", truth_path, "ground truth to compare against");

  std::string suite;
  long count = 0;
  int length = 0;
  auto* v = app.add_subcommand("verify", "run a property suite");
  std::vector<std::string> names{"all", "kinser-oracle"};
  for (const auto& [name, fn] : suite_registry()) names.push_back(name);
  v->add_option("suite", suite, "suite name or all")->required()->check(CLI::IsMember(names));
  v->add_option("--count", count, "cases (0: suite default)");
  v->add_option("--length", length, "fix the zigzag or ladder length");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    Outcome o;
    std::string command;
    bool raw = false;
    if (*g) {
      command = "gen";
      o = cmd_gen(cfg, gen);
      if (!cfg.out.empty() && cfg.format == "json") {
        const std::string module_file = cfg.out + ".module.json", truth_file = cfg.out + ".truth.json";
        std::ofstream(module_file) << o.result.at("module").dump(2) << "\n";
        std::ofstream(truth_file) << o.result.at("truth").dump(2) << "\n";
        std::cout << module_file << "\n" << truth_file << "\n";
        return 0;
      }
      raw = true;
    } else if (*h) {
      command = "hn";
      o = cmd_hn(cfg, module_path, charge_spec, filtration);
    } else if (*c) {
      command = "classify";
      o = cmd_classify(cfg, cls);
    } else if (*r) {
      command = "recover";
      o = cmd_recover(cfg, rec_module, rec_charge, truth_path);
    } else {
      command = "verify";
      o = cmd_verify(cfg, suite, count, length);
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    emit(cfg, command, o, seconds, raw);
    return o.exit_code;
  } catch (const SizeGuardError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistent: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
