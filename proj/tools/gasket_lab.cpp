#include <cstdlib>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "gasket/certificate.hpp"

using namespace gasket;

namespace {

constexpr int kDepthCap = 12;
constexpr int kChecksFailed = 1;
constexpr int kError = 2;

struct RunConfig {
  std::string input;
  std::vector<std::string> inputs;
  int depth = 3;
  double bound = 100.0;
  std::string root = "-1,2,2,3";
  std::string format = "json";
  std::string output;
  std::size_t max_vertices = 4;
  std::size_t max_arc_length = 16;
  unsigned threads = 0;
  bool deterministic = false;
  bool overlay = false;
};

// "bundled:<name>" selects a core shipped with the library.
Per2Core load_per2(const std::string& source) {
  if (source.rfind("bundled:", 0) == 0) return bundled_core(source.substr(8));
  return Per2Core::make(parse_core(read_file(source)));
}

CoreSpec load_spec(const std::string& source) {
  if (source.rfind("bundled:", 0) == 0) return bundled_core(source.substr(8)).spec;
  return parse_core(read_file(source));
}

Json load_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::SchemaError, path + ": " + e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    write_file(cfg.output, text);
  }
}

void emit(const RunConfig& cfg, const Json& doc) { emit(cfg, doc.dump(2) + "\n"); }

void check_depth(int depth) {
  if (depth < 1 || depth > kDepthCap) {
    throw Error(ErrorCode::LimitExceeded, "depth must lie in [1, " + std::to_string(kDepthCap) + "]");
  }
}

void check_format(const RunConfig& cfg, std::initializer_list<std::string_view> allowed) {
  for (auto f : allowed) {
    if (cfg.format == f) return;
  }
  throw Error(ErrorCode::SchemaError, "format '" + cfg.format + "' is not available for this command");
}

int run_validate(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  const CoreSpec spec = load_spec(cfg.input);
  const auto report = validate_core(spec);
  Json doc;
  doc["core"] = spec.name;
  doc["ok"] = report.ok();
  Json rules = Json::array();
  for (const auto& r : report.rules) {
    Json x{{"rule", std::string(to_string(r.rule))}, {"passed", r.passed}};
    if (!r.passed) x["code"] = std::string(to_string(r.code));
    if (!r.detail.empty()) x["detail"] = r.detail;
    rules.push_back(std::move(x));
  }
  doc["rules"] = std::move(rules);
  if (report.ok()) {
    const auto dyn = edge_dynamics(spec);
    doc["fixed_edge"] = {spec.g1.name(edge_lo(dyn.fixed_edge)), spec.g1.name(edge_hi(dyn.fixed_edge))};
    doc["max_absorption_steps"] = dyn.max_steps;
  }
  if (const auto* f = report.first_failure()) doc["error"] = std::string(to_string(f->code));
  emit(cfg, doc);
  return report.ok() ? 0 : kChecksFailed;
}

int run_iterate(const RunConfig& cfg) {
  check_format(cfg, {"json", "dot"});
  check_depth(cfg.depth);
  const GraphTower tower = build_tower(load_spec(cfg.input), cfg.depth);
  bool ok = true;
  Json checks = Json::array();
  for (int k = 1; k <= tower.depth(); ++k) {
    const auto c = verify_level(tower, k);
    ok = ok && c.ok();
    checks.push_back({{"level", k}, {"ok", c.ok()}, {"detail", c.detail}});
  }
  if (cfg.format == "dot") {
    emit(cfg, tower_to_dot(tower));
  } else {
    Json doc = tower_to_json(tower);
    doc["checks"] = std::move(checks);
    emit(cfg, doc);
  }
  return ok ? 0 : kChecksFailed;
}

bool certificate_passes(const Json& c) {
  const std::size_t l = c["l"].get<std::size_t>();
  bool ok = c["bipartite"].get<bool>() && c.value("classes_match_eventual_images", false) &&
            c["girth"] == Json(2 * l);
  for (const auto& lv : c["levels"]) ok = ok && lv["distance_a0_c"] == Json(l);
  for (const auto& s : c["siblings"]) ok = ok && s["matches"].get<bool>();
  if (c.contains("arcs")) {
    for (const auto& a : c["arcs"]) ok = ok && a["bound_holds"] != Json(false);
    for (const auto& s : c["symmetry"]) ok = ok && s["symmetric"] != Json(true);
  }
  return ok;
}

int run_certify(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  check_depth(cfg.depth);
  const Per2Core core = load_per2(cfg.input);
  Json doc = certify_core(core, {cfg.depth, cfg.max_arc_length, cfg.deterministic});
  const bool ok = certificate_passes(doc);
  doc["checks_passed"] = ok;
  emit(cfg, doc);
  return ok ? 0 : kChecksFailed;
}

int run_enumerate(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  const auto cores = enumerate_small_cores(cfg.max_vertices, cfg.threads);
  Json doc;
  doc["max_vertices"] = cfg.max_vertices;
  doc["count"] = cores.size();
  Json list = Json::array();
  for (const auto& c : cores) {
    list.push_back({{"name", c.name()},
                    {"type", std::string(to_string(classify_type(c)))},
                    {"l", critical_loop(c).l},
                    {"q", c.q},
                    {"g1_vertices", c.spec.g1.vertex_count()},
                    {"g0_edges", c.spec.g0.edge_count()},
                    {"canonical_g0", c.canonical},
                    {"form", canonical_form(c.spec)},
                    {"core", core_to_json(c.spec)}});
  }
  doc["cores"] = std::move(list);
  emit(cfg, doc);
  return 0;
}

std::array<double, 4> parse_root(const std::string& text) {
  std::array<double, 4> k{};
  std::stringstream in(text);
  std::string item;
  std::size_t n = 0;
  while (std::getline(in, item, ',')) {
    if (n == 4) throw Error(ErrorCode::InvalidRoot, "root needs exactly four curvatures");
    try {
      std::size_t used = 0;
      k[n] = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidRoot, "bad curvature '" + item + "'");
    }
    ++n;
  }
  if (n != 4) throw Error(ErrorCode::InvalidRoot, "root needs exactly four curvatures");
  return k;
}

int run_apollonian(const RunConfig& cfg) {
  check_format(cfg, {"json", "svg", "dot"});
  const auto packing = generate_apollonian(parse_root(cfg.root), cfg.bound);
  if (cfg.format == "svg") {
    emit(cfg, packing_to_svg(packing, cfg.overlay));
    return 0;
  }
  if (cfg.format == "dot") {
    const auto cert = contact_graph_of_packing(packing);
    DotStyle style;
    if (cert.triangle) style.highlight = edge_key((*cert.triangle)[0], (*cert.triangle)[1]);
    emit(cfg, to_dot(cert.graph, style, "contact"));
    return 0;
  }
  Json doc;
  doc["certificate"] = certify_packing(packing, cfg.deterministic);
  doc["packing"] = packing_to_json(packing);
  const bool ok = !doc["certificate"]["bipartite"].get<bool>() && doc["certificate"]["interiors_disjoint"].get<bool>();
  emit(cfg, doc);
  return ok ? 0 : kChecksFailed;
}

int run_compare(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  Json a = load_json(cfg.inputs.at(0)), b = load_json(cfg.inputs.at(1));
  // Packing runs wrap their certificate.
  if (b.contains("certificate")) b = b["certificate"];
  if (a.contains("certificate")) a = a["certificate"];
  if (a.value("kind", "") == "packing") std::swap(a, b);
  emit(cfg, compare_certificates(a, b));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fatou graph towers, anchored-cycle certificates and Apollonian packings"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("GASKET_LAB_THREADS")) {
    try {
      cfg.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      cfg.threads = 0;
    }
  }
  app.add_option("--format", cfg.format, "json | dot | svg")->check(CLI::IsMember({"json", "dot", "svg"}));
  app.add_option("-o,--output", cfg.output, "write to this file instead of stdout");
  app.add_flag("--deterministic", cfg.deterministic, "omit timestamps");
  app.add_option("--threads", cfg.threads, "worker cap (default GASKET_LAB_THREADS or all cores)");

  auto* validate = app.add_subcommand("validate", "check a core against the covering rules");
  validate->add_option("core", cfg.input, "core JSON or bundled:<name>")->required();

  auto* iterate = app.add_subcommand("iterate", "build the tower G^0 ... G^k");
  iterate->add_option("core", cfg.input, "core JSON or bundled:<name>")->required();
  iterate->add_option("--depth", cfg.depth, "tower depth");

  auto* certify = app.add_subcommand("certify", "full certificate for a Per2 core");
  certify->add_option("core", cfg.input, "core JSON or bundled:<name>")->required();
  certify->add_option("--depth", cfg.depth, "tower depth");
  certify->add_option("--max-arc-length", cfg.max_arc_length, "search bound for R0 arcs");

  auto* enumerate = app.add_subcommand("enumerate-cores", "all small Per2 cores up to isomorphism");
  enumerate->add_option("--max-vertices", cfg.max_vertices, "bound on |V(G1)|, at most 12");

  auto* apollonian = app.add_subcommand("apollonian", "Apollonian packing and contact graph certificate");
  apollonian->add_option("--root", cfg.root, "four curvatures, e.g. -1,2,2,3");
  apollonian->add_option("--bound", cfg.bound, "curvature bound");
  apollonian->add_flag("--overlay", cfg.overlay, "draw contacts in SVG output");

  auto* compare = app.add_subcommand("compare", "compare a core certificate with a packing certificate");
  compare->add_option("certificates", cfg.inputs, "core and packing certificate JSON")->required()->expected(2);

  for (auto* sub : {validate, iterate, certify, enumerate, apollonian, compare}) {
    sub->add_option("--format", cfg.format, "json | dot | svg")->check(CLI::IsMember({"json", "dot", "svg"}));
    sub->add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    sub->add_flag("--deterministic", cfg.deterministic, "omit timestamps");
    sub->add_option("--threads", cfg.threads, "worker cap");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << Json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return kError;
  }

  try {
    if (*validate) return run_validate(cfg);
    if (*iterate) return run_iterate(cfg);
    if (*certify) return run_certify(cfg);
    if (*enumerate) return run_enumerate(cfg);
    if (*apollonian) return run_apollonian(cfg);
    if (*compare) return run_compare(cfg);
  } catch (const Error& e) {
    std::cerr << Json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
    return kError;
  }
  return kError;
}
