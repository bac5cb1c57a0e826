#include "gasket/certificate.hpp"

#include <chrono>
#include <ctime>

namespace gasket {

namespace {

std::string timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json names(const PlaneGraph& g, std::span<const VertexId> vs) {
  Json out = Json::array();
  for (VertexId v : vs) out.push_back(g.name(v));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

}  // namespace

Json certify_core(const Per2Core& core, const CertifyOptions& options) {
  if (options.depth < 1) throw Error(ErrorCode::LimitExceeded, "depth must be at least 1");
  const GasketType type = classify_type(core);
  const auto loop = critical_loop(core);
  const int depth = options.depth;
  // One extra level lets arcs at the requested depth be lifted.
  const GraphTower tower = build_tower(core.spec, type == GasketType::I ? depth + 1 : depth);
  const PlaneGraph& top = tower.level(depth);

  Json doc;
  doc["kind"] = "core";
  doc["core"] = core.name();
  doc["depth"] = depth;
  doc["type"] = std::string(to_string(type));
  doc["l"] = loop.l;
  doc["q"] = core.q;
  doc["canonical_g0"] = core.canonical;
  doc["critical_loop"] = names(core.spec.g1, loop.cycle.vertices);
  doc["fixed_edge"] = {core.spec.g1.name(core.a0), core.spec.g1.name(core.b0)};

  const auto g = girth(top);
  doc["girth"] = optional_json(g);
  const auto bip = is_bipartite(top);
  doc["bipartite"] = bip.bipartite;
  if (bip.bipartite) {
    const auto part = eventual_partition(tower, depth);
    std::vector<VertexId> ua, ub;
    bool agrees = true;
    for (VertexId v = 0; v < top.vertex_count(); ++v) {
      (part[v] == 0 ? ua : ub).push_back(v);
      agrees = agrees && (bip.color[v] ^ bip.color[core.a0]) == part[v];
    }
    doc["bipartite_classes"] = {{"a", names(top, ua)}, {"b", names(top, ub)}};
    doc["classes_match_eventual_images"] = agrees;
  } else {
    doc["odd_cycle"] = names(top, bip.odd_cycle);
  }

  Json levels = Json::array(), siblings = Json::array(), arcs = Json::array(), symmetry = Json::array();
  std::optional<bool> last_symmetry;
  bool symmetry_changed = false;
  std::optional<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> last_arcs;
  for (int k = 1; k <= depth; ++k) {
    const PlaneGraph& gk = tower.level(k);
    const auto s = shortest_anchored_cycles(tower, core, k);
    Json lv;
    lv["level"] = k;
    lv["vertices"] = gk.vertex_count();
    lv["edges"] = gk.edge_count();
    lv["faces"] = gk.face_count();
    lv["anchored_cycles"] = s.cycles.size();
    lv["sibling_pairs"] = s.siblings.size();
    lv["distance_a0_c"] = graph_distance(gk, core.a0, core.c);
    lv["max_iterations_to_loop"] = s.cycles.empty() ? 0 : s.cycles.back().iteration;
    levels.push_back(std::move(lv));

    if (k >= 3) {
      const auto r = sibling_report(s, type);
      Json sr;
      sr["level"] = k;
      sr["matches"] = r.matches;
      sr["expected"] = r.expected;
      sr["observed"] = r.observed;
      sr["resolved"] = r.resolved.size();
      sr["boundary"] = r.boundary.size();
      if (r.counterexample) {
        Json pair = Json::array();
        for (std::size_t i : {r.counterexample->first, r.counterexample->second}) {
          pair.push_back(names(gk, s.cycles[i].cycle.vertices));
        }
        sr["counterexample"] = std::move(pair);
      }
      siblings.push_back(std::move(sr));
    }

    if (type != GasketType::I) continue;
    Json sym;
    sym["level"] = k;
    if (s.cycles.size() < 2) {
      sym["symmetric"] = nullptr;
      sym["caveat"] = "R0 is not formed yet; only the critical loop exists";
      symmetry.push_back(std::move(sym));
      continue;
    }
    const auto gaps = gap_decomposition(tower, s);
    const auto v = gap_symmetry_test(tower, s, gaps);
    sym["symmetric"] = v.symmetric;
    sym["disk_vertices"] = v.disk_vertices;
    sym["interior_vertices"] = v.interior_vertices;
    if (v.trivial) sym["caveat"] = "no interior vertices; boundary arcs alone decide";
    if (last_symmetry && *last_symmetry != v.symmetric) symmetry_changed = true;
    last_symmetry = v.symmetric;
    symmetry.push_back(std::move(sym));

    auto ar = r0_arc_search(tower, s, gaps, options.max_arc_length);
    ar.stabilized = ar.n && ar.k && last_arcs && last_arcs->first == ar.n && last_arcs->second == ar.k;
    last_arcs = std::pair(ar.n, ar.k);
    Json aj;
    aj["level"] = k;
    aj["N"] = optional_json(ar.n);
    aj["K"] = optional_json(ar.k);
    aj["bound_holds"] = optional_json(ar.bound_holds);
    aj["stabilized"] = ar.stabilized;
    if (ar.n) aj["n_witness"] = names(gk, ar.n_witness);
    if (ar.k) aj["k_witness"] = names(gk, ar.k_witness);
    if (!ar.note.empty()) aj["note"] = ar.note;
    arcs.push_back(std::move(aj));
  }
  doc["levels"] = std::move(levels);
  doc["siblings"] = std::move(siblings);
  if (type == GasketType::I) {
    doc["arcs"] = std::move(arcs);
    doc["symmetry"] = std::move(symmetry);
    doc["symmetry_verdict_changed"] = symmetry_changed;
  }
  if (!options.deterministic) doc["generated_at"] = timestamp();
  return doc;
}

Json packing_to_json(const CirclePacking& p) {
  Json doc;
  doc["root"] = p.root_curvatures;
  doc["curvature_bound"] = p.curvature_bound;
  Json circles = Json::array();
  for (std::size_t i = 0; i < p.circles.size(); ++i) {
    const auto& c = p.circles[i];
    circles.push_back({{"id", "c" + std::to_string(i)},
                       {"curvature", c.curvature},
                       {"center", {c.center.real(), c.center.imag()}},
                       {"radius", c.radius()}});
  }
  doc["circles"] = std::move(circles);
  Json t = Json::array();
  for (auto [i, j] : p.tangencies) t.push_back({i, j});
  doc["tangencies"] = std::move(t);
  return doc;
}

Json certify_packing(const CirclePacking& p, bool deterministic) {
  const auto audit = audit_packing(p);
  const auto cert = contact_graph_of_packing(p);
  Json doc;
  doc["kind"] = "packing";
  doc["root"] = p.root_curvatures;
  doc["curvature_bound"] = p.curvature_bound;
  doc["circles"] = p.circles.size();
  doc["tangencies"] = p.tangencies.size();
  doc["contact_graph"] = {{"vertices", cert.graph.vertex_count()},
                          {"edges", cert.graph.edge_count()},
                          {"faces", cert.graph.face_count()},
                          {"planar", cert.graph.euler_characteristic() == 2}};
  doc["bipartite"] = cert.bipartite;
  if (cert.triangle) {
    Json tri = Json::array();
    for (VertexId v : *cert.triangle) {
      tri.push_back({{"id", cert.graph.name(v)}, {"curvature", p.circles[v].curvature}});
    }
    doc["triangle"] = std::move(tri);
  } else {
    doc["triangle"] = nullptr;
  }
  if (!cert.bipartite) doc["odd_cycle_length"] = cert.odd_cycle.size();
  doc["residuals"] = {{"descartes", audit.max_descartes},
                      {"tangency", audit.max_tangency},
                      {"integrality", audit.max_integrality}};
  doc["interiors_disjoint"] = audit.disjoint;
  if (!deterministic) doc["generated_at"] = timestamp();
  return doc;
}

Json compare_certificates(const Json& core_cert, const Json& packing_cert) {
  auto kind = [](const Json& d) { return d.is_object() && d.contains("kind") ? d["kind"] : Json(nullptr); };
  if (kind(core_cert) != "core" || !core_cert.contains("bipartite")) {
    throw Error(ErrorCode::SchemaError, "first argument is not a core certificate");
  }
  if (kind(packing_cert) != "packing" || !packing_cert.contains("bipartite")) {
    throw Error(ErrorCode::SchemaError, "second argument is not a packing certificate");
  }
  const bool fatou_bip = core_cert["bipartite"].get<bool>();
  const bool pack_bip = packing_cert["bipartite"].get<bool>();
  Json doc;
  doc["core"] = core_cert.value("core", "");
  doc["packing_root"] = packing_cert.value("root", Json::array());
  if (fatou_bip && !pack_bip) {
    doc["equivalent"] = false;
    doc["verdict"] = "non-equivalent: bipartite vs odd cycle";
  } else if (!fatou_bip && pack_bip) {
    doc["equivalent"] = false;
    doc["verdict"] = "non-equivalent: odd cycle vs bipartite";
  } else {
    doc["equivalent"] = nullptr;
    doc["verdict"] = "undecided: both contact graphs have the same parity";
  }
  const std::string type = core_cert.value("type", "");
  if (type == "IIA" || type == "IIB") {
    doc["sibling_note"] = "the critical loop is singled out by its siblings, so no symmetry fixing E0 can shift the "
                          "anchored cycles";
  } else if (type == "I") {
    doc["sibling_note"] = "no anchored cycle has siblings; the obstruction is the missing a<->b symmetry of R0";
  }
  return doc;
}

}  // namespace gasket
