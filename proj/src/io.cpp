#include "gasket/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace gasket {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorCode::SchemaError, what); }

void expect_keys(const Json& doc, std::string_view where, std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional = {}) {
  if (!doc.is_object()) schema_error(std::string(where) + " must be an object");
  for (auto key : required) {
    if (!doc.contains(key)) schema_error(std::string(where) + " is missing '" + std::string(key) + "'");
  }
  for (const auto& [key, value] : doc.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema_error(std::string(where) + " has unknown field '" + key + "'");
  }
}

const std::string& as_string(const Json& v, std::string_view where) {
  if (!v.is_string()) schema_error(std::string(where) + " must be a string");
  return v.get_ref<const std::string&>();
}

std::pair<std::string, std::string> as_pair(const Json& v, std::string_view where) {
  if (!v.is_array() || v.size() != 2) schema_error(std::string(where) + " must be a pair of names");
  return {as_string(v[0], where), as_string(v[1], where)};
}

}  // namespace

PlaneGraph graph_from_json(const Json& doc) {
  expect_keys(doc, "graph", {"vertices", "rotation"});
  if (!doc["vertices"].is_array()) schema_error("graph.vertices must be an array");
  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) vertices.push_back(as_string(v, "vertex"));
  if (!doc["rotation"].is_object()) schema_error("graph.rotation must be an object");
  RotationTable rot;
  for (const auto& [v, nbrs] : doc["rotation"].items()) {
    if (!nbrs.is_array()) schema_error("rotation of '" + v + "' must be an array");
    auto& out = rot[v];
    for (const auto& w : nbrs) out.push_back(as_string(w, "rotation entry"));
  }
  return PlaneGraph::build(std::move(vertices), rot);
}

Json graph_to_json(const PlaneGraph& g) {
  Json doc;
  doc["vertices"] = g.names();
  Json rot = Json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json nbrs = Json::array();
    for (VertexId w : g.neighbors(v)) nbrs.push_back(g.name(w));
    rot[g.name(v)] = std::move(nbrs);
  }
  doc["rotation"] = std::move(rot);
  return doc;
}

CoreSpec core_from_json(const Json& doc) {
  expect_keys(doc, "core", {"name", "degree", "g0", "g1", "vertex_map", "local_degree", "fixed_edge"},
              {"critical"});
  const auto& name = as_string(doc["name"], "name");
  if (!doc["degree"].is_number_integer()) schema_error("degree must be an integer");
  const int degree = doc["degree"].get<int>();
  auto g0 = graph_from_json(doc["g0"]);
  auto g1 = graph_from_json(doc["g1"]);
  if (!doc["vertex_map"].is_object()) schema_error("vertex_map must be an object");
  std::map<std::string, std::string> vmap;
  for (const auto& [v, u] : doc["vertex_map"].items()) vmap[v] = as_string(u, "vertex_map entry");
  if (!doc["local_degree"].is_object()) schema_error("local_degree must be an object");
  std::map<std::string, int> ld;
  for (const auto& [v, e] : doc["local_degree"].items()) {
    if (!e.is_number_integer()) schema_error("local_degree entries must be integers");
    ld[v] = e.get<int>();
  }
  std::optional<std::pair<std::string, std::string>> critical;
  if (doc.contains("critical")) critical = as_pair(doc["critical"], "critical");
  return CoreSpec::create(name, degree, std::move(g0), std::move(g1), vmap, ld,
                          as_pair(doc["fixed_edge"], "fixed_edge"), critical);
}

CoreSpec parse_core(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema_error(std::string("invalid JSON: ") + e.what());
  }
  return core_from_json(doc);
}

Json core_to_json(const CoreSpec& spec) {
  Json doc;
  doc["name"] = spec.name;
  doc["degree"] = spec.degree;
  doc["g0"] = graph_to_json(spec.g0);
  doc["g1"] = graph_to_json(spec.g1);
  Json vmap = Json::object(), ld = Json::object();
  for (VertexId v = 0; v < spec.g1.vertex_count(); ++v) {
    vmap[spec.g1.name(v)] = spec.g0.name(spec.vertex_map[v]);
    ld[spec.g1.name(v)] = spec.local_degree[v];
  }
  doc["vertex_map"] = std::move(vmap);
  doc["local_degree"] = std::move(ld);
  doc["fixed_edge"] = {spec.g1.name(spec.fixed_a), spec.g1.name(spec.fixed_b)};
  if (spec.critical) {
    doc["critical"] = {spec.g1.name(spec.critical->first), spec.g1.name(spec.critical->second)};
  }
  return doc;
}

std::string core_to_string(const CoreSpec& spec) { return core_to_json(spec).dump(2) + "\n"; }

std::string to_dot(const PlaneGraph& g, const DotStyle& style, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n  node [shape=circle, style=filled, fillcolor=white];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  \"" << g.name(v) << "\"";
    std::vector<std::string> attrs;
    if (!style.classes.empty()) {
      attrs.push_back(std::string("fillcolor=") + (style.classes[v] ? "\"#f4a259\"" : "\"#8cb3d9\""));
    }
    if (!style.level.empty()) attrs.push_back("level=" + std::to_string(style.level[v]));
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (EdgeKey e : g.edges()) {
    out << "  \"" << g.name(edge_lo(e)) << "\" -- \"" << g.name(edge_hi(e)) << "\"";
    if (style.highlight && *style.highlight == e) out << " [color=red, penwidth=3]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json tower_to_json(const GraphTower& tower) {
  Json doc;
  doc["core"] = tower.core().name;
  doc["depth"] = tower.depth();
  Json levels = Json::array();
  for (int k = 0; k <= tower.depth(); ++k) {
    const PlaneGraph& g = tower.level(k);
    Json level;
    level["level"] = k;
    level["vertices"] = g.vertex_count();
    level["edges"] = g.edge_count();
    level["faces"] = g.face_count();
    level["graph"] = graph_to_json(g);
    if (k >= 1) {
      Json map = Json::object();
      for (VertexId v = 0; v < g.vertex_count(); ++v) map[g.name(v)] = g.name(tower.image(v));
      level["map"] = std::move(map);
    }
    levels.push_back(std::move(level));
  }
  doc["levels"] = std::move(levels);
  return doc;
}

std::string tower_to_dot(const GraphTower& tower) {
  DotStyle style;
  style.highlight = edge_key(tower.fixed_a(), tower.fixed_b());
  const PlaneGraph& g = tower.top();
  for (VertexId v = 0; v < g.vertex_count(); ++v) style.level.push_back(tower.birth_level(v));
  return to_dot(g, style, "tower");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'");
  out << content;
  if (!out) throw Error(ErrorCode::IoError, "write to '" + path + "' failed");
}

}  // namespace gasket
