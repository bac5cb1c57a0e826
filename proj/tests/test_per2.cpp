#include "doctest.h"

#include "gasket/io.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

std::string data_file(const std::string& name) { return std::string(GASKET_SOURCE_DIR) + "/data/cores/" + name; }

// Prefixes every name, reverses the vertex order and rotates each rotation list
// by one step: an embedded isomorphism by construction.
CoreSpec relabelled(const CoreSpec& spec, const std::string& prefix) {
  Json doc = core_to_json(spec);
  auto rn = [&](const std::string& v) { return prefix + v; };
  auto graph = [&](const Json& g) {
    Json out;
    out["vertices"] = Json::array();
    std::vector<std::string> vs = g["vertices"].get<std::vector<std::string>>();
    std::reverse(vs.begin(), vs.end());
    for (const auto& v : vs) out["vertices"].push_back(rn(v));
    out["rotation"] = Json::object();
    for (const auto& [v, ns] : g["rotation"].items()) {
      auto list = ns.get<std::vector<std::string>>();
      if (!list.empty()) std::rotate(list.begin(), list.begin() + 1, list.end());
      Json r = Json::array();
      for (const auto& n : list) r.push_back(rn(n));
      out["rotation"][rn(v)] = r;
    }
    return out;
  };
  Json next = doc;
  next["g0"] = graph(doc["g0"]);
  next["g1"] = graph(doc["g1"]);
  next["vertex_map"] = Json::object();
  for (const auto& [v, u] : doc["vertex_map"].items()) next["vertex_map"][rn(v)] = rn(u.get<std::string>());
  next["local_degree"] = Json::object();
  for (const auto& [v, e] : doc["local_degree"].items()) next["local_degree"][rn(v)] = e;
  next["fixed_edge"] = {rn(doc["fixed_edge"][0]), rn(doc["fixed_edge"][1])};
  next["critical"] = {rn(doc["critical"][0]), rn(doc["critical"][1])};
  return core_from_json(next);
}

}  // namespace

TEST_SUITE("per2") {
  TEST_CASE("iib_l2") {
    const auto core = iib_l2();
    CHECK(core.name() == "iib_l2");
    CHECK(classify_type(core) == GasketType::IIB);
    const auto loop = critical_loop(core);
    CHECK(loop.l == 2);
    std::vector<std::string> names;
    for (VertexId v : loop.cycle.vertices) names.push_back(core.spec.g1.name(v));
    CHECK(names == std::vector<std::string>{"a0", "a1", "a2", "b0"});
    CHECK(core.q == 2);
    CHECK(core.canonical);
  }

  TEST_CASE("bundled documents on disk match the library") {
    for (const auto& core : bundled_cores()) {
      CAPTURE(core.name());
      const auto spec = parse_core(read_file(data_file(core.name() + ".json")));
      CHECK(canonical_form(spec) == canonical_form(core.spec));
      CHECK(core_to_string(spec) == core_to_string(core.spec));
    }
    CHECK_THROWS_AS(bundled_core("nope"), Error);
  }

  TEST_CASE("bundled typed cores are the enumerator's minimal cores") {
    const auto cores = enumerate_small_cores(10);
    for (auto type : {GasketType::I, GasketType::IIA}) {
      const auto m = minimal_core(cores, type);
      REQUIRE(m.has_value());
      const auto name = type == GasketType::I ? "typeI_min" : "typeIIA_min";
      CAPTURE(name);
      CHECK(canonical_form(m->spec) == canonical_form(bundled_core(name).spec));
      CHECK(classify_type(bundled_core(name)) == type);
    }
  }

  TEST_CASE("small enumeration") {
    CHECK(enumerate_small_cores(0).empty());
    const auto four = enumerate_small_cores(4);
    REQUIRE(four.size() == 1);
    CHECK(canonical_form(four[0].spec) == canonical_form(iib_l2().spec));
    CHECK(classify_type(four[0]) == GasketType::IIB);
  }

  TEST_CASE("enumeration does not depend on the thread count") {
    const auto one = enumerate_small_cores(7, 1);
    const auto many = enumerate_small_cores(7, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(canonical_form(one[i].spec) == canonical_form(many[i].spec));
  }

  TEST_CASE("every enumerated core satisfies the per2 invariants") {
    for (const auto& core : enumerate_small_cores(10)) {
      CAPTURE(core.name());
      CHECK(validate_core(core.spec).ok());
      const auto& g0 = core.spec.g0;
      CHECK(g0.edge_count() + 1 == g0.vertex_count());
      CHECK(g0.face_count() == 1);
      const auto l = critical_loop(core).l;
      const auto t = build_tower(core.spec, 4);
      std::size_t last = SIZE_MAX;
      for (int k = 1; k <= t.depth(); ++k) {
        CHECK(oracle::bfs_girth(t.level(k)) == 2 * l);
        const auto d = oracle::bfs_distance(t.level(k), core.a0, core.c);
        CHECK(d == l);
        CHECK(d <= last);
        last = d;
      }
    }
  }

  TEST_CASE("the type survives relabelling") {
    for (const auto& core : bundled_cores()) {
      CAPTURE(core.name());
      const auto renamed = Per2Core::make(relabelled(core.spec, "z_"));
      CHECK(classify_type(renamed) == classify_type(core));
      CHECK(canonical_form(renamed.spec) == canonical_form(core.spec));
      CHECK(critical_loop(renamed).l == critical_loop(core).l);
    }
  }

  TEST_CASE("canonical naming keeps the core") {
    for (const auto& core : bundled_cores()) {
      const auto named = canonical_naming(core, "copy");
      CHECK(canonical_form(named.spec) == canonical_form(core.spec));
      CHECK(named.spec.g1.find("a0").has_value());
      CHECK(named.spec.g1.find("b0").has_value());
    }
  }
}
