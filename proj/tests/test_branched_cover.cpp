#include "doctest.h"

#include "gasket/io.hpp"
#include "oracles.hpp"

using namespace gasket;

namespace {

Json iib_doc() { return core_to_json(iib_l2().spec); }

VertexId id(const GraphTower& t, std::string_view name) { return t.top().at(name); }

}  // namespace

TEST_SUITE("branched_cover") {
  TEST_CASE("iib_l2 passes every rule") {
    const auto r = validate_core(iib_l2().spec);
    CHECK(r.ok());
    CHECK(r.first_failure() == nullptr);
    CHECK(r.rules.size() == 10);
  }

  TEST_CASE("an extra vertex over a0 breaks fiber saturation") {
    Json doc = iib_doc();
    doc["g1"]["vertices"].push_back("x");
    doc["g1"]["rotation"]["x"] = {"a2"};
    doc["g1"]["rotation"]["a2"] = {"a1", "x", "b0"};
    doc["vertex_map"]["x"] = "a0";
    doc["local_degree"]["x"] = 1;
    const auto r = validate_core(core_from_json(doc));
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r[CoreRule::FiberSaturation].passed);
  }

  TEST_CASE("mapping a1 to itself breaks simpliciality or the fixed edge") {
    Json doc = iib_doc();
    doc["vertex_map"]["a1"] = "a1";
    const auto r = validate_core(core_from_json(doc));
    CHECK_FALSE(r.ok());
    CHECK((!r[CoreRule::Simplicial].passed || !r[CoreRule::FixedEdge].passed));
  }

  TEST_CASE("strict parsing") {
    Json doc = iib_doc();
    doc["typo"] = 1;
    CHECK_THROWS_AS(core_from_json(doc), Error);
    Json missing = iib_doc();
    missing.erase("local_degree");
    CHECK_THROWS_AS(core_from_json(missing), Error);
    CHECK_THROWS_AS(parse_core("{ not json"), Error);
  }

  TEST_CASE("core documents round-trip") {
    for (const auto& core : bundled_cores()) {
      CAPTURE(core.name());
      const auto again = core_from_json(core_to_json(core.spec));
      CHECK(core_to_string(again) == core_to_string(core.spec));
      CHECK(again.normalized());
    }
  }

  TEST_CASE("edge dynamics of iib_l2") {
    const auto spec = iib_l2().spec;
    const auto dyn = edge_dynamics(spec);
    const auto& g = spec.g1;
    CHECK(dyn.fixed_edge == edge_key(g.at("a0"), g.at("b0")));
    auto steps = [&](const char* x, const char* y) {
      for (const auto& o : dyn.orbits) {
        if (o.edge == edge_key(g.at(x), g.at(y))) return o.steps;
      }
      return SIZE_MAX;
    };
    CHECK(steps("a0", "b0") == 0);
    CHECK(steps("a1", "a2") == 2);
    CHECK(steps("a2", "b0") == 2);
    CHECK(steps("a0", "a1") == 1);
    CHECK(dyn.max_steps == 2);
  }

  TEST_CASE("pullback counts") {
    const auto t = build_tower(iib_l2().spec, 3);
    CHECK(t.level(1).vertex_count() == 4);
    CHECK(t.level(1).edge_count() == 4);
    CHECK(t.level(1).face_count() == 2);
    CHECK(t.level(2).vertex_count() == 6);
    CHECK(t.level(2).edge_count() == 8);
    CHECK(t.level(2).face_count() == 4);
    CHECK(t.level(3).vertex_count() == 10);
    CHECK(t.level(3).edge_count() == 16);
    CHECK(t.level(3).face_count() == 8);
  }

  TEST_CASE("levels pass the structural audit and are nested") {
    for (const auto& core : bundled_cores()) {
      CAPTURE(core.name());
      const auto t = build_tower(core.spec, 6);
      for (int k = 1; k <= t.depth(); ++k) {
        const auto c = verify_level(t, k);
        CAPTURE(k);
        CAPTURE(c.detail);
        CHECK(c.ok());
        const auto& lo = t.level(k - 1);
        const auto& hi = t.level(k);
        for (VertexId v = 0; v < lo.vertex_count(); ++v) CHECK(lo.name(v) == hi.name(v));
        for (EdgeKey e : lo.edges()) CHECK(hi.has_edge(e));
      }
    }
  }

  TEST_CASE("pullback is deterministic") {
    for (const auto& core : bundled_cores()) {
      const auto a = build_tower(core.spec, 5);
      const auto b = build_tower(core.spec, 5);
      CHECK(a.canonical_serialization() == b.canonical_serialization());
    }
  }

  TEST_CASE("lifts of E0") {
    const auto t = build_tower(iib_l2().spec, 1);
    const Path e0{id(t, "a0"), id(t, "b0")};
    CHECK(lift_path(t, e0, id(t, "b0")) == Path{id(t, "b0"), id(t, "a0")});
    CHECK(lift_path(t, e0, id(t, "a1")) == Path{id(t, "a1"), id(t, "a0")});
    const Path point{id(t, "a0")};
    CHECK(lift_path(t, point, id(t, "b0")) == Path{id(t, "b0")});
    CHECK_THROWS_AS(lift_path(t, e0, id(t, "a0")), Error);
  }

  TEST_CASE("lift then project is the identity") {
    for (const auto& core : bundled_cores()) {
      for (int depth = 1; depth <= 3; ++depth) {
        const GraphTower t = build_tower(core.spec, depth);
        const auto& below = t.level(depth - 1);
        const auto& top = t.top();
        std::size_t checked = 0;
        for (VertexId u = 0; u < below.vertex_count(); ++u) {
          oracle::simple_paths(below, u, 6, [&](const Path& p) {
            for (VertexId s = 0; s < top.vertex_count(); ++s) {
              if (t.image(s) != p[0]) continue;
              const Path lift = lift_path(t, p, s);
              REQUIRE(lift.size() == p.size());
              for (std::size_t i = 0; i < p.size(); ++i) CHECK(t.image(lift[i]) == p[i]);
              for (std::size_t i = 0; i + 1 < lift.size(); ++i) CHECK(top.adjacent(lift[i], lift[i + 1]));
              ++checked;
            }
          });
        }
        CHECK(checked > 0);
      }
    }
  }

  TEST_CASE("eventual partition is a proper two-colouring") {
    for (const auto& core : bundled_cores()) {
      const auto t = build_tower(core.spec, 5);
      for (int k = 0; k <= t.depth(); ++k) {
        const auto part = eventual_partition(t, k);
        for (EdgeKey e : t.level(k).edges()) CHECK(part[edge_lo(e)] != part[edge_hi(e)]);
      }
    }
  }
}
