#include <numeric>

#include "doctest.h"

#include "oracles.hpp"

using namespace gasket;

namespace {

PlaneGraph square() {
  return PlaneGraph::build({"a0", "a1", "a2", "b0"}, {{"a0", {"a1", "b0"}},
                                                      {"a1", {"a2", "a0"}},
                                                      {"a2", {"b0", "a1"}},
                                                      {"b0", {"a0", "a2"}}});
}

PlaneGraph triangle() {
  return PlaneGraph::build({"x", "y", "z"}, {{"x", {"y", "z"}}, {"y", {"z", "x"}}, {"z", {"x", "y"}}});
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::IoError;
}

}  // namespace

TEST_SUITE("plane_graph") {
  TEST_CASE("small graphs count their faces") {
    const auto t = triangle();
    CHECK(t.vertex_count() == 3);
    CHECK(t.edge_count() == 3);
    CHECK(t.face_count() == 2);

    const auto p = PlaneGraph::build({"b0", "a0", "a1"}, {{"b0", {"a0"}}, {"a0", {"a1", "b0"}}, {"a1", {"a0"}}});
    CHECK(p.edge_count() == 2);
    CHECK(p.face_count() == 1);

    const auto s = square();
    CHECK(s.face_count() == 2);
    CHECK(s.euler_characteristic() == 2);
  }

  TEST_CASE("malformed rotation systems are rejected") {
    CHECK(code_of([] { PlaneGraph::build({"x", "y"}, {{"x", {"y", "y"}}, {"y", {"x", "x"}}}); }) ==
          ErrorCode::NotSimple);
    CHECK(code_of([] { PlaneGraph::build({"x", "y"}, {{"x", {"y"}}, {"y", {}}}); }) == ErrorCode::InvalidRotation);
    CHECK(code_of([] { PlaneGraph::build({"x"}, {{"x", {"q"}}}); }) == ErrorCode::UnknownVertex);
    CHECK(code_of([] {
            PlaneGraph::build({"w", "x", "y", "z"}, {{"w", {"x"}}, {"x", {"w"}}, {"y", {"z"}}, {"z", {"y"}}});
          }) == ErrorCode::Disconnected);
    // K4 with a twisted rotation at one vertex lives on the torus.
    CHECK(code_of([] {
            PlaneGraph::build({"0", "1", "2", "3"}, {{"0", {"1", "2", "3"}},
                                                     {"1", {"0", "2", "3"}},
                                                     {"2", {"0", "3", "1"}},
                                                     {"3", {"1", "0", "2"}}});
          }) == ErrorCode::NotSpherical);
  }

  TEST_CASE("every corpus graph is spherical and its faces partition the darts") {
    for (const auto& [name, g] : oracle::corpus(64)) {
      CAPTURE(name);
      CHECK(g.euler_characteristic() == 2);
      std::vector<int> seen(g.dart_count(), 0);
      for (const auto& f : g.faces()) {
        for (DartId d : f) ++seen[d];
      }
      CHECK(std::all_of(seen.begin(), seen.end(), [](int x) { return x == 1; }));
      for (DartId d = 0; d < g.dart_count(); ++d) {
        CHECK(g.reverse(g.reverse(d)) == d);
        CHECK(g.prev_around(g.next_around(d)) == d);
      }
    }
  }

  TEST_CASE("rotation tables round-trip") {
    for (const auto& [name, g] : oracle::corpus(64)) {
      CAPTURE(name);
      const auto again = PlaneGraph::build(g.names(), g.rotation_table());
      CHECK(again == g);
    }
  }

  TEST_CASE("shortest cycles through an edge") {
    const auto s = square();
    const auto r = shortest_cycles_through_edge(s, s.at("a0"), s.at("b0"), 10);
    REQUIRE(r.cycles.size() == 1);
    CHECK(r.cycles[0].length() == 4);
    CHECK(r.cycles[0].vertices[0] == s.at("a0"));
    CHECK(r.cycles[0].vertices[1] == s.at("b0"));

    const auto t = triangle();
    for (EdgeKey e : t.edges()) {
      const auto c = shortest_cycles_through_edge(t, edge_lo(e), edge_hi(e), 10);
      CHECK(c.cycles.size() == 1);
      CHECK(c.cycles[0].length() == 3);
      CHECK(c.girth == 3u);
    }

    const auto tower = build_tower(iib_l2().spec, 2);
    const auto g2 = shortest_cycles_through_edge(tower.level(2), tower.fixed_a(), tower.fixed_b(), 10);
    CHECK(g2.cycles.size() == 3);
    for (const auto& c : g2.cycles) CHECK(c.length() == 4);
  }

  TEST_CASE("cycle search agrees with the brute-force oracle") {
    for (const auto& [name, g] : oracle::corpus(12)) {
      CAPTURE(name);
      for (EdgeKey e : g.edges()) {
        const auto mine = shortest_cycles_through_edge(g, edge_lo(e), edge_hi(e), g.vertex_count());
        const auto ref = oracle::shortest_cycles(g, edge_lo(e), edge_hi(e));
        std::set<std::vector<EdgeKey>> got;
        for (const auto& c : mine.cycles) got.insert(c.edges);
        CHECK(got == ref);
      }
      const auto gg = girth(g);
      const auto ref = oracle::girth(g);
      CHECK(gg.value_or(SIZE_MAX) == ref);
    }
  }

  TEST_CASE("bipartite verdicts carry witnesses") {
    const auto s = square();
    const auto v = is_bipartite(s);
    REQUIRE(v.bipartite);
    CHECK(v.color[s.at("a0")] == v.color[s.at("a2")]);
    CHECK(v.color[s.at("a1")] == v.color[s.at("b0")]);
    CHECK(v.color[s.at("a0")] != v.color[s.at("a1")]);

    const auto t = is_bipartite(triangle());
    CHECK_FALSE(t.bipartite);
    CHECK(t.odd_cycle.size() == 3);

    for (const auto& [name, g] : oracle::corpus(64)) {
      CAPTURE(name);
      const auto b = is_bipartite(g);
      if (b.bipartite) {
        for (EdgeKey e : g.edges()) CHECK(b.color[edge_lo(e)] != b.color[edge_hi(e)]);
      } else {
        REQUIRE(b.odd_cycle.size() % 2 == 1);
        for (std::size_t i = 0; i < b.odd_cycle.size(); ++i) {
          CHECK(g.adjacent(b.odd_cycle[i], b.odd_cycle[(i + 1) % b.odd_cycle.size()]));
        }
      }
    }
  }

  TEST_CASE("graph distance") {
    const auto tower = build_tower(iib_l2().spec, 1);
    const auto& g1 = tower.level(1);
    CHECK(graph_distance(g1, g1.at("a0"), g1.at("a2")) == 2);
    CHECK(graph_distance(g1, g1.at("a0"), g1.at("b0")) == 1);
    CHECK(graph_distance(g1, g1.at("a1"), g1.at("a1")) == 0);
    for (const auto& [name, g] : oracle::corpus(64)) {
      CAPTURE(name);
      for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(graph_distance(g, u, v) == oracle::bfs_distance(g, u, v));
      }
    }
  }

  TEST_CASE("embedded automorphisms respect the rotation") {
    const auto claw = oracle::hand_graphs()[2].second;
    CHECK(embedded_automorphisms(claw, {}).size() == 3);
    CHECK(embedded_automorphisms(square(), {}).size() == 8);

    for (const auto& [name, g] : oracle::hand_graphs()) {
      CAPTURE(name);
      std::vector<std::pair<VertexId, VertexId>> pins;
      for (VertexId v = 0; v < g.vertex_count(); ++v) pins.emplace_back(v, v);
      const auto fixed = embedded_automorphisms(g, pins);
      REQUIRE(fixed.size() == 1);
      for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(fixed[0][v] == v);
      for (const auto& a : embedded_automorphisms(g, {})) CHECK(is_embedded_automorphism(g, a));
    }
  }

  TEST_CASE("automorphism counts match a permutation sweep") {
    for (const auto& [name, g] : oracle::hand_graphs()) {
      if (g.vertex_count() > 8) continue;
      CAPTURE(name);
      Automorphism p(g.vertex_count());
      std::iota(p.begin(), p.end(), 0);
      std::size_t count = 0;
      do {
        count += oracle::preserves_embedding(g, p) ? 1 : 0;
      } while (std::next_permutation(p.begin(), p.end()));
      CHECK(embedded_automorphisms(g, {}).size() == count);
    }
  }
}
