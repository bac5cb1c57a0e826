#include <cmath>

#include "doctest.h"

#include "gasket/certificate.hpp"

using namespace gasket;

namespace {

OrientedCircle circle(double k, Point c) { return {k, c}; }

bool tangent(const OrientedCircle& x, const OrientedCircle& y) {
  const double d = std::abs(x.center - y.center);
  const double want = std::abs(x.signed_radius() + y.signed_radius());
  return std::abs(d - want) < 1e-9 * std::max(x.radius(), y.radius());
}

}  // namespace

TEST_SUITE("packing") {
  TEST_CASE("descartes roots") {
    auto [p, m] = descartes_fourth(-1, 2, 2);
    CHECK(p == doctest::Approx(3));
    CHECK(m == doctest::Approx(3));
    std::tie(p, m) = descartes_fourth(2, 2, 3);
    CHECK(p == doctest::Approx(15));
    CHECK(m == doctest::Approx(-1));
    std::tie(p, m) = descartes_fourth(1, 1, 1);
    CHECK(p == doctest::Approx(3 + 2 * std::sqrt(3.0)));
    CHECK(m == doctest::Approx(3 - 2 * std::sqrt(3.0)));
    const double q[] = {1, 1, 1, p};
    CHECK(descartes_residual(q) < 1e-12);
    CHECK_THROWS_AS(descartes_fourth(-1, -1, 1), Error);
  }

  TEST_CASE("inscribed circle in the unit disk") {
    const auto outer = circle(-1, 0);
    const auto left = circle(2, -0.5), right = circle(2, 0.5);
    const auto up = solve_tangent_circle(outer, left, right, 1);
    const auto down = solve_tangent_circle(outer, left, right, -1);
    CHECK(up.curvature == doctest::Approx(3));
    CHECK(down.curvature == doctest::Approx(3));
    CHECK(std::abs(up.center.imag()) == doctest::Approx(2.0 / 3));
    CHECK(up.center.imag() == doctest::Approx(-down.center.imag()));
    CHECK(std::abs(right.center - up.center) == doctest::Approx(5.0 / 6));
    for (const auto& c : {up, down}) {
      CHECK(tangent(c, outer));
      CHECK(tangent(c, left));
      CHECK(tangent(c, right));
    }
  }

  TEST_CASE("equal triple") {
    const double r = 1.0;
    const auto a = circle(1, std::polar(2 * r / std::sqrt(3.0), M_PI / 2));
    const auto b = circle(1, std::polar(2 * r / std::sqrt(3.0), M_PI / 2 + 2 * M_PI / 3));
    const auto c = circle(1, std::polar(2 * r / std::sqrt(3.0), M_PI / 2 + 4 * M_PI / 3));
    const auto in = solve_tangent_circle(a, b, c, 1);
    const auto out = solve_tangent_circle(a, b, c, -1);
    CHECK(std::abs(in.center) < 1e-9);
    CHECK(std::abs(out.center) < 1e-9);
    CHECK(in.curvature > 0);
    CHECK(out.curvature < 0);
    for (const auto& x : {in, out}) {
      CHECK(tangent(x, a));
      CHECK(tangent(x, b));
      CHECK(tangent(x, c));
    }
  }

  TEST_CASE("root validation") {
    CHECK_THROWS_AS(root_from_curvatures({1, 1, 1, 1}), Error);
    CHECK_THROWS_AS(root_from_curvatures({-1, -1, 2, 2}), Error);
    CHECK_THROWS_AS(root_from_curvatures({0, 0, 1, 1}), Error);
    const auto root = root_from_curvatures({-1, 2, 2, 3});
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) CHECK(tangent(root[i], root[j]));
    }
  }

  TEST_CASE("bound 3 keeps the root stage") {
    const auto p = generate_apollonian(std::array<double, 4>{-1, 2, 2, 3}, 3);
    std::vector<double> k;
    for (const auto& c : p.circles) k.push_back(c.curvature);
    std::sort(k.begin(), k.end());
    CHECK(k == std::vector<double>{-1, 2, 2, 3, 3});
  }

  TEST_CASE("the classical integral packing") {
    const auto p = generate_apollonian(std::array<double, 4>{-1, 2, 2, 3}, 100);
    const auto audit = audit_packing(p);
    CHECK(audit.max_descartes < 1e-9);
    CHECK(audit.max_tangency < 1e-9);
    CHECK(audit.max_integrality < 1e-6);
    CHECK(audit.disjoint);
    for (const auto& c : p.circles) CHECK(c.curvature <= 100 + 1e-9);
    for (const auto& q : p.quadruples) {
      const double k[] = {p.circles[q[0]].curvature, p.circles[q[1]].curvature, p.circles[q[2]].curvature,
                          p.circles[q[3]].curvature};
      CHECK(descartes_residual(k) < 1e-9);
    }
    for (auto [i, j] : p.tangencies) CHECK(tangent(p.circles[i], p.circles[j]));

    const auto cert = contact_graph_of_packing(p);
    CHECK(cert.graph.vertex_count() == p.circles.size());
    CHECK(cert.graph.edge_count() == p.tangencies.size());
    CHECK(cert.graph.euler_characteristic() == 2);
    CHECK_FALSE(cert.bipartite);
    REQUIRE(cert.triangle.has_value());
    const auto [x, y, z] = *cert.triangle;
    CHECK(cert.graph.adjacent(x, y));
    CHECK(cert.graph.adjacent(y, z));
    CHECK(cert.graph.adjacent(z, x));
  }

  TEST_CASE("generation is deterministic") {
    const auto a = packing_to_json(generate_apollonian(std::array<double, 4>{-1, 2, 2, 3}, 60));
    const auto b = packing_to_json(generate_apollonian(std::array<double, 4>{-1, 2, 2, 3}, 60));
    CHECK(a.dump() == b.dump());
  }

  TEST_CASE("two tangent circles") {
    const auto p = packing_from_circles({circle(1, 0), circle(1, 2)}, {{0, 1}});
    const auto cert = contact_graph_of_packing(p);
    CHECK(cert.graph.edge_count() == 1);
    CHECK(cert.bipartite);
    CHECK_FALSE(cert.triangle.has_value());
  }

  TEST_CASE("certificates and the comparison") {
    const auto p = generate_apollonian(std::array<double, 4>{-1, 2, 2, 3}, 10);
    const auto pc = certify_packing(p, true);
    CHECK(pc["kind"] == "packing");
    CHECK(pc["bipartite"] == false);
    CHECK(pc["triangle"].size() == 3);
    CHECK_FALSE(pc.contains("generated_at"));
    CHECK(certify_packing(p, false).contains("generated_at"));
    for (const auto& core : bundled_cores()) {
      const auto cc = certify_core(core, {3, 16, true});
      CHECK(cc["bipartite"] == true);
      CHECK(compare_certificates(cc, pc)["verdict"] == "non-equivalent: bipartite vs odd cycle");
    }
    CHECK_THROWS_AS(compare_certificates(pc, pc), Error);
    const auto svg = packing_to_svg(p, true);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
  }
}
