#pragma once

#include <array>
#include <complex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gasket/plane_graph.hpp"

namespace gasket {

using Point = std::complex<double>;

inline constexpr double kPackingTolerance = 1e-9;

// Negative curvature marks an enclosing circle. Straight lines (curvature 0)
// are representable but not accepted by the generators.
struct OrientedCircle {
  double curvature = 1.0;
  Point center{};
  Point normal{};      // lines only
  double offset = 0.0; // lines only

  bool is_line() const noexcept { return curvature == 0.0; }
  double radius() const { return 1.0 / std::abs(curvature); }
  double signed_radius() const { return 1.0 / curvature; }
};

// Relative gap between the center distance and the tangency distance.
double tangency_residual(const OrientedCircle& x, const OrientedCircle& y);
// |(sum k)^2 - 2 sum k^2| relative to max(1, sum k^2).
double descartes_residual(std::span<const double> k);

// Both roots k1 + k2 + k3 +- 2 sqrt(k1k2 + k2k3 + k3k1). Throws NoRealSolution.
std::pair<double, double> descartes_fourth(double k1, double k2, double k3);

// Circle tangent to three mutually tangent circles; sign >= 0 picks the larger
// curvature root and, when both roots coincide, the principal center branch.
// Throws DegenerateConfiguration.
OrientedCircle solve_tangent_circle(const OrientedCircle& c1, const OrientedCircle& c2,
                                    const OrientedCircle& c3, int sign);

// Places a Descartes quadruple with the given curvatures: the first circle at
// the origin, the second on the positive real axis, the third above it.
// Throws InvalidRoot.
std::array<OrientedCircle, 4> root_from_curvatures(const std::array<double, 4>& k);

struct CirclePacking {
  std::vector<OrientedCircle> circles;
  std::vector<std::pair<std::size_t, std::size_t>> tangencies;  // i < j, sorted
  std::vector<std::array<std::size_t, 4>> quadruples;           // every Descartes quadruple built
  std::array<double, 4> root_curvatures{};
  double curvature_bound = 0.0;
  std::size_t generations = 0;
};

// Breadth-first Apollonian generation: each curvilinear triangle (i, j, k)
// with opposite circle o spawns the reflection of o, kept when its curvature
// is at most `bound`. Throws InvalidRoot.
CirclePacking generate_apollonian(const std::array<OrientedCircle, 4>& root, double bound);
CirclePacking generate_apollonian(const std::array<double, 4>& root_curvatures, double bound);

// A packing given as an explicit circle list with its tangencies.
CirclePacking packing_from_circles(std::vector<OrientedCircle> circles,
                                   std::vector<std::pair<std::size_t, std::size_t>> tangencies);

struct PackingAudit {
  double max_descartes = 0.0;
  double max_tangency = 0.0;
  double max_integrality = 0.0;  // distance of a curvature to the nearest integer
  bool disjoint = true;          // interiors pairwise disjoint
};

PackingAudit audit_packing(const CirclePacking& p);

struct ContactCertificate {
  PlaneGraph graph;                        // vertex "c<i>" per circle
  bool bipartite = false;
  std::optional<std::array<VertexId, 3>> triangle;
  std::vector<VertexId> odd_cycle;
};

// Contact graph embedded by the cyclic order of tangency points; the
// enclosing circle sees its neighbours in reverse. Throws EmbeddingFailure.
ContactCertificate contact_graph_of_packing(const CirclePacking& p);

std::string packing_to_svg(const CirclePacking& p, bool overlay_contacts = false);

}  // namespace gasket
