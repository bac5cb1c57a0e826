#include "gasket/packing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace gasket {

namespace {

void require_circle(const OrientedCircle& c, ErrorCode code) {
  if (c.is_line() || !std::isfinite(c.curvature) || !std::isfinite(c.center.real()) ||
      !std::isfinite(c.center.imag())) {
    throw Error(code, "only finite circles are supported");
  }
}

std::pair<std::size_t, std::size_t> ordered(std::size_t i, std::size_t j) { return {std::min(i, j), std::max(i, j)}; }

}  // namespace

double tangency_residual(const OrientedCircle& x, const OrientedCircle& y) {
  const double want = std::abs(x.signed_radius() + y.signed_radius());
  const double got = std::abs(x.center - y.center);
  return std::abs(got - want) / std::max(x.radius(), y.radius());
}

double descartes_residual(std::span<const double> k) {
  double s = 0, q = 0;
  for (double x : k) {
    s += x;
    q += x * x;
  }
  return std::abs(s * s - 2 * q) / std::max(1.0, q);
}

std::pair<double, double> descartes_fourth(double k1, double k2, double k3) {
  double rad = k1 * k2 + k2 * k3 + k3 * k1;
  const double scale = std::max({1.0, k1 * k1, k2 * k2, k3 * k3});
  if (rad < -kPackingTolerance * scale) {
    throw Error(ErrorCode::NoRealSolution, "k1k2 + k2k3 + k3k1 = " + std::to_string(rad) + " < 0");
  }
  rad = std::max(rad, 0.0);
  const double s = k1 + k2 + k3, r = 2 * std::sqrt(rad);
  return {s + r, s - r};
}

namespace {

// The square root below loses half the digits when its argument is near
// zero; a few Gauss-Newton steps on the three distances restore them.
Point polish_center(Point z, double k, std::array<const OrientedCircle*, 3> cs) {
  for (int it = 0; it < 4; ++it) {
    double a11 = 0, a12 = 0, a22 = 0, b1 = 0, b2 = 0;
    for (const auto* c : cs) {
      const Point d = z - c->center;
      const double r = std::abs(d);
      if (r == 0) return z;
      const double want = std::abs(1.0 / k + c->signed_radius());
      const double gx = d.real() / r, gy = d.imag() / r, f = r - want;
      a11 += gx * gx;
      a12 += gx * gy;
      a22 += gy * gy;
      b1 += gx * f;
      b2 += gy * f;
    }
    const double det = a11 * a22 - a12 * a12;
    if (std::abs(det) < 1e-300) return z;
    z -= Point((a22 * b1 - a12 * b2) / det, (a11 * b2 - a12 * b1) / det);
  }
  return z;
}

}  // namespace

OrientedCircle solve_tangent_circle(const OrientedCircle& c1, const OrientedCircle& c2,
                                    const OrientedCircle& c3, int sign) {
  for (const auto* c : {&c1, &c2, &c3}) require_circle(*c, ErrorCode::DegenerateConfiguration);
  for (auto [x, y] : {std::pair{&c1, &c2}, {&c2, &c3}, {&c1, &c3}}) {
    if (tangency_residual(*x, *y) > kPackingTolerance) {
      throw Error(ErrorCode::DegenerateConfiguration, "input circles are not mutually tangent");
    }
  }
  const auto [kp, km] = descartes_fourth(c1.curvature, c2.curvature, c3.curvature);
  const double k4 = sign >= 0 ? kp : km;
  if (std::abs(k4) < kPackingTolerance) {
    throw Error(ErrorCode::DegenerateConfiguration, "the tangent circle is a line");
  }
  const Point w1 = c1.curvature * c1.center, w2 = c2.curvature * c2.center, w3 = c3.curvature * c3.center;
  const Point root = 2.0 * std::sqrt(w1 * w2 + w2 * w3 + w3 * w1);
  std::vector<OrientedCircle> fits;
  for (Point branch : {root, -root}) {
    OrientedCircle c;
    c.curvature = k4;
    c.center = polish_center((w1 + w2 + w3 + branch) / k4, k4, {&c1, &c2, &c3});
    const double res = std::max({tangency_residual(c, c1), tangency_residual(c, c2), tangency_residual(c, c3)});
    if (res <= kPackingTolerance) fits.push_back(c);
  }
  if (fits.empty()) throw Error(ErrorCode::DegenerateConfiguration, "no center fits the three tangencies");
  const bool same_root = std::abs(kp - km) <= kPackingTolerance * std::max(1.0, std::abs(kp));
  if (same_root && fits.size() == 2 && sign < 0) return fits[1];
  return fits[0];
}

std::array<OrientedCircle, 4> root_from_curvatures(const std::array<double, 4>& k) {
  for (double x : k) {
    if (!std::isfinite(x) || x == 0.0) throw Error(ErrorCode::InvalidRoot, "root curvatures must be finite and nonzero");
  }
  if (std::count_if(k.begin(), k.end(), [](double x) { return x < 0; }) > 1) {
    throw Error(ErrorCode::InvalidRoot, "at most one enclosing circle");
  }
  if (descartes_residual(k) > kPackingTolerance) {
    throw Error(ErrorCode::InvalidRoot, "curvatures violate the Descartes relation");
  }
  std::array<OrientedCircle, 4> c;
  for (std::size_t i = 0; i < 4; ++i) c[i].curvature = k[i];
  // The enclosing circle, if any, goes first; the fourth is solved for.
  std::array<std::size_t, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return k[x] < k[y]; });
  const std::size_t i1 = idx[0], i2 = idx[1], i3 = idx[2], i4 = idx[3];
  auto dist = [&](std::size_t x, std::size_t y) { return std::abs(c[x].signed_radius() + c[y].signed_radius()); };
  c[i1].center = 0;
  const double d12 = dist(i1, i2), d13 = dist(i1, i3), d23 = dist(i2, i3);
  c[i2].center = d12;
  const double x = (d13 * d13 - d23 * d23 + d12 * d12) / (2 * d12);
  c[i3].center = Point(x, std::sqrt(std::max(0.0, d13 * d13 - x * x)));
  const auto [kp, km] = descartes_fourth(k[i1], k[i2], k[i3]);
  const double tol = 1e-6 * std::max(1.0, std::abs(k[i4]));
  int sign = 0;
  if (std::abs(kp - k[i4]) <= tol) {
    sign = 1;
  } else if (std::abs(km - k[i4]) <= tol) {
    sign = -1;
  } else {
    throw Error(ErrorCode::InvalidRoot, "fourth curvature is not a Descartes root of the others");
  }
  try {
    c[i4] = solve_tangent_circle(c[i1], c[i2], c[i3], sign);
  } catch (const Error& e) {
    throw Error(ErrorCode::InvalidRoot, e.what());
  }
  c[i4].curvature = k[i4];
  return c;
}

CirclePacking generate_apollonian(const std::array<OrientedCircle, 4>& root, double bound) {
  for (const auto& c : root) require_circle(c, ErrorCode::InvalidRoot);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (tangency_residual(root[i], root[j]) > kPackingTolerance) {
        throw Error(ErrorCode::InvalidRoot, "root circles " + std::to_string(i) + " and " + std::to_string(j) +
                                                " are not tangent");
      }
    }
  }
  std::array<double, 4> ks;
  for (std::size_t i = 0; i < 4; ++i) ks[i] = root[i].curvature;
  if (descartes_residual(ks) > kPackingTolerance) throw Error(ErrorCode::InvalidRoot, "root violates Descartes");

  CirclePacking p;
  p.root_curvatures = ks;
  p.curvature_bound = bound;
  std::map<long long, std::vector<std::size_t>> buckets;
  auto find = [&](const OrientedCircle& c) -> std::optional<std::size_t> {
    auto it = buckets.find(std::llround(c.curvature));
    if (it == buckets.end()) return std::nullopt;
    for (std::size_t i : it->second) {
      const auto& d = p.circles[i];
      if (std::abs(d.curvature - c.curvature) <= kPackingTolerance * std::max(1.0, std::abs(c.curvature)) &&
          std::abs(d.center - c.center) <= kPackingTolerance * std::max(1.0, std::abs(c.center))) {
        return i;
      }
    }
    return std::nullopt;
  };
  auto add = [&](const OrientedCircle& c) {
    p.circles.push_back(c);
    buckets[std::llround(c.curvature)].push_back(p.circles.size() - 1);
    return p.circles.size() - 1;
  };
  // Root circles above the bound are kept: they carry the configuration.
  for (const auto& c : root) add(c);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) p.tangencies.emplace_back(i, j);
  }
  p.quadruples.push_back({0, 1, 2, 3});

  struct Triangle {
    std::size_t i, j, k, opposite;
  };
  std::deque<Triangle> frontier;
  frontier.push_back({1, 2, 3, 0});
  frontier.push_back({0, 2, 3, 1});
  frontier.push_back({0, 1, 3, 2});
  frontier.push_back({0, 1, 2, 3});
  std::size_t generation_size = frontier.size();
  while (!frontier.empty()) {
    if (generation_size == 0) {
      generation_size = frontier.size();
      ++p.generations;
    }
    const Triangle t = frontier.front();
    frontier.pop_front();
    --generation_size;
    const auto &a = p.circles[t.i], &b = p.circles[t.j], &c = p.circles[t.k], &o = p.circles[t.opposite];
    OrientedCircle n;
    n.curvature = 2 * (a.curvature + b.curvature + c.curvature) - o.curvature;
    if (n.curvature > bound) continue;
    if (n.curvature <= 0) throw Error(ErrorCode::InvalidRoot, "reflection produced a non-positive curvature");
    n.center = (2.0 * (a.curvature * a.center + b.curvature * b.center + c.curvature * c.center) -
                o.curvature * o.center) /
               n.curvature;
    if (find(n)) continue;
    const std::size_t id = add(n);
    for (std::size_t x : {t.i, t.j, t.k}) p.tangencies.push_back(ordered(x, id));
    p.quadruples.push_back({t.i, t.j, t.k, id});
    frontier.push_back({t.i, t.j, id, t.k});
    frontier.push_back({t.i, t.k, id, t.j});
    frontier.push_back({t.j, t.k, id, t.i});
  }
  std::sort(p.tangencies.begin(), p.tangencies.end());
  p.tangencies.erase(std::unique(p.tangencies.begin(), p.tangencies.end()), p.tangencies.end());
  return p;
}

CirclePacking generate_apollonian(const std::array<double, 4>& root_curvatures, double bound) {
  return generate_apollonian(root_from_curvatures(root_curvatures), bound);
}

CirclePacking packing_from_circles(std::vector<OrientedCircle> circles,
                                   std::vector<std::pair<std::size_t, std::size_t>> tangencies) {
  CirclePacking p;
  p.circles = std::move(circles);
  for (const auto& c : p.circles) require_circle(c, ErrorCode::InvalidRoot);
  for (auto [i, j] : tangencies) {
    if (i == j || i >= p.circles.size() || j >= p.circles.size()) {
      throw Error(ErrorCode::InvalidRoot, "tangency refers to a missing circle");
    }
    p.tangencies.push_back(ordered(i, j));
  }
  std::sort(p.tangencies.begin(), p.tangencies.end());
  p.tangencies.erase(std::unique(p.tangencies.begin(), p.tangencies.end()), p.tangencies.end());
  return p;
}

PackingAudit audit_packing(const CirclePacking& p) {
  PackingAudit a;
  for (const auto& q : p.quadruples) {
    std::array<double, 4> k;
    for (std::size_t i = 0; i < 4; ++i) k[i] = p.circles[q[i]].curvature;
    a.max_descartes = std::max(a.max_descartes, descartes_residual(k));
  }
  for (auto [i, j] : p.tangencies) {
    a.max_tangency = std::max(a.max_tangency, tangency_residual(p.circles[i], p.circles[j]));
  }
  for (const auto& c : p.circles) {
    a.max_integrality = std::max(a.max_integrality, std::abs(c.curvature - std::round(c.curvature)));
  }
  for (std::size_t i = 0; i < p.circles.size() && a.disjoint; ++i) {
    for (std::size_t j = i + 1; j < p.circles.size(); ++j) {
      const auto &x = p.circles[i], &y = p.circles[j];
      const double d = std::abs(x.center - y.center);
      const double slack = kPackingTolerance * std::max(x.radius(), y.radius());
      bool ok;
      if (x.curvature < 0 || y.curvature < 0) {
        ok = d <= std::abs(x.radius() - y.radius()) + slack;
      } else {
        ok = d >= x.radius() + y.radius() - slack;
      }
      if (!ok) {
        a.disjoint = false;
        break;
      }
    }
  }
  return a;
}

ContactCertificate contact_graph_of_packing(const CirclePacking& p) {
  if (p.circles.empty()) throw Error(ErrorCode::EmbeddingFailure, "empty packing");
  const std::size_t n = p.circles.size();
  std::vector<std::vector<std::pair<double, std::size_t>>> around(n);
  // Direction from the center of x to its tangency point with y.
  auto toward = [&](const OrientedCircle& x, const OrientedCircle& y) {
    Point dir = y.center - x.center;
    if (std::abs(dir) == 0.0) throw Error(ErrorCode::EmbeddingFailure, "concentric tangent circles");
    dir /= std::abs(dir);
    return y.curvature < 0 ? -dir : dir;
  };
  for (auto [i, j] : p.tangencies) {
    around[i].emplace_back(std::arg(toward(p.circles[i], p.circles[j])), j);
    around[j].emplace_back(std::arg(toward(p.circles[j], p.circles[i])), i);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  std::vector<std::vector<VertexId>> rot(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& v = around[i];
    std::sort(v.begin(), v.end());
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
      if (std::abs(v[k].first - v[k + 1].first) < kPackingTolerance) {
        throw Error(ErrorCode::EmbeddingFailure, "two tangencies at one point of " + names[i]);
      }
    }
    for (auto& [angle, j] : v) rot[i].push_back(static_cast<VertexId>(j));
    if (p.circles[i].curvature < 0) std::reverse(rot[i].begin(), rot[i].end());
  }
  ContactCertificate cert;
  try {
    cert.graph = PlaneGraph::from_indices(names, rot);
  } catch (const Error& e) {
    throw Error(ErrorCode::EmbeddingFailure, e.what());
  }
  const auto bip = is_bipartite(cert.graph);
  cert.bipartite = bip.bipartite;
  cert.odd_cycle = bip.odd_cycle;
  const auto& g = cert.graph;
  for (EdgeKey e : g.edges()) {
    const VertexId u = edge_lo(e), v = edge_hi(e);
    for (VertexId w : g.neighbors(u)) {
      if (w > v && g.adjacent(v, w)) {
        cert.triangle = std::array<VertexId, 3>{u, v, w};
        break;
      }
    }
    if (cert.triangle) break;
  }
  return cert;
}

std::string packing_to_svg(const CirclePacking& p, bool overlay_contacts) {
  double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
  bool first = true;
  for (const auto& c : p.circles) {
    const double r = c.radius();
    if (first || c.center.real() - r < lo_x) lo_x = c.center.real() - r;
    if (first || c.center.real() + r > hi_x) hi_x = c.center.real() + r;
    if (first || c.center.imag() - r < lo_y) lo_y = c.center.imag() - r;
    if (first || c.center.imag() + r > hi_y) hi_y = c.center.imag() + r;
    first = false;
  }
  const double w = hi_x - lo_x, h = hi_y - lo_y, stroke = std::max(w, h) / 1000;
  std::ostringstream out;
  out.precision(12);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << lo_x << " " << -hi_y << " " << w << " " << h
      << "\">\n";
  out << "<g fill=\"none\" stroke=\"black\" stroke-width=\"" << stroke << "\">\n";
  for (const auto& c : p.circles) {
    out << "<circle cx=\"" << c.center.real() << "\" cy=\"" << -c.center.imag() << "\" r=\"" << c.radius()
        << "\"/>\n";
  }
  out << "</g>\n";
  if (overlay_contacts) {
    out << "<g stroke=\"#c0392b\" stroke-width=\"" << stroke << "\">\n";
    for (auto [i, j] : p.tangencies) {
      const auto &x = p.circles[i], &y = p.circles[j];
      if (x.curvature < 0 || y.curvature < 0) continue;
      out << "<line x1=\"" << x.center.real() << "\" y1=\"" << -x.center.imag() << "\" x2=\"" << y.center.real()
          << "\" y2=\"" << -y.center.imag() << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace gasket
