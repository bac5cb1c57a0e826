#include "gasket/anchored.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace gasket {

namespace {

std::vector<EdgeKey> image_edges(const GraphTower& tower, const std::vector<EdgeKey>& edges) {
  std::vector<EdgeKey> out;
  out.reserve(edges.size());
  for (EdgeKey e : edges) out.push_back(edge_key(tower.image(edge_lo(e)), tower.image(edge_hi(e))));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t shared_edges(const EmbeddedCycle& x, const EmbeddedCycle& y) {
  std::vector<EdgeKey> both;
  std::set_intersection(x.edges.begin(), x.edges.end(), y.edges.begin(), y.edges.end(),
                        std::back_inserter(both));
  return both.size();
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t x, std::size_t y) { parent[find(x)] = find(y); }
};

std::string histogram(const std::map<std::size_t, std::size_t>& h) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto [k, n] : h) {
    out << (first ? "" : ", ") << n << " with " << k;
    first = false;
  }
  out << "}";
  return out.str();
}

}  // namespace

std::size_t AnchoredCycleSet::sibling_count(std::size_t i) const {
  std::size_t n = 0;
  for (auto [x, y] : siblings) n += (x == i) + (y == i);
  return n;
}

AnchoredCycleSet shortest_anchored_cycles(const GraphTower& tower, const Per2Core& core, int level) {
  if (level < 1 || level > tower.depth()) {
    throw Error(ErrorCode::NotFound, "level " + std::to_string(level) + " is not in the tower");
  }
  const PlaneGraph& g = tower.level(level);
  const auto loop = critical_loop(core);
  AnchoredCycleSet out;
  out.level = level;
  out.l = loop.l;
  auto search = shortest_cycles_through_edge(g, core.a0, core.b0, 2 * loop.l, true);
  for (auto& c : search.cycles) {
    if (c.length() != 2 * loop.l) continue;
    AnchoredCycle ac;
    ac.cycle = std::move(c);
    for (VertexId v : ac.cycle.vertices) ac.birth = std::max(ac.birth, tower.birth_level(v));
    auto cur = ac.cycle.edges;
    std::size_t j = 0;
    while (cur != loop.cycle.edges) {
      if (j == static_cast<std::size_t>(level)) {
        throw Error(ErrorCode::OrbitEscape,
                    "anchored cycle through " + g.name(ac.cycle.vertices[2]) + " never reaches the critical loop");
      }
      cur = image_edges(tower, cur);
      ++j;
    }
    ac.iteration = j;
    out.cycles.push_back(std::move(ac));
  }
  std::sort(out.cycles.begin(), out.cycles.end(), [](const AnchoredCycle& x, const AnchoredCycle& y) {
    return std::tie(x.iteration, x.birth, x.cycle.edges) < std::tie(y.iteration, y.birth, y.cycle.edges);
  });
  if (out.cycles.empty() || out.cycles[0].iteration != 0) {
    throw Error(ErrorCode::NotUnique, "the critical loop is not a shortest anchored cycle");
  }
  for (std::size_t i = 0; i < out.cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < out.cycles.size(); ++j) {
      if (shared_edges(out.cycles[i].cycle, out.cycles[j].cycle) > 1) out.siblings.emplace_back(i, j);
    }
  }
  return out;
}

void SiblingReport::check() const {
  if (matches) return;
  std::string msg = "expected " + expected + ", observed " + observed;
  if (counterexample) {
    msg += " (cycles " + std::to_string(counterexample->first) + " and " +
           std::to_string(counterexample->second) + ")";
  }
  throw Error(ErrorCode::PatternViolation, msg);
}

SiblingReport sibling_report(const AnchoredCycleSet& s, GasketType type) {
  SiblingReport r;
  r.type = type;
  r.level = s.level;
  r.pairs = s.siblings;
  const std::size_t n = s.cycles.size();
  r.counts.resize(n);
  for (std::size_t i = 0; i < n; ++i) r.counts[i] = s.sibling_count(i);
  for (std::size_t i = 0; i < n; ++i) {
    (s.cycles[i].birth < s.level ? r.resolved : r.boundary).push_back(i);
  }
  auto partner_of = [&](std::size_t i) {
    std::vector<std::size_t> out;
    for (auto [x, y] : s.siblings) {
      if (x == i) out.push_back(y);
      if (y == i) out.push_back(x);
    }
    return out;
  };
  const auto loop_siblings = partner_of(0);
  const bool loop_resolved = s.cycles[0].birth < s.level;
  auto first_pair_of = [&](std::size_t i) -> std::optional<std::pair<std::size_t, std::size_t>> {
    for (auto p : s.siblings) {
      if (p.first == i || p.second == i) return p;
    }
    return std::nullopt;
  };

  std::map<std::size_t, std::size_t> hist;
  for (std::size_t i : r.resolved) {
    if (i != 0) ++hist[r.counts[i]];
  }
  r.observed = "critical loop has " + std::to_string(r.counts[0]) + (r.counts[0] == 1 ? " sibling" : " siblings") + "; other resolved cycles by sibling count " +
               histogram(hist) + "; " + std::to_string(r.boundary.size()) + " boundary cycles";

  r.matches = true;
  auto fail = [&](std::optional<std::pair<std::size_t, std::size_t>> p) {
    if (r.matches) r.counterexample = p;
    r.matches = false;
  };
  switch (type) {
    case GasketType::I:
      r.expected = "no cycle has a sibling";
      for (std::size_t i : r.resolved) {
        if (r.counts[i] != 0) fail(first_pair_of(i));
      }
      break;
    case GasketType::IIA:
      r.expected = "the critical loop has one sibling and no other cycle has siblings";
      if (loop_resolved && loop_siblings.size() != 1) fail(first_pair_of(0));
      for (std::size_t i : r.resolved) {
        if (i == 0 || std::find(loop_siblings.begin(), loop_siblings.end(), i) != loop_siblings.end()) continue;
        if (r.counts[i] != 0) fail(first_pair_of(i));
      }
      for (std::size_t i : loop_siblings) {
        if (s.cycles[i].birth < s.level && r.counts[i] != 1) fail(first_pair_of(i));
      }
      break;
    case GasketType::IIB:
      r.expected = "the critical loop has two siblings and every other resolved cycle has exactly one";
      if (loop_resolved && loop_siblings.size() != 2) fail(first_pair_of(0));
      for (std::size_t i : r.resolved) {
        if (i == 0 || std::find(loop_siblings.begin(), loop_siblings.end(), i) != loop_siblings.end()) continue;
        if (r.counts[i] != 1) {
          auto p = partner_of(i);
          fail(p.empty() ? std::nullopt
                         : std::optional(std::pair(std::min(i, p.back()), std::max(i, p.back()))));
        }
      }
      break;
  }
  return r;
}

const Gap& GapDecomposition::gap(int n) const {
  for (const Gap& g : gaps) {
    if (g.index == n) return g;
  }
  throw Error(ErrorCode::NotFound, "no gap R" + std::to_string(n) + " at level " + std::to_string(level));
}

GapDecomposition gap_decomposition(const GraphTower& tower, const AnchoredCycleSet& s) {
  if (s.cycles.size() < 2) {
    throw Error(ErrorCode::NotEnoughCycles,
                "level " + std::to_string(s.level) + " has " + std::to_string(s.cycles.size()) + " anchored cycles");
  }
  const PlaneGraph& g = tower.level(s.level);
  const VertexId a = tower.fixed_a(), b = tower.fixed_b();
  const EdgeKey e0 = edge_key(a, b);
  std::set<EdgeKey> u_edges;
  for (const auto& c : s.cycles) {
    for (EdgeKey e : c.cycle.edges) {
      if (e != e0) u_edges.insert(e);
    }
  }
  const std::vector<EdgeKey> u_list(u_edges.begin(), u_edges.end());
  const PlaneGraph u = g.subgraph(u_list);
  std::vector<VertexId> to_g(u.vertex_count()), to_u(g.vertex_count(), kNoVertex);
  for (VertexId x = 0; x < u.vertex_count(); ++x) {
    to_g[x] = g.at(u.name(x));
    to_u[to_g[x]] = x;
  }

  GapDecomposition out;
  out.level = s.level;
  out.gaps.resize(u.face_count());
  for (FaceId f = 0; f < u.face_count(); ++f) {
    for (DartId d : u.faces()[f]) out.gaps[f].boundary.push_back(to_g[u.tail(d)]);
  }

  // Face of G^level around the corner of U containing the dart w -> x.
  auto corner_face = [&](VertexId w, VertexId x) {
    DartId d = g.dart(w, x);
    do d = g.prev_around(d);
    while (!u_edges.contains(edge_key(w, g.head(d))));
    const DartId ud = u.dart(to_u[w], to_u[g.head(d)]);
    return u.face_of(u.next_around(ud));
  };

  const std::size_t none = u.face_count();
  UnionFind uf(g.vertex_count());
  for (EdgeKey e : g.edges()) {
    const VertexId x = edge_lo(e), y = edge_hi(e);
    if (to_u[x] == kNoVertex && to_u[y] == kNoVertex) uf.unite(x, y);
  }
  std::vector<std::size_t> comp_face(g.vertex_count(), none);
  std::vector<std::pair<EdgeKey, std::size_t>> edge_face;
  auto settle = [&](VertexId inner, std::size_t f) {
    std::size_t& slot = comp_face[uf.find(inner)];
    if (slot != none && slot != f) {
      throw Error(ErrorCode::Inconsistent, "component of " + g.name(inner) + " touches two gaps");
    }
    slot = f;
  };
  for (EdgeKey e : g.edges()) {
    if (u_edges.contains(e)) continue;
    const VertexId x = edge_lo(e), y = edge_hi(e);
    if (to_u[x] != kNoVertex && to_u[y] != kNoVertex) {
      const auto f = corner_face(x, y);
      if (corner_face(y, x) != f) throw Error(ErrorCode::Inconsistent, "chord with two sides");
      edge_face.emplace_back(e, f);
    } else if (to_u[x] != kNoVertex) {
      const auto f = corner_face(x, y);
      settle(y, f);
      edge_face.emplace_back(e, f);
    } else if (to_u[y] != kNoVertex) {
      const auto f = corner_face(y, x);
      settle(x, f);
      edge_face.emplace_back(e, f);
    }
  }
  for (EdgeKey e : g.edges()) {
    const VertexId x = edge_lo(e), y = edge_hi(e);
    if (to_u[x] == kNoVertex && to_u[y] == kNoVertex) edge_face.emplace_back(e, comp_face[uf.find(x)]);
  }

  std::vector<std::set<VertexId>> verts(u.face_count());
  std::vector<std::set<EdgeKey>> edges(u.face_count());
  for (FaceId f = 0; f < u.face_count(); ++f) {
    for (DartId d : u.faces()[f]) {
      verts[f].insert(to_g[u.tail(d)]);
      edges[f].insert(edge_key(to_g[u.tail(d)], to_g[u.head(d)]));
    }
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (to_u[v] != kNoVertex) continue;
    const std::size_t f = comp_face[uf.find(v)];
    if (f == none) throw Error(ErrorCode::Inconsistent, g.name(v) + " lies in no gap");
    verts[f].insert(v);
  }
  for (auto [e, f] : edge_face) {
    edges[f].insert(e);
    if (e == e0) out.e0_gap = f;
  }
  out.vertex_gaps.resize(g.vertex_count());
  for (FaceId f = 0; f < u.face_count(); ++f) {
    Gap& gap = out.gaps[f];
    gap.vertices.assign(verts[f].begin(), verts[f].end());
    gap.edges.assign(edges[f].begin(), edges[f].end());
    gap.contains_e0 = f == out.e0_gap;
    for (VertexId v : gap.vertices) out.vertex_gaps[v].push_back(f);
  }

  // R0 lies between C0 and the first C1 whose arc bounds a common face with it.
  const auto& c0 = s.cycles[0].cycle.edges;
  for (std::size_t i = 1; i < s.cycles.size() && !out.r0; ++i) {
    if (s.cycles[i].iteration != 1) continue;
    const auto& c1 = s.cycles[i].cycle.edges;
    std::vector<EdgeKey> sym;
    std::set_symmetric_difference(c0.begin(), c0.end(), c1.begin(), c1.end(), std::back_inserter(sym));
    for (FaceId f = 0; f < u.face_count(); ++f) {
      if (f == out.e0_gap) continue;
      std::set<EdgeKey> bd;
      for (DartId d : u.faces()[f]) bd.insert(edge_key(to_g[u.tail(d)], to_g[u.head(d)]));
      if (std::equal(bd.begin(), bd.end(), sym.begin(), sym.end())) {
        out.r0 = f;
        out.r0_partner = i;
        break;
      }
    }
  }
  if (out.r0) {
    // Faces in counterclockwise order of their corners at a.
    std::vector<std::size_t> order;
    const VertexId ua = to_u[a];
    for (std::size_t i = 0; i < u.degree(ua); ++i) {
      const std::size_t f = u.face_of(u.first_dart(ua) + static_cast<DartId>(i));
      if (std::find(order.begin(), order.end(), f) == order.end()) order.push_back(f);
    }
    const std::size_t m = order.size();
    const std::size_t p = static_cast<std::size_t>(std::find(order.begin(), order.end(), *out.r0) - order.begin());
    out.gaps[*out.r0].index = 0;
    for (std::size_t k = 1; k < m && order[(p + k) % m] != out.e0_gap; ++k) {
      out.gaps[order[(p + k) % m]].index = static_cast<int>(k);
    }
    for (std::size_t k = 1; k < m && order[(p + m - k) % m] != out.e0_gap; ++k) {
      auto& idx = out.gaps[order[(p + m - k) % m]].index;
      if (!idx) idx = -static_cast<int>(k);
    }
  }
  return out;
}

PlaneGraph gap_subgraph(const GraphTower& tower, const GapDecomposition& gaps, std::size_t gap) {
  const Gap& x = gaps.gaps.at(gap);
  return tower.level(gaps.level).subgraph(x.edges, x.vertices);
}

void for_each_local_geodesic(const PlaneGraph& g, const GeodesicSearch& q,
                             const std::function<bool(const Path&)>& visit) {
  const std::size_t n = g.vertex_count();
  auto edge_ok = [&](VertexId x, VertexId y) { return !q.edge_ok || q.edge_ok(x, y); };
  // Distance to the target set through admissible vertices.
  std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
  std::queue<VertexId> bfs;
  for (VertexId v = 0; v < n; ++v) {
    if (q.is_target(v)) {
      dist[v] = 0;
      bfs.push(v);
    }
  }
  while (!bfs.empty()) {
    const VertexId x = bfs.front();
    bfs.pop();
    if (dist[x] > 0 && !q.interior_ok(x)) continue;
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] != std::numeric_limits<std::size_t>::max() || !edge_ok(x, y)) continue;
      dist[y] = dist[x] + 1;
      bfs.push(y);
    }
  }
  if (dist[q.from] > q.max_len) return;

  Path path{q.from};
  std::vector<char> on_path(n, 0);
  on_path[q.from] = 1;
  std::size_t found = 0;
  bool stop = false;
  std::function<void()> rec = [&]() {
    const VertexId x = path.back();
    const std::size_t len = path.size() - 1;
    for (VertexId y : g.neighbors(x)) {
      if (stop) return;
      if (on_path[y] || !edge_ok(x, y)) continue;
      if (len + 1 + dist[y] > q.max_len) continue;
      const bool target = q.is_target(y);
      if (!target && !q.interior_ok(y)) continue;
      bool chord = false;
      for (std::size_t i = 0; i + 1 < path.size() && !chord; ++i) chord = g.adjacent(path[i], y);
      if (chord) continue;
      path.push_back(y);
      if (target) {
        if (++found > q.limit) {
          throw Error(ErrorCode::LimitExceeded, "more than " + std::to_string(q.limit) + " local geodesics");
        }
        if (!visit(path)) stop = true;
      } else {
        on_path[y] = 1;
        rec();
        on_path[y] = 0;
      }
      path.pop_back();
    }
  };
  rec();
}

std::vector<Path> local_geodesics(const PlaneGraph& g, VertexId u, VertexId v, std::size_t max_len,
                                  std::size_t limit) {
  if (u >= g.vertex_count() || v >= g.vertex_count()) throw Error(ErrorCode::UnknownVertex, "endpoint outside graph");
  if (u == v) throw Error(ErrorCode::Inconsistent, "local geodesic endpoints coincide");
  std::vector<Path> out;
  GeodesicSearch q;
  q.from = u;
  q.is_target = [v](VertexId x) { return x == v; };
  q.interior_ok = [](VertexId) { return true; };
  q.max_len = max_len;
  q.limit = limit;
  for_each_local_geodesic(g, q, [&](const Path& p) {
    out.push_back(p);
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

R0Frame r0_frame(const GraphTower& tower, const AnchoredCycleSet& s, const GapDecomposition& gaps) {
  if (!gaps.r0_partner) throw Error(ErrorCode::NotFound, "R0 is not formed at level " + std::to_string(gaps.level));
  auto arc = [](const EmbeddedCycle& c) {
    // c runs a0, b0, ...; the arc is the rest read from the far end of E0.
    std::vector<VertexId> v(c.vertices.begin() + 2, c.vertices.end());
    return v;
  };
  R0Frame fr;
  fr.l = s.l;
  const auto& c0 = s.cycles[0].cycle;
  const auto& c1 = s.cycles[*gaps.r0_partner].cycle;
  const VertexId a0 = c0.vertices[0], b0 = c0.vertices[1];
  auto x0 = arc(c0);
  fr.a.push_back(a0);
  fr.a.insert(fr.a.end(), x0.rbegin(), x0.rend());
  fr.a.push_back(b0);
  auto x1 = arc(c1);
  fr.b.push_back(b0);
  fr.b.insert(fr.b.end(), x1.begin(), x1.end());
  fr.b.push_back(a0);
  for (std::size_t i = 0; i < fr.a.size(); ++i) {
    if (tower.image(fr.b[i]) != fr.a[i]) {
      throw Error(ErrorCode::Inconsistent, "C1 does not cover C0 vertex by vertex at " +
                                               tower.level(gaps.level).name(fr.b[i]));
    }
  }
  return fr;
}

R0ArcReport r0_arc_search(const GraphTower& tower, const AnchoredCycleSet& s,
                          const GapDecomposition& gaps, std::size_t max_len) {
  if (gaps.level + 1 > tower.depth()) {
    throw Error(ErrorCode::NotFound, "arcs at level " + std::to_string(gaps.level) + " need the tower to reach level " +
                                         std::to_string(gaps.level + 1));
  }
  R0ArcReport rep;
  rep.level = gaps.level;
  if (!gaps.r0) {
    rep.note = "R0 is not formed at this level";
    return rep;
  }
  const PlaneGraph& g = tower.level(gaps.level);
  const R0Frame fr = r0_frame(tower, s, gaps);
  const Gap& r0 = gaps.gaps[*gaps.r0];
  const std::size_t l = fr.l;
  const VertexId a0 = fr.a[0], al = fr.a[l], bl = fr.b[l], a1 = fr.a[1];

  std::vector<char> closure(g.vertex_count(), 0), boundary(g.vertex_count(), 0), on_c0(g.vertex_count(), 0);
  for (VertexId v : r0.vertices) closure[v] = 1;
  for (VertexId v : fr.a) boundary[v] = on_c0[v] = 1;
  for (VertexId v : fr.b) boundary[v] = 1;
  const std::set<EdgeKey> closure_edges(r0.edges.begin(), r0.edges.end());
  auto in_closure = [&](VertexId x, VertexId y) { return closure_edges.contains(edge_key(x, y)); };

  // K: a_l to some b_i (0 < i < 2l-1) through Int R0, avoiding the neighbours of a0.
  std::vector<char> k_target(g.vertex_count(), 0);
  for (std::size_t i = 1; i + 1 < fr.b.size(); ++i) k_target[fr.b[i]] = 1;
  for (std::size_t len = 1; len <= max_len && !rep.k; ++len) {
    GeodesicSearch q;
    q.from = al;
    q.max_len = len;
    q.is_target = [&](VertexId v) { return k_target[v] != 0; };
    q.interior_ok = [&](VertexId v) { return closure[v] && !boundary[v] && !g.adjacent(v, a0); };
    q.edge_ok = in_closure;
    for_each_local_geodesic(g, q, [&](const Path& p) {
      rep.k = p.size() - 1;
      rep.k_witness = p;
      return false;
    });
  }

  // N: R0-arcs a_l to a0 with a lift from b_l to a1.
  for (std::size_t len = 1; len <= max_len && !rep.n; ++len) {
    GeodesicSearch q;
    q.from = al;
    q.max_len = len;
    q.is_target = [&](VertexId v) { return v == a0; };
    q.interior_ok = [&](VertexId v) { return closure[v] && !on_c0[v]; };
    q.edge_ok = in_closure;
    for_each_local_geodesic(g, q, [&](const Path& p) {
      if (p.size() - 1 != len) return true;
      for (const Path& lift : enumerate_lifts(tower, p, bl)) {
        if (lift.back() == a1) {
          rep.n = len;
          rep.n_witness = p;
          return false;
        }
      }
      return true;
    });
  }
  if (rep.n && rep.k) rep.bound_holds = *rep.n <= *rep.k + 2 * l - 1;
  if (!rep.n || !rep.k) rep.note = "not found within length " + std::to_string(max_len);
  return rep;
}

SymmetryVerdict disk_symmetry(const PlaneGraph& disk, const std::vector<VertexId>& arc_a,
                              const std::vector<VertexId>& arc_b) {
  SymmetryVerdict v;
  v.disk_vertices = disk.vertex_count();
  std::vector<char> rigid(disk.vertex_count(), 1);
  for (VertexId x : arc_a) rigid[x] = 0;
  for (VertexId x : arc_b) rigid[x] = 0;
  v.interior_vertices = static_cast<std::size_t>(std::count(rigid.begin(), rigid.end(), 1));
  v.trivial = v.interior_vertices == 0;
  if (arc_a.size() != arc_b.size()) {
    v.detail = "boundary arcs have different lengths";
    return v;
  }
  std::vector<std::pair<VertexId, VertexId>> pins;
  for (std::size_t i = 0; i < arc_a.size(); ++i) {
    pins.emplace_back(arc_a[i], arc_b[i]);
    pins.emplace_back(arc_b[i], arc_a[i]);
  }
  auto found = embedded_automorphisms(disk, pins, 1, rigid);
  if (!found.empty()) {
    v.symmetric = true;
    v.witness = std::move(found.front());
    v.detail = "exchange of the boundary arcs extends to the disk";
  } else {
    v.detail = "no rotation-preserving extension of the boundary arc exchange";
  }
  if (v.trivial) v.detail += "; no interior vertices, so only the boundary arcs were compared";
  return v;
}

SymmetryVerdict gap_symmetry_test(const GraphTower& tower, const AnchoredCycleSet& s,
                                  const GapDecomposition& gaps) {
  if (!gaps.r0) throw Error(ErrorCode::NotEnoughCycles, "R0 is not formed at level " + std::to_string(gaps.level));
  const PlaneGraph& g = tower.level(gaps.level);
  const PlaneGraph disk = gap_subgraph(tower, gaps, *gaps.r0);
  const R0Frame fr = r0_frame(tower, s, gaps);
  std::vector<VertexId> a, b;
  for (VertexId x : fr.a) a.push_back(disk.at(g.name(x)));
  for (VertexId x : fr.b) b.push_back(disk.at(g.name(x)));
  auto v = disk_symmetry(disk, a, b);
  v.level = gaps.level;
  return v;
}

GridDisk grid_disk(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::Inconsistent, "grid needs at least two rows");
  auto name = [](std::size_t i, std::size_t j) { return std::to_string(i) + "," + std::to_string(j); };
  std::vector<std::string> names;
  RotationTable rot;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(name(i, j));
      auto& r = rot[name(i, j)];
      if (i + 1 < n) r.push_back(name(i + 1, j));
      if (j + 1 < n) r.push_back(name(i, j + 1));
      if (i > 0) r.push_back(name(i - 1, j));
      if (j > 0) r.push_back(name(i, j - 1));
    }
  }
  GridDisk out;
  out.graph = PlaneGraph::build(names, rot);
  for (std::size_t i = 0; i < n; ++i) out.arc_a.push_back(out.graph.at(name(i, 0)));
  for (std::size_t j = 1; j < n; ++j) out.arc_a.push_back(out.graph.at(name(n - 1, j)));
  for (std::size_t i = n; i-- > 0;) out.arc_b.push_back(out.graph.at(name(i, n - 1)));
  for (std::size_t j = n - 1; j-- > 0;) out.arc_b.push_back(out.graph.at(name(0, j)));
  return out;
}

}  // namespace gasket
