#pragma once

// Brute-force reference implementations and the small-graph corpus shared by
// the unit tests and the acceptance runner. Nothing here reuses the search
// code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gasket/anchored.hpp"

namespace oracle {

using gasket::EdgeKey;
using gasket::Path;
using gasket::PlaneGraph;
using gasket::VertexId;

// Straight-line drawing to rotation system: neighbours sorted by angle.
inline PlaneGraph drawn(const std::vector<std::complex<double>>& pts,
                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<std::vector<VertexId>> rot(pts.size());
  for (auto [a, b] : edges) {
    rot[a].push_back(b);
    rot[b].push_back(a);
  }
  for (VertexId v = 0; v < pts.size(); ++v) {
    std::sort(rot[v].begin(), rot[v].end(), [&](VertexId x, VertexId y) {
      return std::arg(pts[x] - pts[v]) < std::arg(pts[y] - pts[v]);
    });
  }
  std::vector<std::string> names;
  for (VertexId v = 0; v < pts.size(); ++v) names.push_back("v" + std::to_string(v));
  return PlaneGraph::from_indices(std::move(names), std::move(rot));
}

inline std::complex<double> polar(double r, double deg) { return std::polar(r, deg * M_PI / 180.0); }

inline std::vector<std::pair<std::string, PlaneGraph>> hand_graphs() {
  std::vector<std::pair<std::string, PlaneGraph>> out;
  out.emplace_back("triangle", drawn({{0, 0}, {1, 0}, {0, 1}}, {{0, 1}, {1, 2}, {2, 0}}));
  out.emplace_back("square", drawn({{0, 0}, {1, 0}, {1, 1}, {0, 1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));
  out.emplace_back("claw", drawn({{0, 0}, {1, 0}, {-1, 1}, {-1, -1}}, {{0, 1}, {0, 2}, {0, 3}}));
  out.emplace_back("k4", drawn({{0, 0}, polar(1, 90), polar(1, 210), polar(1, 330)},
                               {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}}));
  out.emplace_back("theta", drawn({{0, 1}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}},
                                  {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
  {
    std::vector<std::complex<double>> p{{0, 0}};
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 5; ++i) {
      p.push_back(polar(1, 72.0 * i));
      e.emplace_back(0, i + 1);
      e.emplace_back(i + 1, (i + 1) % 5 + 1);
    }
    out.emplace_back("wheel5", drawn(p, e));
  }
  {
    std::vector<std::complex<double>> p{{-2, -2}, {2, -2}, {2, 2}, {-2, 2}, {-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
    std::vector<std::pair<VertexId, VertexId>> e;
    for (VertexId i = 0; i < 4; ++i) {
      e.emplace_back(i, (i + 1) % 4);
      e.emplace_back(i + 4, (i + 1) % 4 + 4);
      e.emplace_back(i, i + 4);
    }
    out.emplace_back("cube", drawn(p, e));
  }
  out.emplace_back("octahedron",
                   drawn({polar(3, 90), polar(3, 210), polar(3, 330), polar(1, 270), polar(1, 30), polar(1, 150)},
                         {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {3, 1}, {3, 2}, {4, 2}, {4, 0}, {5, 0}, {5, 1}}));
  out.emplace_back("grid3", gasket::grid_disk(3).graph);
  out.emplace_back("path", drawn({{0, 0}, {1, 0}, {2, 0}, {3, 0}}, {{0, 1}, {1, 2}, {2, 3}}));
  return out;
}

// Hand graphs plus every tower level of a bundled core with at most
// `max_edges` edges.
inline std::vector<std::pair<std::string, PlaneGraph>> corpus(std::size_t max_edges = 12) {
  auto out = hand_graphs();
  for (const auto& core : gasket::bundled_cores()) {
    const auto tower = gasket::build_tower(core.spec, 3);
    for (int k = 0; k <= tower.depth(); ++k) {
      if (tower.level(k).edge_count() <= max_edges) {
        out.emplace_back(core.name() + "/G" + std::to_string(k), tower.level(k));
      }
    }
  }
  std::erase_if(out, [&](const auto& x) { return x.second.edge_count() > max_edges; });
  return out;
}

inline std::vector<EdgeKey> edge_set(const Path& cycle) {
  std::vector<EdgeKey> e;
  for (std::size_t i = 0; i < cycle.size(); ++i) e.push_back(gasket::edge_key(cycle[i], cycle[(i + 1) % cycle.size()]));
  std::sort(e.begin(), e.end());
  return e;
}

// Every simple path from u, with at most max_len edges, handed to visit.
inline void simple_paths(const PlaneGraph& g, VertexId u, std::size_t max_len,
                         const std::function<void(const Path&)>& visit) {
  Path p{u};
  std::vector<char> used(g.vertex_count(), 0);
  used[u] = 1;
  std::function<void()> rec = [&] {
    visit(p);
    if (p.size() - 1 == max_len) return;
    for (VertexId w : g.neighbors(p.back())) {
      if (used[w]) continue;
      used[w] = 1;
      p.push_back(w);
      rec();
      p.pop_back();
      used[w] = 0;
    }
  };
  rec();
}

// Edge sets of the shortest simple cycles through [u, v], by closing every
// simple v -> u path that avoids the edge itself.
inline std::set<std::vector<EdgeKey>> shortest_cycles(const PlaneGraph& g, VertexId u, VertexId v) {
  std::set<std::vector<EdgeKey>> best;
  std::size_t best_len = SIZE_MAX;
  simple_paths(g, v, g.vertex_count(), [&](const Path& p) {
    if (p.back() != u || p.size() < 3) return;
    Path c(p.begin(), p.end());
    if (c.size() > best_len) return;
    if (c.size() < best_len) {
      best.clear();
      best_len = c.size();
    }
    best.insert(edge_set(c));
  });
  return best;
}

inline std::size_t girth(const PlaneGraph& g) {
  std::size_t best = SIZE_MAX;
  for (EdgeKey e : g.edges()) {
    const auto s = shortest_cycles(g, gasket::edge_lo(e), gasket::edge_hi(e));
    if (!s.empty()) best = std::min(best, s.begin()->size());
  }
  return best;
}

inline bool chord_free(const PlaneGraph& g, const Path& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      if (g.adjacent(p[i], p[j])) return false;
    }
  }
  return true;
}

// Plain path enumeration followed by the chord filter.
inline std::vector<Path> local_geodesics(const PlaneGraph& g, VertexId u, VertexId v, std::size_t max_len) {
  std::vector<Path> out;
  simple_paths(g, u, max_len, [&](const Path& p) {
    if (p.back() == v && chord_free(g, p)) out.push_back(p);
  });
  std::sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

// Every simple cycle of length 2l through E0 in a level, as edge sets.
inline std::set<std::vector<EdgeKey>> anchored_cycles(const PlaneGraph& g, VertexId a, VertexId b, std::size_t len) {
  std::set<std::vector<EdgeKey>> out;
  simple_paths(g, b, len - 1, [&](const Path& p) {
    if (p.size() == len && p.back() == a) out.insert(edge_set(p));
  });
  return out;
}

inline std::size_t bfs_distance(const PlaneGraph& g, VertexId u, VertexId v) {
  std::vector<std::size_t> d(g.vertex_count(), SIZE_MAX);
  std::vector<VertexId> q{u};
  d[u] = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (VertexId w : g.neighbors(q[i])) {
      if (d[w] == SIZE_MAX) {
        d[w] = d[q[i]] + 1;
        q.push_back(w);
      }
    }
  }
  return d[v];
}

// Girth from one BFS per root: every non-tree edge closes a cycle of length
// at most d(u) + d(w) + 1, with equality at a root on a shortest cycle.
inline std::size_t bfs_girth(const PlaneGraph& g) {
  std::size_t best = SIZE_MAX;
  for (VertexId r = 0; r < g.vertex_count(); ++r) {
    std::vector<std::size_t> d(g.vertex_count(), SIZE_MAX);
    std::vector<VertexId> parent(g.vertex_count(), gasket::kNoVertex), q{r};
    d[r] = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      const VertexId u = q[i];
      for (VertexId w : g.neighbors(u)) {
        if (d[w] == SIZE_MAX) {
          d[w] = d[u] + 1;
          parent[w] = u;
          q.push_back(w);
        } else if (parent[u] != w) {
          best = std::min(best, d[u] + d[w] + 1);
        }
      }
    }
  }
  return best;
}

// Edge-preserving bijection that keeps the cyclic neighbour order at every
// vertex of degree >= 3.
inline bool preserves_embedding(const PlaneGraph& g, const std::vector<VertexId>& p) {
  for (EdgeKey e : g.edges()) {
    if (!g.adjacent(p[gasket::edge_lo(e)], p[gasket::edge_hi(e)])) return false;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto n = g.neighbors(v);
    if (n.size() < 3) continue;
    const auto m = g.neighbors(p[v]);
    const auto at = std::find(m.begin(), m.end(), p[n[0]]) - m.begin();
    for (std::size_t i = 0; i < n.size(); ++i) {
      if (m[(at + i) % m.size()] != p[n[i]]) return false;
    }
  }
  return true;
}

}  // namespace oracle
