#include <algorithm>
#include <numeric>
#include <queue>

#include "gasket/plane_graph.hpp"

namespace gasket {

namespace {

// Distances to `target` in g with the edge `skip` removed.
std::vector<VertexId> distances_avoiding(const PlaneGraph& g, VertexId target, EdgeKey skip) {
  std::vector<VertexId> dist(g.vertex_count(), kNoVertex);
  std::queue<VertexId> q;
  dist[target] = 0;
  q.push(target);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] != kNoVertex || edge_key(x, y) == skip) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

struct CycleCollector {
  const PlaneGraph& g;
  VertexId anchor;
  const std::vector<VertexId>& dist;
  std::size_t min_len;
  std::size_t max_len;
  std::vector<VertexId> path;
  std::vector<char> on_path;
  std::vector<EmbeddedCycle> out;

  void extend() {
    const VertexId x = path.back();
    const std::size_t used = path.size() - 1;  // edges so far
    for (VertexId y : g.neighbors(x)) {
      if (y == anchor) {
        if (path.size() >= 3 && used + 1 >= min_len && used + 1 <= max_len) out.push_back(make_cycle(path));
        continue;
      }
      if (on_path[y] || dist[y] == kNoVertex) continue;
      if (used + 1 + dist[y] > max_len) continue;
      path.push_back(y);
      on_path[y] = 1;
      extend();
      on_path[y] = 0;
      path.pop_back();
    }
  }
};

}  // namespace

CycleSearch shortest_cycles_through_edge(const PlaneGraph& g, VertexId u, VertexId v,
                                         std::size_t max_len, bool all_up_to_max) {
  if (!g.adjacent(u, v)) throw Error(ErrorCode::UnknownVertex, "edge not in graph");
  CycleSearch result;
  result.girth = girth(g);
  const auto dist = distances_avoiding(g, u, edge_key(u, v));
  if (dist[v] == kNoVertex) return result;
  const std::size_t shortest = dist[v] + 1;
  result.min_length = shortest;
  const std::size_t hi = all_up_to_max ? max_len : std::min(max_len, shortest);
  const std::size_t lo = all_up_to_max ? 3 : shortest;
  if (hi < lo) return result;
  CycleCollector c{g, u, dist, lo, hi, {u, v}, std::vector<char>(g.vertex_count(), 0), {}};
  c.on_path[u] = c.on_path[v] = 1;
  c.extend();
  std::sort(c.out.begin(), c.out.end());
  c.out.erase(std::unique(c.out.begin(), c.out.end()), c.out.end());
  result.cycles = std::move(c.out);
  return result;
}

std::optional<std::size_t> girth(const PlaneGraph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<VertexId> dist(g.vertex_count());
  std::vector<VertexId> parent(g.vertex_count());
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    std::fill(dist.begin(), dist.end(), kNoVertex);
    std::queue<VertexId> q;
    dist[s] = 0;
    parent[s] = kNoVertex;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
      for (VertexId y : g.neighbors(x)) {
        if (dist[y] == kNoVertex) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (parent[x] != y) {
          best = std::min<std::size_t>(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return best;
}

std::vector<VertexId> bfs_distances(const PlaneGraph& g, VertexId source) {
  std::vector<VertexId> dist(g.vertex_count(), kNoVertex);
  std::queue<VertexId> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    for (VertexId y : g.neighbors(x)) {
      if (dist[y] == kNoVertex) {
        dist[y] = dist[x] + 1;
        q.push(y);
      }
    }
  }
  return dist;
}

std::size_t graph_distance(const PlaneGraph& g, VertexId u, VertexId v) {
  const auto d = bfs_distances(g, u).at(v);
  if (d == kNoVertex) throw Error(ErrorCode::Unreachable, g.name(u) + " -> " + g.name(v));
  return d;
}

BipartiteVerdict is_bipartite(const PlaneGraph& g) {
  const std::size_t n = g.vertex_count();
  // Deterministic traversal: names in lexicographic order.
  std::vector<VertexId> by_name(n);
  std::iota(by_name.begin(), by_name.end(), 0);
  std::sort(by_name.begin(), by_name.end(),
            [&](VertexId a, VertexId b) { return g.name(a) < g.name(b); });
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[by_name[i]] = i;

  BipartiteVerdict verdict;
  std::vector<int> color(n, -1);
  std::vector<VertexId> parent(n, kNoVertex);
  std::vector<VertexId> depth(n, 0);
  std::queue<VertexId> q;
  const VertexId root = by_name.front();
  color[root] = 0;
  q.push(root);
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop();
    std::vector<VertexId> nb(g.neighbors(x).begin(), g.neighbors(x).end());
    std::sort(nb.begin(), nb.end(), [&](VertexId a, VertexId b) { return rank[a] < rank[b]; });
    for (VertexId y : nb) {
      if (color[y] < 0) {
        color[y] = 1 - color[x];
        parent[y] = x;
        depth[y] = depth[x] + 1;
        q.push(y);
      } else if (color[y] == color[x]) {
        // Odd cycle: x .. lca .. y plus the edge [y, x].
        std::vector<VertexId> up_x{x}, up_y{y};
        VertexId a = x, b = y;
        while (depth[a] > depth[b]) up_x.push_back(a = parent[a]);
        while (depth[b] > depth[a]) up_y.push_back(b = parent[b]);
        while (a != b) {
          up_x.push_back(a = parent[a]);
          up_y.push_back(b = parent[b]);
        }
        up_y.pop_back();
        std::reverse(up_y.begin(), up_y.end());
        verdict.odd_cycle = std::move(up_x);
        verdict.odd_cycle.insert(verdict.odd_cycle.end(), up_y.begin(), up_y.end());
        return verdict;
      }
    }
  }
  verdict.bipartite = true;
  verdict.color = std::move(color);
  return verdict;
}

// ---------------------------------------------------------------------------
// Embedded automorphisms.

bool is_embedded_automorphism(const PlaneGraph& g, std::span<const VertexId> perm,
                               std::span<const char> rigid) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (VertexId w : perm) {
    if (w >= n || hit[w]) return false;
    hit[w] = 1;
  }
  for (VertexId v = 0; v < n; ++v) {
    const VertexId w = perm[v];
    if (g.degree(v) != g.degree(w)) return false;
    auto nb = g.neighbors(v);
    for (VertexId x : nb) {
      if (!g.adjacent(w, perm[x])) return false;
    }
    if (nb.size() >= 3 && (rigid.empty() || rigid[v])) {
      const DartId first = g.dart(w, perm[nb[0]]);
      DartId cur = first;
      for (VertexId x : nb) {
        if (g.head(cur) != perm[x]) return false;
        cur = g.next_around(cur);
      }
    }
  }
  return true;
}

namespace {

struct AutomorphismSearch {
  const PlaneGraph& g;
  std::size_t limit;
  std::span<const char> rigid;
  std::vector<Automorphism> found;

  bool is_rigid(VertexId v) const { return g.degree(v) >= 3 && (rigid.empty() || rigid[v]); }

  struct State {
    std::vector<VertexId> map, inv;
    std::vector<char> forced;  // rotation at v already propagated
  };

  bool assign(State& s, VertexId v, VertexId w, std::vector<VertexId>& pending) const {
    if (s.map[v] == w) return true;
    if (s.map[v] != kNoVertex || s.inv[w] != kNoVertex) return false;
    if (g.degree(v) != g.degree(w)) return false;
    s.map[v] = w;
    s.inv[w] = v;
    pending.push_back(v);
    return true;
  }

  // Adjacency and rotation consequences of the current partial map.
  bool propagate(State& s, std::vector<VertexId> pending) const {
    while (!pending.empty()) {
      const VertexId v = pending.back();
      pending.pop_back();
      const VertexId w = s.map[v];
      auto nb = g.neighbors(v);
      // Every mapped neighbour must land on a neighbour.
      for (VertexId x : nb) {
        if (s.map[x] != kNoVertex && !g.adjacent(w, s.map[x])) return false;
      }
      for (VertexId x : nb) {
        // v may now anchor the rotation at an already mapped neighbour.
        if (s.map[x] != kNoVertex && is_rigid(x) && !s.forced[x]) pending.push_back(x);
      }
      if (!is_rigid(v) || s.forced[v]) continue;
      std::size_t anchor = nb.size();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (s.map[nb[i]] != kNoVertex) {
          anchor = i;
          break;
        }
      }
      if (anchor == nb.size()) continue;
      s.forced[v] = 1;
      DartId img = g.dart(w, s.map[nb[anchor]]);
      for (std::size_t k = 0; k < nb.size(); ++k) {
        const VertexId x = nb[(anchor + k) % nb.size()];
        const VertexId y = g.head(img);
        if (s.map[x] == kNoVertex) {
          if (!assign(s, x, y, pending)) return false;
        } else if (s.map[x] != y) {
          return false;
        }
        img = g.next_around(img);
      }
    }
    return true;
  }

  void search(State s) {
    if (found.size() >= limit) return;
    const std::size_t n = g.vertex_count();
    // Next vertex: unmapped neighbour of a mapped vertex, else the first unmapped.
    VertexId pick = kNoVertex, via = kNoVertex;
    for (VertexId v = 0; v < n && pick == kNoVertex; ++v) {
      if (s.map[v] == kNoVertex) continue;
      for (VertexId x : g.neighbors(v)) {
        if (s.map[x] == kNoVertex) {
          pick = x;
          via = v;
          break;
        }
      }
    }
    if (pick == kNoVertex) {
      for (VertexId v = 0; v < n; ++v) {
        if (s.map[v] == kNoVertex) {
          pick = v;
          break;
        }
      }
    }
    if (pick == kNoVertex) {
      if (is_embedded_automorphism(g, s.map, rigid)) found.push_back(s.map);
      return;
    }
    std::vector<VertexId> candidates;
    if (via != kNoVertex) {
      for (VertexId y : g.neighbors(s.map[via])) candidates.push_back(y);
    } else {
      candidates.resize(n);
      std::iota(candidates.begin(), candidates.end(), 0);
    }
    for (VertexId y : candidates) {
      if (s.inv[y] != kNoVertex || g.degree(y) != g.degree(pick)) continue;
      State next = s;
      std::vector<VertexId> pending;
      if (!assign(next, pick, y, pending)) continue;
      if (!propagate(next, std::move(pending))) continue;
      search(std::move(next));
      if (found.size() >= limit) return;
    }
  }
};

}  // namespace

std::vector<Automorphism> embedded_automorphisms(
    const PlaneGraph& g, std::span<const std::pair<VertexId, VertexId>> pins, std::size_t limit,
    std::span<const char> rigid) {
  if (!rigid.empty() && rigid.size() != g.vertex_count()) {
    throw Error(ErrorCode::UnknownVertex, "rigid mask size differs from vertex count");
  }
  AutomorphismSearch search{g, limit, rigid, {}};
  AutomorphismSearch::State s{std::vector<VertexId>(g.vertex_count(), kNoVertex),
                              std::vector<VertexId>(g.vertex_count(), kNoVertex),
                              std::vector<char>(g.vertex_count(), 0)};
  std::vector<VertexId> pending;
  for (auto [v, w] : pins) {
    if (v >= g.vertex_count() || w >= g.vertex_count()) {
      throw Error(ErrorCode::UnknownVertex, "pin outside graph");
    }
    if (!search.assign(s, v, w, pending)) return {};
  }
  if (!search.propagate(s, std::move(pending))) return {};
  search.search(std::move(s));
  return std::move(search.found);
}

}  // namespace gasket
