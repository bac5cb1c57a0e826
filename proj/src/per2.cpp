#include "gasket/per2.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <queue>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "gasket/io.hpp"

namespace gasket {

std::string_view to_string(GasketType type) noexcept {
  switch (type) {
    case GasketType::I: return "I";
    case GasketType::IIA: return "IIA";
    case GasketType::IIB: return "IIB";
  }
  return "?";
}

namespace {

// Vertices in breadth-first discovery order from dart `start`, scanning each
// rotation from the dart through which the vertex was reached.
struct CanonicalOrder {
  std::vector<VertexId> order;
  std::vector<VertexId> label;   // inverse of order
  std::vector<DartId> entry;     // per vertex, the dart scanning starts from
};

CanonicalOrder canonical_order(const PlaneGraph& g, DartId start) {
  CanonicalOrder c;
  c.label.assign(g.vertex_count(), kNoVertex);
  c.entry.assign(g.vertex_count(), 0);
  const VertexId root = g.tail(start);
  c.label[root] = 0;
  c.entry[root] = start;
  c.order.push_back(root);
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    const VertexId x = c.order[i];
    DartId d = c.entry[x];
    for (std::size_t j = 0; j < g.degree(x); ++j, d = g.next_around(d)) {
      const VertexId y = g.head(d);
      if (c.label[y] != kNoVertex) continue;
      c.label[y] = static_cast<VertexId>(c.order.size());
      c.entry[y] = g.reverse(d);
      c.order.push_back(y);
    }
  }
  return c;
}

// Rotation code of g relative to a canonical order.
std::string rotation_code(const PlaneGraph& g, const CanonicalOrder& c) {
  std::ostringstream out;
  for (VertexId x : c.order) {
    DartId d = c.entry[x];
    out << '(';
    for (std::size_t j = 0; j < g.degree(x); ++j, d = g.next_around(d)) {
      out << c.label[g.head(d)] << (j + 1 < g.degree(x) ? "," : "");
    }
    out << ')';
  }
  return out.str();
}

}  // namespace

std::string canonical_form(const CoreSpec& spec) {
  const PlaneGraph& g1 = spec.g1;
  const auto c = canonical_order(g1, g1.dart(spec.fixed_a, spec.fixed_b));
  std::ostringstream out;
  out << "d" << spec.degree << ":" << rotation_code(g1, c) << "|map:";
  for (VertexId x : c.order) out << c.label[spec.vertex_map[x]] << ",";
  out << "|e:";
  for (VertexId x : c.order) out << spec.local_degree[x];
  out << "|g0:";
  std::vector<EdgeKey> e0;
  for (EdgeKey e : spec.g0.edges()) e0.push_back(edge_key(c.label[edge_lo(e)], c.label[edge_hi(e)]));
  std::sort(e0.begin(), e0.end());
  for (EdgeKey e : e0) out << edge_lo(e) << "-" << edge_hi(e) << ",";
  if (spec.g0.edge_count() == 0) out << c.label[0];
  if (spec.critical) {
    out << "|crit:" << c.label[spec.critical->first] << "," << c.label[spec.critical->second];
  }
  return out.str();
}

namespace {

// Rebuilds a core with new vertex names (indexed by g1 vertex).
CoreSpec rename_core(const CoreSpec& spec, const std::vector<std::string>& names,
                     const std::vector<VertexId>& g1_order, std::string new_name) {
  const PlaneGraph& g1 = spec.g1;
  std::vector<VertexId> label(g1.vertex_count());
  for (VertexId i = 0; i < g1_order.size(); ++i) label[g1_order[i]] = i;
  std::vector<std::string> n1;
  std::vector<std::vector<VertexId>> r1;
  for (VertexId x : g1_order) {
    n1.push_back(names[x]);
    auto& r = r1.emplace_back();
    for (VertexId w : g1.neighbors(x)) r.push_back(label[w]);
  }
  // g0 vertices in the same relative order.
  std::vector<VertexId> g0_order;
  for (VertexId x : g1_order) {
    if (x < spec.g0.vertex_count()) g0_order.push_back(x);
  }
  std::vector<VertexId> label0(spec.g0.vertex_count());
  for (VertexId i = 0; i < g0_order.size(); ++i) label0[g0_order[i]] = i;
  std::vector<std::string> n0;
  std::vector<std::vector<VertexId>> r0;
  for (VertexId x : g0_order) {
    n0.push_back(names[x]);
    auto& r = r0.emplace_back();
    for (VertexId w : spec.g0.neighbors(x)) r.push_back(label0[w]);
  }
  std::map<std::string, std::string> vmap;
  std::map<std::string, int> ld;
  for (VertexId v = 0; v < g1.vertex_count(); ++v) {
    vmap[names[v]] = names[spec.vertex_map[v]];
    ld[names[v]] = spec.local_degree[v];
  }
  std::optional<std::pair<std::string, std::string>> crit;
  if (spec.critical) crit = std::pair{names[spec.critical->first], names[spec.critical->second]};
  return CoreSpec::create(std::move(new_name), spec.degree,
                          PlaneGraph::from_indices(std::move(n0), std::move(r0)),
                          PlaneGraph::from_indices(std::move(n1), std::move(r1)), vmap, ld,
                          {names[spec.fixed_a], names[spec.fixed_b]}, crit);
}

std::vector<VertexId> prune_to_cycle(const PlaneGraph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  std::vector<char> removed(g.vertex_count(), 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) stack.push_back(v);
  }
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (removed[v]) continue;
    removed[v] = 1;
    for (VertexId w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (!removed[v]) out.push_back(v);
  }
  return out;
}

// Edges of the unique cycle of a unicyclic edge set, sorted.
std::vector<EdgeKey> cycle_edges(const std::vector<EdgeKey>& edges) {
  std::map<VertexId, std::vector<VertexId>> adj;
  for (EdgeKey e : edges) {
    adj[edge_lo(e)].push_back(edge_hi(e));
    adj[edge_hi(e)].push_back(edge_lo(e));
  }
  std::map<VertexId, std::size_t> deg;
  std::vector<VertexId> stack;
  for (const auto& [v, nb] : adj) {
    deg[v] = nb.size();
    if (nb.size() <= 1) stack.push_back(v);
  }
  std::set<VertexId> removed;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (!removed.insert(v).second) continue;
    for (VertexId w : adj[v]) {
      if (!removed.contains(w) && --deg[w] == 1) stack.push_back(w);
    }
  }
  std::vector<EdgeKey> out;
  for (EdgeKey e : edges) {
    if (!removed.contains(edge_lo(e)) && !removed.contains(edge_hi(e))) out.push_back(e);
  }
  return out;
}

}  // namespace

CriticalLoop critical_loop(const Per2Core& core) {
  const PlaneGraph& g1 = core.spec.g1;
  const auto& f = core.spec.vertex_map;
  if (g1.edge_count() != g1.vertex_count()) {
    throw Error(ErrorCode::NotUnique, "G1 has " + std::to_string(g1.edge_count() + 1) + " - " +
                                          std::to_string(g1.vertex_count()) +
                                          " independent cycles, expected 1");
  }
  const auto on_cycle = prune_to_cycle(g1);
  std::vector<char> in(g1.vertex_count(), 0);
  for (VertexId v : on_cycle) in[v] = 1;
  for (VertexId v : on_cycle) {
    std::size_t k = 0;
    for (VertexId w : g1.neighbors(v)) k += in[w];
    if (k != 2) throw Error(ErrorCode::NotUnique, "the cyclic part of G1 is not a simple cycle");
  }
  if (!in[core.a0] || !in[core.b0] || !in[core.c]) {
    throw Error(ErrorCode::NotUnique, "the cycle of G1 misses E0 or a critical vertex");
  }
  CriticalLoop loop;
  std::vector<VertexId> walk{core.a0};
  VertexId prev = core.b0;
  while (true) {
    const VertexId x = walk.back();
    VertexId next = kNoVertex;
    for (VertexId w : g1.neighbors(x)) {
      if (in[w] && w != prev) {
        next = w;
        break;
      }
    }
    if (next == core.a0) break;
    prev = x;
    walk.push_back(next);
  }
  if (walk.size() % 2 != 0 || walk.size() < 4) {
    throw Error(ErrorCode::NotUnique, "critical loop has length " + std::to_string(walk.size()));
  }
  loop.l = walk.size() / 2;
  loop.cycle = make_cycle(walk);

  std::set<EdgeKey> img;
  for (EdgeKey e : loop.cycle.edges) img.insert(edge_key(f[edge_lo(e)], f[edge_hi(e)]));
  loop.image_edges.assign(img.begin(), img.end());
  std::map<VertexId, std::vector<VertexId>> adj;
  for (EdgeKey e : img) {
    adj[edge_lo(e)].push_back(edge_hi(e));
    adj[edge_hi(e)].push_back(edge_lo(e));
  }
  bool path_ok = img.size() == loop.l && adj.size() == loop.l + 1;
  if (path_ok) {
    const VertexId start = f[core.a0];
    path_ok = adj[start].size() == 1;
    VertexId prev_v = kNoVertex, cur = start;
    loop.image_path.push_back(cur);
    while (path_ok && loop.image_path.size() <= loop.l) {
      VertexId next = kNoVertex;
      for (VertexId w : adj[cur]) {
        if (w != prev_v) next = w;
      }
      if (next == kNoVertex || adj[cur].size() > 2) {
        path_ok = false;
        break;
      }
      prev_v = cur;
      cur = next;
      loop.image_path.push_back(cur);
    }
    path_ok = path_ok && loop.image_path.size() == loop.l + 1 && loop.image_path.back() == f[core.c];
  }
  if (!path_ok) throw Error(ErrorCode::DistanceMismatch, "f(C) is not a simple path of length l");
  const std::size_t dist = graph_distance(g1, core.a0, core.c);
  if (dist != loop.l) {
    throw Error(ErrorCode::DistanceMismatch, "d(a0, c) = " + std::to_string(dist) + " but l = " +
                                                 std::to_string(loop.l));
  }
  return loop;
}

Per2Core Per2Core::make(CoreSpec spec) {
  if (spec.degree != 2) throw Error(ErrorCode::NotPer2, "degree must be 2");
  if (!spec.critical) throw Error(ErrorCode::NotPer2, "critical vertices (a0, c) are required");
  const auto report = validate_core(spec);
  if (const auto* bad = report.first_failure()) {
    throw Error(bad->code, std::string(to_string(bad->rule)) + ": " + bad->detail);
  }
  Per2Core core;
  core.a0 = spec.critical->first;
  core.c = spec.critical->second;
  if (spec.fixed_a == core.a0) {
    core.b0 = spec.fixed_b;
  } else if (spec.fixed_b == core.a0) {
    core.b0 = spec.fixed_a;
    std::swap(spec.fixed_a, spec.fixed_b);
  } else {
    throw Error(ErrorCode::NotPer2, "a0 is not an endpoint of E0");
  }
  const auto& f = spec.vertex_map;
  const PlaneGraph& g1 = spec.g1;
  if (f[core.a0] != core.b0 || f[core.b0] != core.a0) {
    throw Error(ErrorCode::NotPer2, "a0 and b0 do not form a 2-cycle");
  }
  if (spec.local_degree[core.a0] != 2 || spec.local_degree[core.c] != 2 || core.c == core.a0 ||
      core.c == core.b0) {
    throw Error(ErrorCode::NotPer2, "a0 and c must be the two critical vertices");
  }
  core.c_orbit.push_back(core.c);
  VertexId x = core.c;
  do {
    x = f[x];
    core.c_orbit.push_back(x);
    if (x == core.c || core.c_orbit.size() > g1.vertex_count() + 1) {
      throw Error(ErrorCode::NotPer2, "c is not strictly pre-periodic onto E0");
    }
  } while (x != core.a0 && x != core.b0);
  core.q = core.c_orbit.size() - 1;

  const PlaneGraph& g0 = spec.g0;
  if (g0.edge_count() + 1 != g0.vertex_count()) throw Error(ErrorCode::NotPer2, "G0 is not a tree");
  for (VertexId p : core.c_orbit) {
    if (p != core.c && p >= g0.vertex_count()) {
      throw Error(ErrorCode::NotPer2, "post-critical vertex " + g1.name(p) + " is not in G0");
    }
  }
  core.spec = std::move(spec);

  // The loop of G1 must be the map's own critical loop, the cycle of
  // f^-1(G0can) where G0can is the union of f^-i(E0) over i < q.
  const auto loop = critical_loop(core);
  const int q = static_cast<int>(core.q);
  const GraphTower tower = build_tower(core.spec, q);
  const EdgeKey e0 = core.spec.fixed_edge();
  auto absorbed_at = [&](const PlaneGraph& g, std::size_t steps) {
    std::vector<EdgeKey> out;
    for (EdgeKey e : g.edges()) {
      if (edge_key(tower.iterate(edge_lo(e), steps), tower.iterate(edge_hi(e), steps)) == e0) {
        out.push_back(e);
      }
    }
    return out;
  };
  core.canonical = absorbed_at(tower.level(q - 1), core.q - 1) == core.spec.g0.edges();
  if (!core.canonical && cycle_edges(absorbed_at(tower.level(q), core.q)) != loop.cycle.edges) {
    throw Error(ErrorCode::NotPer2, "the cycle of G1 is not the critical loop of the map");
  }
  return core;
}

GasketType classify_type(const Per2Core& core) {
  const auto loop = critical_loop(core);
  std::vector<EdgeKey> both;
  std::set_intersection(loop.cycle.edges.begin(), loop.cycle.edges.end(), loop.image_edges.begin(),
                        loop.image_edges.end(), std::back_inserter(both));
  const EdgeKey e0 = core.spec.fixed_edge();
  if (!std::binary_search(both.begin(), both.end(), e0)) {
    throw Error(ErrorCode::Inconsistent, "C and f(C) do not share E0");
  }
  if (both.size() == 1) return GasketType::I;
  if (both == loop.image_edges) return GasketType::IIB;
  return GasketType::IIA;
}

Per2Core canonical_naming(const Per2Core& core, std::string name) {
  const CoreSpec& spec = core.spec;
  const auto loop = critical_loop(core);
  const auto order = canonical_order(spec.g1, spec.g1.dart(core.a0, core.b0));
  std::vector<std::string> names(spec.g1.vertex_count());
  const auto& cyc = loop.cycle.vertices;
  for (std::size_t i = 0; i + 1 < cyc.size(); ++i) names[cyc[i]] = "a" + std::to_string(i);
  names[core.b0] = "b0";
  std::size_t t = 0;
  for (VertexId x : order.order) {
    if (names[x].empty()) names[x] = "t" + std::to_string(++t);
  }
  return Per2Core::make(rename_core(spec, names, order.order, std::move(name)));
}

Per2Core iib_l2() {
  auto g1 = PlaneGraph::build({"a0", "a1", "a2", "b0"}, {{"a0", {"a1", "b0"}},
                                                          {"a1", {"a0", "a2"}},
                                                          {"a2", {"a1", "b0"}},
                                                          {"b0", {"a2", "a0"}}});
  auto g0 = PlaneGraph::build({"b0", "a0", "a1"},
                              {{"b0", {"a0"}}, {"a0", {"b0", "a1"}}, {"a1", {"a0"}}});
  return Per2Core::make(CoreSpec::create(
      "iib_l2", 2, std::move(g0), std::move(g1),
      {{"a0", "b0"}, {"b0", "a0"}, {"a1", "a0"}, {"a2", "a1"}},
      {{"a0", 2}, {"a1", 1}, {"a2", 2}, {"b0", 1}}, {"a0", "b0"}, std::pair{"a0", "a2"}));
}

std::vector<Per2Core> bundled_cores() {
  std::vector<Per2Core> out{iib_l2()};
  for (const auto& text : bundled_core_documents()) out.push_back(Per2Core::make(parse_core(text)));
  return out;
}

Per2Core bundled_core(std::string_view name) {
  for (auto& c : bundled_cores()) {
    if (c.name() == name) return c;
  }
  throw Error(ErrorCode::UnknownVertex, "no bundled core named '" + std::string(name) + "'");
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("GASKET_LAB_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Distinct plane trees on n vertices, as rotation systems.
std::vector<std::vector<std::vector<VertexId>>> plane_trees(std::size_t n) {
  std::vector<std::vector<std::vector<VertexId>>> out;
  std::set<std::string> seen;
  if (n < 2) return out;
  const std::size_t len = 2 * (n - 1);
  std::string word;
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t open, std::size_t close) {
    if (word.size() == len) {
      std::vector<std::vector<VertexId>> rot(1);
      std::vector<VertexId> stack{0};
      for (char ch : word) {
        if (ch == '(') {
          const VertexId child = static_cast<VertexId>(rot.size());
          rot.push_back({stack.back()});
          rot[stack.back()].push_back(child);
          stack.push_back(child);
        } else {
          stack.pop_back();
        }
      }
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
      const auto t = PlaneGraph::from_indices(names, rot);
      std::string best;
      for (DartId d = 0; d < t.dart_count(); ++d) {
        auto code = rotation_code(t, canonical_order(t, d));
        if (best.empty() || code < best) best = std::move(code);
      }
      if (seen.insert(best).second) out.push_back(std::move(rot));
      return;
    }
    if (open < n - 1) {
      word.push_back('(');
      gen(open + 1, close);
      word.pop_back();
    }
    if (close < open) {
      word.push_back(')');
      gen(open, close + 1);
      word.pop_back();
    }
  };
  gen(0, 0);
  return out;
}

// Double cover of the tree t branched over b and v: darts (d, s) switch sheet
// when leaving along the cut path from b to v.
struct Cover {
  PlaneGraph g;
  std::vector<VertexId> proj;      // cover vertex -> tree vertex
  std::vector<int> local_degree;
};

Cover branched_double_cover(const PlaneGraph& t, VertexId b, VertexId v) {
  std::vector<char> cut(t.dart_count(), 0);
  {
    std::vector<VertexId> parent(t.vertex_count(), kNoVertex);
    std::vector<VertexId> stack{b};
    parent[b] = b;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : t.neighbors(x)) {
        if (parent[y] == kNoVertex) {
          parent[y] = x;
          stack.push_back(y);
        }
      }
    }
    for (VertexId x = v; x != b; x = parent[x]) {
      cut[t.dart(x, parent[x])] = 1;
      cut[t.dart(parent[x], x)] = 1;
    }
  }
  const std::size_t nd = t.dart_count() * 2;
  auto lift = [](DartId d, unsigned s) { return 2 * d + s; };
  std::vector<std::size_t> sigma(nd), alpha(nd);
  for (DartId d = 0; d < t.dart_count(); ++d) {
    for (unsigned s = 0; s < 2; ++s) {
      const unsigned flip = cut[d] ? 1u : 0u;
      sigma[lift(d, s)] = lift(t.next_around(d), s ^ flip);
      alpha[lift(d, s)] = lift(t.reverse(d), s ^ flip);
    }
  }
  constexpr VertexId kUnset = kNoVertex;
  std::vector<VertexId> vertex_of(nd, kUnset);
  std::vector<std::vector<std::size_t>> orbits;
  for (std::size_t x = 0; x < nd; ++x) {
    if (vertex_of[x] != kUnset) continue;
    const VertexId id = static_cast<VertexId>(orbits.size());
    auto& orb = orbits.emplace_back();
    for (std::size_t y = x; vertex_of[y] == kUnset; y = sigma[y]) {
      vertex_of[y] = id;
      orb.push_back(y);
    }
  }
  Cover c;
  std::vector<std::string> names;
  std::vector<std::vector<VertexId>> rot;
  for (const auto& orb : orbits) {
    names.push_back("v" + std::to_string(names.size()));
    auto& r = rot.emplace_back();
    for (std::size_t x : orb) r.push_back(vertex_of[alpha[x]]);
    const VertexId tv = t.tail(static_cast<DartId>(orb[0] / 2));
    c.proj.push_back(tv);
    c.local_degree.push_back(static_cast<int>(orb.size() / t.degree(tv)));
  }
  c.g = PlaneGraph::from_indices(std::move(names), std::move(rot));
  return c;
}

// Cores over one tree, canonically named, keyed by canonical form.
void cores_over_tree(const PlaneGraph& t, std::vector<std::pair<std::string, Per2Core>>& out) {
  const std::size_t n = t.vertex_count();
  for (VertexId b = 0; b < n; ++b) {
    const auto dist = bfs_distances(t, b);
    for (VertexId v = 0; v < n; ++v) {
      if (v == b || dist[v] < 2) continue;
      const Cover cov = branched_double_cover(t, b, v);
      const PlaneGraph& g1 = cov.g;
      VertexId lift_b = kNoVertex, lift_v = kNoVertex;
      for (VertexId x = 0; x < g1.vertex_count(); ++x) {
        if (cov.proj[x] == b) lift_b = x;
        if (cov.proj[x] == v) lift_v = x;
      }
      for (VertexId a0 : t.neighbors(b)) {
        for (VertexId y : g1.neighbors(lift_b)) {
          if (cov.proj[y] != a0) continue;
          // Embed t into g1 with a0 -> lift_b and b -> y.
          std::vector<VertexId> iota(n, kNoVertex);
          std::vector<char> used(g1.vertex_count(), 0);
          iota[a0] = lift_b;
          iota[b] = y;
          used[lift_b] = used[y] = 1;
          std::vector<std::pair<VertexId, VertexId>> todo;  // (tree vertex, tree parent)
          {
            std::vector<char> seen(n, 0);
            seen[a0] = seen[b] = 1;
            std::vector<VertexId> queue{a0, b};
            for (std::size_t i = 0; i < queue.size(); ++i) {
              for (VertexId w : t.neighbors(queue[i])) {
                if (seen[w]) continue;
                seen[w] = 1;
                queue.push_back(w);
                todo.emplace_back(w, queue[i]);
              }
            }
          }
          std::function<void(std::size_t)> place = [&](std::size_t i) {
            if (i == todo.size()) {
              for (VertexId x = 0; x < n; ++x) {
                // Rotation of t at x must be the restriction of g1 at iota(x).
                std::vector<VertexId> restricted;
                for (VertexId w : g1.neighbors(iota[x])) {
                  for (VertexId z : t.neighbors(x)) {
                    if (iota[z] == w) restricted.push_back(z);
                  }
                }
                auto nb = t.neighbors(x);
                std::vector<VertexId> expect(nb.begin(), nb.end());
                auto it = std::find(restricted.begin(), restricted.end(), expect[0]);
                std::rotate(restricted.begin(), it, restricted.end());
                if (restricted != expect) return;
              }
              std::vector<std::string> n0;
              std::vector<std::vector<VertexId>> r0(n);
              for (VertexId x = 0; x < n; ++x) {
                n0.push_back(g1.name(iota[x]));
                for (VertexId z : t.neighbors(x)) r0[x].push_back(z);
              }
              std::map<std::string, std::string> vmap;
              std::map<std::string, int> ld;
              for (VertexId x = 0; x < g1.vertex_count(); ++x) {
                vmap[g1.name(x)] = g1.name(iota[cov.proj[x]]);
                ld[g1.name(x)] = cov.local_degree[x];
              }
              try {
                auto spec = CoreSpec::create("candidate", 2, PlaneGraph::from_indices(n0, r0), g1,
                                             vmap, ld, {g1.name(lift_b), g1.name(y)},
                                             std::pair{g1.name(lift_b), g1.name(lift_v)});
                auto core = canonical_naming(Per2Core::make(std::move(spec)), "candidate");
                auto form = canonical_form(core.spec);
                out.emplace_back(std::move(form), std::move(core));
              } catch (const Error&) {
              }
              return;
            }
            const auto [x, parent] = todo[i];
            for (VertexId w : g1.neighbors(iota[parent])) {
              if (used[w]) continue;
              iota[x] = w;
              used[w] = 1;
              place(i + 1);
              used[w] = 0;
            }
            iota[x] = kNoVertex;
          };
          place(0);
        }
      }
    }
  }
}

}  // namespace

std::vector<Per2Core> enumerate_small_cores(std::size_t max_vertices_g1, unsigned threads) {
  if (max_vertices_g1 > 12) {
    throw Error(ErrorCode::LimitExceeded, "max_vertices_g1 is capped at 12");
  }
  std::vector<PlaneGraph> trees;
  // |V(G1)| = 2 |V(G0)| - 2 for a double cover of a tree with two branch values.
  for (std::size_t n0 = 3; 2 * n0 - 2 <= max_vertices_g1; ++n0) {
    for (auto& rot : plane_trees(n0)) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n0; ++i) names.push_back(std::to_string(i));
      trees.push_back(PlaneGraph::from_indices(std::move(names), std::move(rot)));
    }
  }
  std::vector<std::pair<std::string, Per2Core>> found;
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    std::vector<std::pair<std::string, Per2Core>> local;
    for (std::size_t i = next++; i < trees.size(); i = next++) cores_over_tree(trees[i], local);
    std::lock_guard guard(lock);
    for (auto& item : local) found.push_back(std::move(item));
  };
  const unsigned n_threads = std::min<unsigned>(resolve_threads(threads),
                                                static_cast<unsigned>(std::max<std::size_t>(1, trees.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  auto key = [](const std::pair<std::string, Per2Core>& p) {
    const std::size_t v = p.second.spec.g1.vertex_count(), e = p.second.spec.g0.edge_count();
    return std::tuple(v, e, std::string_view(p.first));
  };
  std::sort(found.begin(), found.end(), [&](const auto& x, const auto& y) { return key(x) < key(y); });
  std::vector<Per2Core> out;
  const std::string* last = nullptr;
  for (auto& [form, core] : found) {
    if (last && *last == form) continue;
    last = &form;
    out.push_back(std::move(core));
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].spec.name = "core" + std::to_string(i + 1);
  return out;
}

std::optional<Per2Core> minimal_core(const std::vector<Per2Core>& cores, GasketType type) {
  for (const auto& c : cores) {
    if (classify_type(c) == type) return c;
  }
  return std::nullopt;
}

}  // namespace gasket
