#include "gasket/branched_cover.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace gasket {

namespace {

std::string edge_name(const PlaneGraph& g, EdgeKey e) {
  return "[" + g.name(edge_lo(e)) + "," + g.name(edge_hi(e)) + "]";
}

}  // namespace

CoreSpec CoreSpec::create(std::string name, int degree, PlaneGraph g0, PlaneGraph g1,
                          const std::map<std::string, std::string>& vertex_map,
                          const std::map<std::string, int>& local_degree,
                          std::pair<std::string, std::string> fixed_edge,
                          std::optional<std::pair<std::string, std::string>> critical) {
  CoreSpec spec;
  spec.name = std::move(name);
  spec.degree = degree;

  // Put the g0 vertices first so that g0 indices are g1 indices.
  const bool contained = std::all_of(g0.names().begin(), g0.names().end(),
                                     [&](const std::string& v) { return g1.find(v).has_value(); });
  if (contained) {
    std::vector<VertexId> order;
    std::vector<char> taken(g1.vertex_count(), 0);
    for (const auto& v : g0.names()) {
      const VertexId i = g1.at(v);
      order.push_back(i);
      taken[i] = 1;
    }
    for (VertexId i = 0; i < g1.vertex_count(); ++i) {
      if (!taken[i]) order.push_back(i);
    }
    std::vector<VertexId> inv(order.size());
    for (VertexId i = 0; i < order.size(); ++i) inv[order[i]] = i;
    std::vector<std::string> names;
    std::vector<std::vector<VertexId>> rot;
    for (VertexId old : order) {
      names.push_back(g1.name(old));
      auto& r = rot.emplace_back();
      for (VertexId w : g1.neighbors(old)) r.push_back(inv[w]);
    }
    g1 = PlaneGraph::from_indices(std::move(names), std::move(rot));
  }

  spec.vertex_map.assign(g1.vertex_count(), kNoVertex);
  spec.local_degree.assign(g1.vertex_count(), 0);
  for (const auto& [v, u] : vertex_map) {
    const VertexId vi = g1.at(v);
    spec.vertex_map[vi] = g0.at(u);
  }
  for (const auto& [v, e] : local_degree) spec.local_degree[g1.at(v)] = e;
  for (VertexId v = 0; v < g1.vertex_count(); ++v) {
    if (spec.vertex_map[v] == kNoVertex) {
      throw Error(ErrorCode::SchemaError, "vertex_map has no entry for '" + g1.name(v) + "'");
    }
    if (!local_degree.contains(g1.name(v))) {
      throw Error(ErrorCode::SchemaError, "local_degree has no entry for '" + g1.name(v) + "'");
    }
  }
  spec.fixed_a = g1.at(fixed_edge.first);
  spec.fixed_b = g1.at(fixed_edge.second);
  if (critical) spec.critical = std::pair{g1.at(critical->first), g1.at(critical->second)};
  spec.g0 = std::move(g0);
  spec.g1 = std::move(g1);
  return spec;
}

std::map<std::string, std::string> CoreSpec::vertex_map_by_name() const {
  std::map<std::string, std::string> out;
  for (VertexId v = 0; v < g1.vertex_count(); ++v) out[g1.name(v)] = g0.name(vertex_map[v]);
  return out;
}

std::map<std::string, int> CoreSpec::local_degree_by_name() const {
  std::map<std::string, int> out;
  for (VertexId v = 0; v < g1.vertex_count(); ++v) out[g1.name(v)] = local_degree[v];
  return out;
}

bool CoreSpec::normalized() const {
  if (g0.vertex_count() > g1.vertex_count()) return false;
  for (VertexId i = 0; i < g0.vertex_count(); ++i) {
    if (g0.name(i) != g1.name(i)) return false;
  }
  return true;
}

std::string_view to_string(CoreRule rule) noexcept {
  switch (rule) {
    case CoreRule::Containment: return "containment";
    case CoreRule::Simplicial: return "simplicial";
    case CoreRule::RiemannHurwitz: return "riemann_hurwitz";
    case CoreRule::FiberSaturation: return "fiber_saturation";
    case CoreRule::RotationCompatibility: return "rotation_compatibility";
    case CoreRule::FaceCovering: return "face_covering";
    case CoreRule::FixedEdge: return "fixed_edge";
    case CoreRule::EdgeAbsorption: return "edge_absorption";
    case CoreRule::CriticalCycles: return "critical_cycles";
    case CoreRule::ComplementConnected: return "complement_connected";
  }
  return "unknown";
}

bool ValidationReport::ok() const {
  return std::all_of(rules.begin(), rules.end(), [](const RuleResult& r) { return r.passed; });
}

const RuleResult& ValidationReport::operator[](CoreRule rule) const {
  for (const auto& r : rules) {
    if (r.rule == rule) return r;
  }
  throw std::out_of_range("rule not in report");
}

const RuleResult* ValidationReport::first_failure() const {
  for (const auto& r : rules) {
    if (!r.passed) return &r;
  }
  return nullptr;
}

namespace {

// Maps every dart of `top` to the dart of `base` joining the images of its
// endpoints; nullopt if some edge does not map to an edge.
std::optional<std::vector<DartId>> dart_images(const PlaneGraph& top, const PlaneGraph& base,
                                               std::span<const VertexId> image) {
  std::vector<DartId> out(top.dart_count());
  for (DartId d = 0; d < top.dart_count(); ++d) {
    const VertexId x = image[top.tail(d)], y = image[top.head(d)];
    if (x >= base.vertex_count() || y >= base.vertex_count()) return std::nullopt;
    auto e = base.find_dart(x, y);
    if (!e) return std::nullopt;
    out[d] = *e;
  }
  return out;
}

std::string check_rotation(const PlaneGraph& top, const PlaneGraph& base,
                           std::span<const DartId> dmap, std::span<const int> local_degree) {
  for (VertexId v = 0; v < top.vertex_count(); ++v) {
    const std::size_t deg = top.degree(v);
    if (deg == 0) continue;
    const DartId first = top.first_dart(v);
    const VertexId x = base.tail(dmap[first]);
    const std::size_t bdeg = base.degree(x);
    if (deg != static_cast<std::size_t>(local_degree[v]) * bdeg) {
      return "vertex " + top.name(v) + " has degree " + std::to_string(deg) + ", expected " +
             std::to_string(local_degree[v]) + " x " + std::to_string(bdeg);
    }
    for (std::size_t i = 0; i < deg; ++i) {
      const DartId d = first + static_cast<DartId>(i);
      const DartId next = top.next_around(d);
      if (base.next_around(dmap[d]) != dmap[next]) {
        return "rotation at " + top.name(v) + " does not follow rotation at " + base.name(x);
      }
    }
  }
  return {};
}

std::string check_faces(const PlaneGraph& top, const PlaneGraph& base,
                        std::span<const DartId> dmap, int degree) {
  std::vector<int> preimages(base.face_count(), 0);
  for (FaceId u = 0; u < top.face_count(); ++u) {
    const auto& walk = top.faces()[u];
    if (walk.empty()) continue;
    const DartId e0 = dmap[walk[0]];
    const FaceId f = base.face_of(e0);
    const auto& target = base.faces()[f];
    if (target.size() != walk.size()) {
      return "face " + std::to_string(u) + " has length " + std::to_string(walk.size()) +
             " but its image face has length " + std::to_string(target.size());
    }
    const std::size_t s = base.position_in_face(e0);
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (dmap[walk[i]] != target[(s + i) % target.size()]) {
        return "face " + std::to_string(u) + " is not mapped onto a face";
      }
    }
    ++preimages[f];
  }
  for (FaceId f = 0; f < base.face_count(); ++f) {
    if (base.faces()[f].empty()) continue;
    if (preimages[f] != degree) {
      return "face " + std::to_string(f) + " of the base has " + std::to_string(preimages[f]) +
             " preimages";
    }
  }
  return {};
}

bool connected_without(const PlaneGraph& g, EdgeKey removed) {
  if (g.vertex_count() == 0) return true;
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(v)) {
      if (seen[w] || edge_key(v, w) == removed) continue;
      seen[w] = 1;
      ++count;
      stack.push_back(w);
    }
  }
  return count == g.vertex_count();
}

}  // namespace

ValidationReport validate_core(const CoreSpec& spec) {
  ValidationReport report;
  auto add = [&](CoreRule rule, ErrorCode code, std::string failure) {
    const bool passed = failure.empty();
    report.rules.push_back({rule, code, passed, std::move(failure)});
    return passed;
  };
  const PlaneGraph& g0 = spec.g0;
  const PlaneGraph& g1 = spec.g1;
  const auto& f = spec.vertex_map;

  // (i) containment
  std::string msg;
  if (!spec.normalized()) {
    msg = "g0 vertices are not all in g1";
  } else {
    for (EdgeKey e : g0.edges()) {
      if (!g1.has_edge(e)) {
        msg = "g0 edge " + edge_name(g0, e) + " missing from g1";
        break;
      }
    }
    for (VertexId v = 0; msg.empty() && v < g0.vertex_count(); ++v) {
      std::vector<VertexId> restricted;
      for (VertexId w : g1.neighbors(v)) {
        if (g0.adjacent(v, w)) restricted.push_back(w);
      }
      auto nb = g0.neighbors(v);
      std::vector<VertexId> expect(nb.begin(), nb.end());
      bool same = restricted.size() == expect.size();
      if (same && !expect.empty()) {
        auto it = std::find(restricted.begin(), restricted.end(), expect[0]);
        std::rotate(restricted.begin(), it, restricted.end());
        same = restricted == expect;
      }
      if (!same) msg = "rotation of g0 at " + g0.name(v) + " is not the restriction of g1";
    }
  }
  const bool contained = add(CoreRule::Containment, ErrorCode::ContainmentViolation, msg);

  // (ii) simpliciality
  msg.clear();
  for (EdgeKey e : g1.edges()) {
    const VertexId x = f[edge_lo(e)], y = f[edge_hi(e)];
    if (x == y) {
      msg = "edge " + edge_name(g1, e) + " collapses to " + g0.name(x);
      break;
    }
    if (!g0.adjacent(x, y)) {
      msg = "edge " + edge_name(g1, e) + " maps to non-edge [" + g0.name(x) + "," + g0.name(y) + "]";
      break;
    }
  }
  const bool simplicial = add(CoreRule::Simplicial, ErrorCode::NotSimplicial, msg);

  // (iii) Riemann-Hurwitz and fiber saturation
  msg.clear();
  long excess = 0;
  if (spec.degree < 2) msg = "degree must be at least 2";
  for (VertexId v = 0; msg.empty() && v < g1.vertex_count(); ++v) {
    const int e = spec.local_degree[v];
    if (e < 1 || e > spec.degree) {
      msg = "local degree of " + g1.name(v) + " out of range";
    }
    excess += e - 1;
  }
  if (msg.empty() && excess != 2L * spec.degree - 2) {
    msg = "sum of (e-1) is " + std::to_string(excess) + ", expected " +
          std::to_string(2 * spec.degree - 2);
  }
  add(CoreRule::RiemannHurwitz, ErrorCode::RiemannHurwitz, msg);

  msg.clear();
  std::vector<int> fiber(g0.vertex_count(), 0);
  for (VertexId v = 0; v < g1.vertex_count(); ++v) fiber[f[v]] += spec.local_degree[v];
  for (VertexId u = 0; u < g0.vertex_count(); ++u) {
    if (fiber[u] != spec.degree) {
      msg = "fiber over " + g0.name(u) + " has total local degree " + std::to_string(fiber[u]);
      break;
    }
  }
  add(CoreRule::FiberSaturation, ErrorCode::FiberSaturation, msg);

  // (iv) rotation and face compatibility
  std::optional<std::vector<DartId>> dmap;
  if (simplicial) dmap = dart_images(g1, g0, f);
  msg = dmap ? check_rotation(g1, g0, *dmap, spec.local_degree) : "requires simpliciality";
  const bool rotation = add(CoreRule::RotationCompatibility, ErrorCode::RotationIncompatible, msg);
  msg = rotation ? check_faces(g1, g0, *dmap, spec.degree) : "requires rotation compatibility";
  add(CoreRule::FaceCovering, ErrorCode::FaceCovering, msg);

  // (v) fixed edge
  msg.clear();
  const VertexId a = spec.fixed_a, b = spec.fixed_b;
  if (a >= g0.vertex_count() || b >= g0.vertex_count() || !g0.adjacent(a, b)) {
    msg = "E0 is not an edge of g0";
  } else if (edge_key(f[a], f[b]) != edge_key(a, b)) {
    msg = "E0 maps to [" + g0.name(f[a]) + "," + g0.name(f[b]) + "]";
  }
  add(CoreRule::FixedEdge, ErrorCode::EdgeNotFixed, msg);

  // (vi) absorption
  ErrorCode absorb_code = ErrorCode::EdgeNotAbsorbed;
  msg.clear();
  if (!contained || !simplicial) {
    msg = "requires containment and simpliciality";
  } else {
    try {
      const auto dyn = edge_dynamics(spec);
      if (dyn.fixed_edge != spec.fixed_edge()) {
        absorb_code = ErrorCode::EdgeNotFixed;
        msg = "the fixed edge is " + edge_name(g1, dyn.fixed_edge);
      }
    } catch (const Error& err) {
      absorb_code = err.code();
      msg = err.what();
    }
  }
  add(CoreRule::EdgeAbsorption, absorb_code, msg);

  // (vii) critical cycles through a and b
  msg.clear();
  if (!contained) {
    msg = "requires containment";
  } else {
    for (VertexId x : {a, b}) {
      if (x >= g0.vertex_count()) {
        msg = "E0 endpoint outside g0";
        break;
      }
      std::vector<VertexId> orbit{x};
      VertexId y = f[x];
      while (y != x && orbit.size() <= g0.vertex_count()) {
        orbit.push_back(y);
        y = f[y];
      }
      if (y != x) {
        msg = g1.name(x) + " is not periodic";
        break;
      }
      const bool critical = std::any_of(orbit.begin(), orbit.end(),
                                        [&](VertexId z) { return spec.local_degree[z] >= 2; });
      if (!critical) {
        msg = "the cycle of " + g1.name(x) + " contains no critical vertex";
        break;
      }
    }
  }
  add(CoreRule::CriticalCycles, ErrorCode::CriticalCycle, msg);

  // (viii) g1 - Int(E0) connected
  msg.clear();
  if (a < g1.vertex_count() && b < g1.vertex_count() && g1.adjacent(a, b) &&
      !connected_without(g1, edge_key(a, b))) {
    msg = "E0 separates g1";
  }
  add(CoreRule::ComplementConnected, ErrorCode::LevyObstruction, msg);
  return report;
}

EdgeDynamics edge_dynamics(const PlaneGraph& g, std::span<const VertexId> image, std::size_t bound) {
  const auto edges = g.edges();
  std::unordered_map<EdgeKey, EdgeKey> step;
  step.reserve(edges.size());
  std::vector<EdgeKey> fixed;
  for (EdgeKey e : edges) {
    const VertexId x = image[edge_lo(e)], y = image[edge_hi(e)];
    if (x == y || x >= g.vertex_count() || y >= g.vertex_count() || !g.adjacent(x, y)) {
      throw Error(ErrorCode::NotSimplicial, "edge " + edge_name(g, e) + " has no image edge");
    }
    const EdgeKey img = edge_key(x, y);
    step.emplace(e, img);
    if (img == e) fixed.push_back(e);
  }
  if (fixed.empty()) throw Error(ErrorCode::NoFixedEdge, "no edge is fixed");
  if (fixed.size() > 1) {
    throw Error(ErrorCode::MultipleFixedEdges,
                edge_name(g, fixed[0]) + " and " + edge_name(g, fixed[1]) + " are both fixed");
  }
  EdgeDynamics out;
  out.fixed_edge = fixed[0];
  // Steps are memoized along orbits.
  std::unordered_map<EdgeKey, std::size_t> steps{{fixed[0], 0}};
  for (EdgeKey e : edges) {
    std::vector<EdgeKey> trail;
    EdgeKey cur = e;
    while (!steps.contains(cur)) {
      trail.push_back(cur);
      if (trail.size() > bound) {
        throw Error(ErrorCode::EdgeNotAbsorbed, "edge " + edge_name(g, e) + " does not reach " +
                                                    edge_name(g, fixed[0]) + " within " +
                                                    std::to_string(bound) + " steps");
      }
      cur = step.at(cur);
    }
    std::size_t s = steps.at(cur);
    for (auto it = trail.rbegin(); it != trail.rend(); ++it) steps[*it] = ++s;
    if (steps.at(e) > bound) {
      throw Error(ErrorCode::EdgeNotAbsorbed, "edge " + edge_name(g, e) + " needs " +
                                                  std::to_string(steps.at(e)) + " steps");
    }
    out.orbits.push_back({e, step.at(e), steps.at(e)});
    out.max_steps = std::max(out.max_steps, steps.at(e));
  }
  return out;
}

EdgeDynamics edge_dynamics(const CoreSpec& spec) {
  if (!spec.normalized()) throw Error(ErrorCode::ContainmentViolation, "g0 is not contained in g1");
  return edge_dynamics(spec.g1, spec.vertex_map, spec.g1.edge_count());
}

GraphTower::GraphTower(const CoreSpec& core) : core_(core) {
  const auto report = validate_core(core_);
  if (const auto* bad = report.first_failure()) {
    throw Error(bad->code, std::string(to_string(bad->rule)) + ": " + bad->detail);
  }
  levels_.push_back(core_.g0);
  levels_.push_back(core_.g1);
  image_ = core_.vertex_map;
  local_degree_ = core_.local_degree;
  birth_.assign(core_.g1.vertex_count(), 1);
  std::fill_n(birth_.begin(), core_.g0.vertex_count(), 0);
}

VertexId GraphTower::iterate(VertexId v, std::size_t n) const {
  for (std::size_t i = 0; i < n; ++i) v = image_.at(v);
  return v;
}

std::string GraphTower::canonical_serialization() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    out << "level " << k << "\n" << levels_[k].canonical_serialization();
  }
  const PlaneGraph& t = top();
  std::vector<std::pair<std::string, std::string>> map;
  for (VertexId v = 0; v < t.vertex_count(); ++v) map.emplace_back(t.name(v), t.name(image_[v]));
  std::sort(map.begin(), map.end());
  out << "map\n";
  for (const auto& [v, u] : map) out << v << " " << u << "\n";
  return out.str();
}

GraphTower pullback(GraphTower tower) {
  constexpr DartId kNone = static_cast<DartId>(-1);
  const int k = tower.depth();
  const PlaneGraph& prev = tower.levels_[static_cast<std::size_t>(k - 1)];
  const PlaneGraph& top = tower.levels_.back();
  const std::size_t n_prev = prev.vertex_count();
  const std::size_t n_top = top.vertex_count();
  const int d = tower.degree();
  const auto& image = tower.image_;

  auto mismatch = [&](const std::string& what) {
    return Error(ErrorCode::PatternMismatch, "level " + std::to_string(k + 1) + ": " + what);
  };

  auto dmap_opt = dart_images(top, prev, image);
  if (!dmap_opt) throw mismatch("top level is not simplicial over the previous level");
  const auto& dmap = *dmap_opt;

  auto is_old = [&](DartId t) {
    return top.tail(t) < n_prev && top.head(t) < n_prev && prev.adjacent(top.tail(t), top.head(t));
  };

  // Pattern of each previous-level face: the top darts that sit in its
  // corners. A corner is keyed by the previous-level dart arriving at it.
  std::vector<std::vector<DartId>> corner_darts(prev.dart_count());
  std::vector<DartId> corner_of(top.dart_count(), kNone);
  for (VertexId y = 0; y < n_prev; ++y) {
    const std::size_t deg = top.degree(y);
    const DartId first = top.first_dart(y);
    std::size_t start = deg;
    for (std::size_t i = 0; i < deg; ++i) {
      if (is_old(first + static_cast<DartId>(i))) {
        start = i;
        break;
      }
    }
    if (start == deg) throw mismatch("vertex " + top.name(y) + " has no previous-level edge");
    DartId key = kNone;
    for (std::size_t j = 0; j < deg; ++j) {
      const DartId t = first + static_cast<DartId>((start + j) % deg);
      if (is_old(t)) {
        key = prev.dart(top.head(t), y);
      } else {
        corner_darts[key].push_back(t);
        corner_of[t] = key;
      }
    }
  }

  // Assign every new top vertex to the previous-level face containing it.
  constexpr FaceId kNoFace = static_cast<FaceId>(-1);
  std::vector<FaceId> home(n_top, kNoFace);
  for (DartId key = 0; key < prev.dart_count(); ++key) {
    const FaceId face = prev.face_of(key);
    for (DartId t : corner_darts[key]) {
      const VertexId h = top.head(t);
      if (h < n_prev) continue;
      if (home[h] == face) continue;
      if (home[h] != kNoFace) throw mismatch("vertex " + top.name(h) + " lies in two faces");
      home[h] = face;
      std::vector<VertexId> stack{h};
      while (!stack.empty()) {
        const VertexId x = stack.back();
        stack.pop_back();
        for (VertexId w : top.neighbors(x)) {
          if (w < n_prev) continue;
          if (home[w] == face) continue;
          if (home[w] != kNoFace) throw mismatch("vertex " + top.name(w) + " lies in two faces");
          home[w] = face;
          stack.push_back(w);
        }
      }
    }
  }
  std::vector<std::vector<VertexId>> pattern(prev.face_count());
  std::vector<std::size_t> pattern_index(n_top, 0);
  for (VertexId x = static_cast<VertexId>(n_prev); x < n_top; ++x) {
    if (home[x] == kNoFace) throw mismatch("vertex " + top.name(x) + " is not in any face");
    pattern_index[x] = pattern[home[x]].size();
    pattern[home[x]].push_back(x);
  }

  // Image face and alignment of every top face.
  const std::size_t n_faces = top.face_count();
  std::vector<FaceId> face_image(n_faces);
  std::vector<std::size_t> shift(n_faces), sheet(n_faces);
  std::vector<int> preimages(prev.face_count(), 0);
  for (FaceId u = 0; u < n_faces; ++u) {
    const auto& walk = top.faces()[u];
    if (walk.empty()) throw mismatch("empty face");
    const DartId e0 = dmap[walk[0]];
    const FaceId f = prev.face_of(e0);
    const auto& target = prev.faces()[f];
    const std::size_t s = prev.position_in_face(e0);
    if (target.size() != walk.size()) throw mismatch("face lengths differ");
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (dmap[walk[i]] != target[(s + i) % target.size()]) {
        throw mismatch("boundary of face " + std::to_string(u) + " does not follow its image");
      }
    }
    face_image[u] = f;
    shift[u] = s;
    sheet[u] = static_cast<std::size_t>(preimages[f]++);
  }
  for (int c : preimages) {
    if (c != d) throw mismatch("a face has " + std::to_string(c) + " preimages");
  }

  // Allocate new vertices face by face.
  std::vector<std::string> names = top.names();
  std::vector<VertexId> base(n_faces);
  std::vector<VertexId> new_image = image;
  for (FaceId u = 0; u < n_faces; ++u) {
    base[u] = static_cast<VertexId>(names.size());
    for (VertexId x : pattern[face_image[u]]) {
      names.push_back(top.name(x) + "." + std::to_string(sheet[u]));
      new_image.push_back(x);
    }
  }

  // The vertex of face u sitting at the corner keyed by `key`.
  auto corner_vertex = [&](FaceId u, DartId key) {
    const auto& walk = top.faces()[u];
    const std::size_t m = walk.size();
    const std::size_t j = prev.position_in_face(key);
    return top.head(walk[(j + m - shift[u]) % m]);
  };
  // Copy in face u of the endpoint of pattern dart t.
  auto translate_head = [&](FaceId u, DartId t) -> VertexId {
    const VertexId h = top.head(t);
    if (h >= n_prev) return base[u] + static_cast<VertexId>(pattern_index[h]);
    return corner_vertex(u, corner_of[top.reverse(t)]);
  };

  std::vector<std::vector<VertexId>> rot(names.size());
  for (VertexId v = 0; v < n_top; ++v) {
    const std::size_t deg = top.degree(v);
    const DartId first = top.first_dart(v);
    auto& r = rot[v];
    for (std::size_t i = 0; i < deg; ++i) {
      const DartId t = first + static_cast<DartId>(i);
      r.push_back(top.head(t));
      const DartId back = top.reverse(t);
      const FaceId u = top.face_of(back);
      for (DartId p : corner_darts[dmap[back]]) r.push_back(translate_head(u, p));
    }
  }
  for (FaceId u = 0; u < n_faces; ++u) {
    const auto& pat = pattern[face_image[u]];
    for (std::size_t i = 0; i < pat.size(); ++i) {
      const VertexId x = pat[i];
      auto& r = rot[base[u] + i];
      const DartId first = top.first_dart(x);
      for (std::size_t j = 0; j < top.degree(x); ++j) {
        r.push_back(translate_head(u, first + static_cast<DartId>(j)));
      }
    }
  }

  PlaneGraph next = PlaneGraph::from_indices(std::move(names), std::move(rot));
  tower.image_ = std::move(new_image);
  tower.local_degree_.resize(next.vertex_count(), 1);
  tower.birth_.resize(next.vertex_count(), k + 1);
  tower.levels_.push_back(std::move(next));
  return tower;
}

GraphTower build_tower(const CoreSpec& core, int depth) {
  if (depth < 1) throw Error(ErrorCode::LimitExceeded, "depth must be at least 1");
  GraphTower tower(core);
  while (tower.depth() < depth) tower = pullback(std::move(tower));
  return tower;
}

LevelCheck verify_level(const GraphTower& tower, int k) {
  LevelCheck c;
  c.level = k;
  const PlaneGraph& g = tower.level(k);
  c.vertices = g.vertex_count();
  c.edges = g.edge_count();
  c.faces = g.face_count();
  c.euler = g.euler_characteristic() == 2;
  if (k == 0) {
    c.counts = c.simplicial = c.fibers = c.face_preimages = true;
    return c;
  }
  const PlaneGraph& p = tower.level(k - 1);
  const std::size_t d = static_cast<std::size_t>(tower.degree());
  c.counts = c.edges == d * p.edge_count() && c.faces == d * p.face_count() &&
             c.vertices + (2 * d - 2) == d * p.vertex_count();
  auto dmap = dart_images(g, p, tower.images());
  c.simplicial = dmap.has_value();
  std::vector<int> fiber(p.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const VertexId x = tower.image(v);
    if (x < fiber.size()) fiber[x] += tower.local_degree(v);
  }
  c.fibers = std::all_of(fiber.begin(), fiber.end(), [&](int s) { return s == tower.degree(); });
  std::vector<std::string> problems;
  if (dmap) {
    std::vector<int> ld(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) ld[v] = tower.local_degree(v);
    auto r = check_rotation(g, p, *dmap, ld);
    auto f = r.empty() ? check_faces(g, p, *dmap, tower.degree()) : r;
    c.face_preimages = f.empty();
    if (!f.empty()) problems.push_back(f);
  } else {
    problems.push_back("some edge does not map to an edge");
  }
  if (!c.euler) problems.push_back("Euler characteristic " + std::to_string(g.euler_characteristic()));
  if (!c.counts) problems.push_back("count recursion fails");
  if (!c.fibers) problems.push_back("fiber saturation fails");
  for (std::size_t i = 0; i < problems.size(); ++i) c.detail += (i ? "; " : "") + problems[i];
  return c;
}

namespace {

void check_liftable(const GraphTower& tower, std::span<const VertexId> path, VertexId start) {
  if (tower.depth() < 1) throw Error(ErrorCode::NoLift, "tower has no covering level");
  if (path.empty()) throw Error(ErrorCode::NoLift, "empty path");
  const PlaneGraph& prev = tower.level(tower.depth() - 1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= prev.vertex_count()) {
      throw Error(ErrorCode::NoLift, "path leaves level " + std::to_string(tower.depth() - 1));
    }
    if (i > 0 && !prev.adjacent(path[i - 1], path[i])) {
      throw Error(ErrorCode::NoLift, "path steps along a non-edge");
    }
  }
  if (start >= tower.top().vertex_count() || tower.image(start) != path[0]) {
    throw Error(ErrorCode::NoLift, "start is not in the fiber of the first vertex");
  }
}

}  // namespace

Path lift_path(const GraphTower& tower, std::span<const VertexId> path, VertexId start) {
  check_liftable(tower, path, start);
  const PlaneGraph& top = tower.top();
  const PlaneGraph& prev = tower.level(tower.depth() - 1);
  Path out{start};
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const VertexId y = out.back();
    std::optional<DartId> chosen;
    if (i > 0 && tower.local_degree(y) > 1) {
      const DartId in_img = prev.dart(path[i], path[i - 1]);
      const DartId out_img = prev.dart(path[i], path[i + 1]);
      const std::size_t deg = prev.degree(path[i]);
      const std::size_t turn = (prev.position(out_img) + deg - prev.position(in_img)) % deg;
      DartId t = top.dart(y, out[i - 1]);
      for (std::size_t s = 0; s < turn; ++s) t = top.next_around(t);
      chosen = t;
    } else {
      const DartId first = top.first_dart(y);
      for (std::size_t j = 0; j < top.degree(y); ++j) {
        const DartId t = first + static_cast<DartId>(j);
        if (tower.image(top.head(t)) == path[i + 1]) {
          chosen = t;
          break;
        }
      }
    }
    if (!chosen || tower.image(top.head(*chosen)) != path[i + 1]) {
      throw Error(ErrorCode::NoLift, "no lift of the step at " + top.name(y));
    }
    out.push_back(top.head(*chosen));
  }
  return out;
}

std::vector<Path> enumerate_lifts(const GraphTower& tower, std::span<const VertexId> path,
                                  VertexId start) {
  check_liftable(tower, path, start);
  const PlaneGraph& top = tower.top();
  std::vector<Path> out;
  Path cur{start};
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i + 1 == path.size()) {
      out.push_back(cur);
      return;
    }
    for (VertexId w : top.neighbors(cur.back())) {
      if (tower.image(w) != path[i + 1]) continue;
      cur.push_back(w);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<int> eventual_partition(const GraphTower& tower, int level) {
  const PlaneGraph& g = tower.level(level);
  const VertexId a = tower.fixed_a(), b = tower.fixed_b();
  const bool swaps = tower.image(a) == b;
  std::vector<int> cls(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    VertexId x = v;
    std::size_t t = 0;
    while (x != a && x != b) {
      x = tower.image(x);
      if (++t > tower.images().size()) {
        throw Error(ErrorCode::OrbitEscape, g.name(v) + " never reaches E0");
      }
    }
    cls[v] = (x == b ? 1 : 0) ^ ((swaps && t % 2 == 1) ? 1 : 0);
  }
  return cls;
}

}  // namespace gasket
