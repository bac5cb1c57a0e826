#include "gasket/plane_graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_set>

namespace gasket {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotSpherical: return "NotSpherical";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidRotation: return "InvalidRotation";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::ContainmentViolation: return "ContainmentViolation";
    case ErrorCode::NotSimplicial: return "NotSimplicial";
    case ErrorCode::RiemannHurwitz: return "RiemannHurwitz";
    case ErrorCode::FiberSaturation: return "FiberSaturation";
    case ErrorCode::RotationIncompatible: return "RotationIncompatible";
    case ErrorCode::FaceCovering: return "FaceCovering";
    case ErrorCode::EdgeNotFixed: return "EdgeNotFixed";
    case ErrorCode::NoFixedEdge: return "NoFixedEdge";
    case ErrorCode::MultipleFixedEdges: return "MultipleFixedEdges";
    case ErrorCode::EdgeNotAbsorbed: return "EdgeNotAbsorbed";
    case ErrorCode::CriticalCycle: return "CriticalCycle";
    case ErrorCode::LevyObstruction: return "LevyObstruction";
    case ErrorCode::PatternMismatch: return "PatternMismatch";
    case ErrorCode::NoLift: return "NoLift";
    case ErrorCode::NotPer2: return "NotPer2";
    case ErrorCode::NotUnique: return "NotUnique";
    case ErrorCode::DistanceMismatch: return "DistanceMismatch";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::OrbitEscape: return "OrbitEscape";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::NotEnoughCycles: return "NotEnoughCycles";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::NoRealSolution: return "NoRealSolution";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::InvalidRoot: return "InvalidRoot";
    case ErrorCode::EmbeddingFailure: return "EmbeddingFailure";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

PlaneGraph PlaneGraph::build(std::vector<std::string> vertices, const RotationTable& rotation) {
  std::unordered_map<std::string, VertexId> index;
  for (VertexId i = 0; i < vertices.size(); ++i) {
    if (!index.emplace(vertices[i], i).second) {
      throw Error(ErrorCode::InvalidRotation, "duplicate vertex '" + vertices[i] + "'");
    }
  }
  std::vector<std::vector<VertexId>> rot(vertices.size());
  for (const auto& [v, nbrs] : rotation) {
    auto it = index.find(v);
    if (it == index.end()) throw Error(ErrorCode::UnknownVertex, "rotation entry for '" + v + "'");
    auto& out = rot[it->second];
    for (const auto& w : nbrs) {
      auto jt = index.find(w);
      if (jt == index.end()) {
        throw Error(ErrorCode::UnknownVertex, "'" + w + "' in rotation of '" + v + "'");
      }
      out.push_back(jt->second);
    }
  }
  return from_indices(std::move(vertices), std::move(rot));
}

PlaneGraph PlaneGraph::from_indices(std::vector<std::string> names,
                                    std::vector<std::vector<VertexId>> rotation) {
  const std::size_t n = names.size();
  if (rotation.size() != n) throw Error(ErrorCode::InvalidRotation, "rotation size mismatch");
  PlaneGraph g;
  g.names_ = std::move(names);
  for (VertexId i = 0; i < n; ++i) {
    if (!g.index_.emplace(g.names_[i], i).second) {
      throw Error(ErrorCode::InvalidRotation, "duplicate vertex '" + g.names_[i] + "'");
    }
  }
  // Simplicity: no loops, no repeated neighbour.
  for (VertexId v = 0; v < n; ++v) {
    std::unordered_set<VertexId> seen;
    for (VertexId w : rotation[v]) {
      if (w >= n) throw Error(ErrorCode::UnknownVertex, "neighbour index out of range");
      if (w == v) throw Error(ErrorCode::NotSimple, "loop at '" + g.names_[v] + "'");
      if (!seen.insert(w).second) {
        throw Error(ErrorCode::NotSimple,
                    "parallel edge '" + g.names_[v] + "'-'" + g.names_[w] + "'");
      }
    }
  }
  g.offsets_.assign(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + rotation[v].size();
  g.tails_.reserve(g.offsets_[n]);
  g.heads_.reserve(g.offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : rotation[v]) {
      g.tails_.push_back(v);
      g.heads_.push_back(w);
    }
  }
  // Pair darts; every u->v needs a v->u.
  std::unordered_map<EdgeKey, DartId> lower;
  lower.reserve(g.heads_.size());
  for (DartId d = 0; d < g.heads_.size(); ++d) {
    if (g.tails_[d] < g.heads_[d]) lower.emplace(edge_key(g.tails_[d], g.heads_[d]), d);
  }
  g.reverse_.assign(g.heads_.size(), 0);
  std::size_t matched = 0;
  for (DartId d = 0; d < g.heads_.size(); ++d) {
    if (g.tails_[d] > g.heads_[d]) {
      auto it = lower.find(edge_key(g.tails_[d], g.heads_[d]));
      if (it == lower.end()) {
        throw Error(ErrorCode::InvalidRotation, "'" + g.names_[g.heads_[d]] +
                                                    "' does not list '" + g.names_[g.tails_[d]] + "'");
      }
      g.reverse_[d] = it->second;
      g.reverse_[it->second] = d;
      ++matched;
    }
  }
  if (2 * matched != g.heads_.size()) {
    throw Error(ErrorCode::InvalidRotation, "rotation table is not symmetric");
  }
  g.edge_index_ = std::move(lower);
  g.finalize();
  return g;
}

void PlaneGraph::finalize() {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorCode::Disconnected, "empty graph");
  // Connectivity.
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::Disconnected, "graph is not connected");

  face_of_.assign(dart_count(), kNoVertex);
  face_pos_.assign(dart_count(), 0);
  faces_.clear();
  for (DartId d = 0; d < dart_count(); ++d) {
    if (face_of_[d] != kNoVertex) continue;
    const auto f = static_cast<FaceId>(faces_.size());
    std::vector<DartId> walk;
    DartId cur = d;
    do {
      face_of_[cur] = f;
      face_pos_[cur] = walk.size();
      walk.push_back(cur);
      cur = face_successor(cur);
    } while (cur != d);
    faces_.push_back(std::move(walk));
  }
  if (dart_count() == 0) faces_.emplace_back();  // the single face of K1
  if (euler_characteristic() != 2) {
    throw Error(ErrorCode::NotSpherical,
                "V - E + F = " + std::to_string(euler_characteristic()) + " (expected 2)");
  }
}

std::optional<VertexId> PlaneGraph::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId PlaneGraph::at(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw Error(ErrorCode::UnknownVertex, "'" + std::string(name) + "'");
}

std::optional<DartId> PlaneGraph::find_dart(VertexId from, VertexId to) const {
  auto it = edge_index_.find(edge_key(from, to));
  if (it == edge_index_.end()) return std::nullopt;
  return tails_[it->second] == from ? it->second : reverse_[it->second];
}

DartId PlaneGraph::dart(VertexId from, VertexId to) const {
  if (auto d = find_dart(from, to)) return *d;
  throw Error(ErrorCode::UnknownVertex, "no edge '" + name(from) + "'-'" + name(to) + "'");
}

DartId PlaneGraph::next_around(DartId d) const {
  const VertexId v = tails_[d];
  return d + 1 == offsets_[v + 1] ? static_cast<DartId>(offsets_[v]) : d + 1;
}

DartId PlaneGraph::prev_around(DartId d) const {
  const VertexId v = tails_[d];
  return d == offsets_[v] ? static_cast<DartId>(offsets_[v + 1] - 1) : d - 1;
}

std::vector<EdgeKey> PlaneGraph::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(edge_count());
  for (const auto& [key, d] : edge_index_) out.push_back(key);
  std::sort(out.begin(), out.end());
  return out;
}

PlaneGraph PlaneGraph::subgraph(std::span<const EdgeKey> edges,
                                std::span<const VertexId> extra_vertices) const {
  std::unordered_set<EdgeKey> keep(edges.begin(), edges.end());
  std::vector<char> used(vertex_count(), 0);
  for (EdgeKey e : keep) {
    if (!has_edge(e)) throw Error(ErrorCode::UnknownVertex, "subgraph edge not in graph");
    used[edge_lo(e)] = used[edge_hi(e)] = 1;
  }
  for (VertexId v : extra_vertices) used.at(v) = 1;
  std::vector<VertexId> new_id(vertex_count(), kNoVertex);
  std::vector<std::string> names;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (used[v]) {
      new_id[v] = static_cast<VertexId>(names.size());
      names.push_back(names_[v]);
    }
  }
  std::vector<std::vector<VertexId>> rot(names.size());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    if (!used[v]) continue;
    for (VertexId w : neighbors(v)) {
      if (keep.contains(edge_key(v, w))) rot[new_id[v]].push_back(new_id[w]);
    }
  }
  return from_indices(std::move(names), std::move(rot));
}

RotationTable PlaneGraph::rotation_table() const {
  RotationTable table;
  for (VertexId v = 0; v < vertex_count(); ++v) {
    auto& row = table[names_[v]];
    for (VertexId w : neighbors(v)) row.push_back(names_[w]);
  }
  return table;
}

std::string PlaneGraph::canonical_serialization() const {
  std::vector<VertexId> order(vertex_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) { return names_[a] < names_[b]; });
  std::ostringstream out;
  for (VertexId v : order) {
    out << names_[v] << ':';
    auto nb = neighbors(v);
    if (!nb.empty()) {
      // Cyclic list, rotated to start at the smallest name.
      std::size_t start = 0;
      for (std::size_t i = 1; i < nb.size(); ++i) {
        if (names_[nb[i]] < names_[nb[start]]) start = i;
      }
      for (std::size_t i = 0; i < nb.size(); ++i) {
        if (i) out << ',';
        out << names_[nb[(start + i) % nb.size()]];
      }
    }
    out << ';';
  }
  return out.str();
}

bool EmbeddedCycle::contains_edge(EdgeKey e) const {
  return std::binary_search(edges.begin(), edges.end(), e);
}

bool EmbeddedCycle::contains_vertex(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

EmbeddedCycle make_cycle(std::vector<VertexId> vertices) {
  EmbeddedCycle c;
  c.edges.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    c.edges.push_back(edge_key(vertices[i], vertices[(i + 1) % vertices.size()]));
  }
  std::sort(c.edges.begin(), c.edges.end());
  c.vertices = std::move(vertices);
  return c;
}

}  // namespace gasket
