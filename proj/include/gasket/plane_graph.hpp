#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gasket/error.hpp"

namespace gasket {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;
using FaceId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

// Unordered edge packed into one integer; the smaller endpoint is the high word.
using EdgeKey = std::uint64_t;

constexpr EdgeKey edge_key(VertexId a, VertexId b) noexcept {
  const VertexId lo = a < b ? a : b;
  const VertexId hi = a < b ? b : a;
  return (static_cast<EdgeKey>(lo) << 32) | hi;
}
constexpr VertexId edge_lo(EdgeKey e) noexcept { return static_cast<VertexId>(e >> 32); }
constexpr VertexId edge_hi(EdgeKey e) noexcept { return static_cast<VertexId>(e & 0xffffffffu); }

// Rotation table keyed by vertex name; each entry lists neighbours in
// counterclockwise order.
using RotationTable = std::map<std::string, std::vector<std::string>>;

// A simple connected graph embedded in the sphere by a rotation system.
//
// Darts are numbered vertex by vertex: the darts leaving v occupy the ids
// [offset(v), offset(v) + degree(v)) in counterclockwise order. Faces are the
// orbits of face_successor(d) = next_around(reverse(d)). Instances are
// immutable once built.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  // Throws Error{NotSimple | InvalidRotation | UnknownVertex | Disconnected |
  // NotSpherical}.
  static PlaneGraph build(std::vector<std::string> vertices, const RotationTable& rotation);
  static PlaneGraph from_indices(std::vector<std::string> names,
                                 std::vector<std::vector<VertexId>> rotation);

  std::size_t vertex_count() const noexcept { return names_.size(); }
  std::size_t edge_count() const noexcept { return heads_.size() / 2; }
  std::size_t dart_count() const noexcept { return heads_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }
  long euler_characteristic() const noexcept {
    return static_cast<long>(vertex_count()) - static_cast<long>(edge_count()) +
           static_cast<long>(face_count());
  }

  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId at(std::string_view name) const;  // throws UnknownVertex

  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {heads_.data() + offsets_[v], degree(v)};
  }
  bool adjacent(VertexId u, VertexId v) const { return edge_index_.contains(edge_key(u, v)); }

  DartId first_dart(VertexId v) const { return offsets_[v]; }
  std::optional<DartId> find_dart(VertexId from, VertexId to) const;
  DartId dart(VertexId from, VertexId to) const;  // throws UnknownVertex when absent
  VertexId tail(DartId d) const { return tails_[d]; }
  VertexId head(DartId d) const { return heads_[d]; }
  DartId reverse(DartId d) const { return reverse_[d]; }
  DartId next_around(DartId d) const;  // counterclockwise successor at tail(d)
  DartId prev_around(DartId d) const;
  DartId face_successor(DartId d) const { return next_around(reverse(d)); }
  // Index of d within the rotation at tail(d).
  std::size_t position(DartId d) const { return d - offsets_[tails_[d]]; }

  const std::vector<std::vector<DartId>>& faces() const noexcept { return faces_; }
  FaceId face_of(DartId d) const { return face_of_[d]; }
  std::size_t position_in_face(DartId d) const { return face_pos_[d]; }

  // Edges as sorted keys.
  std::vector<EdgeKey> edges() const;
  bool has_edge(EdgeKey e) const { return edge_index_.contains(e); }

  // Subgraph on the given edges (and their endpoints plus `extra_vertices`),
  // inheriting the restricted rotation. Vertex names are preserved; the
  // returned graph is validated like any other.
  PlaneGraph subgraph(std::span<const EdgeKey> edges,
                      std::span<const VertexId> extra_vertices = {}) const;

  RotationTable rotation_table() const;
  // Name-sorted textual form; two graphs are equal iff these agree.
  std::string canonical_serialization() const;

  friend bool operator==(const PlaneGraph& a, const PlaneGraph& b) {
    return a.canonical_serialization() == b.canonical_serialization();
  }

 private:
  void finalize();

  std::vector<std::string> names_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> tails_;
  std::vector<VertexId> heads_;
  std::vector<DartId> reverse_;
  std::unordered_map<EdgeKey, DartId> edge_index_;  // dart from the lower endpoint
  std::vector<std::vector<DartId>> faces_;
  std::vector<FaceId> face_of_;
  std::vector<std::size_t> face_pos_;
};

// A simple closed curve in a plane graph. `vertices` lists the cycle once,
// starting at the anchor; `edges` is the sorted edge set used for identity.
struct EmbeddedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeKey> edges;

  std::size_t length() const noexcept { return vertices.size(); }
  bool contains_edge(EdgeKey e) const;
  bool contains_vertex(VertexId v) const;

  friend bool operator==(const EmbeddedCycle& a, const EmbeddedCycle& b) { return a.edges == b.edges; }
  friend bool operator<(const EmbeddedCycle& a, const EmbeddedCycle& b) { return a.edges < b.edges; }
};

EmbeddedCycle make_cycle(std::vector<VertexId> vertices);

struct CycleSearch {
  std::optional<std::size_t> min_length;  // shortest cycle through the edge
  std::vector<EmbeddedCycle> cycles;
  std::optional<std::size_t> girth;
};

// All simple cycles through edge [u,v] of minimal length, or every simple
// cycle of length <= max_len when `all_up_to_max` is set. Cycles start u, v.
CycleSearch shortest_cycles_through_edge(const PlaneGraph& g, VertexId u, VertexId v,
                                         std::size_t max_len, bool all_up_to_max = false);

std::optional<std::size_t> girth(const PlaneGraph& g);

struct BipartiteVerdict {
  bool bipartite = false;
  std::vector<int> color;           // 0/1 per vertex when bipartite
  std::vector<VertexId> odd_cycle;  // closed walk witness otherwise
};

BipartiteVerdict is_bipartite(const PlaneGraph& g);

// BFS distances from `source`; unreachable vertices get kNoVertex.
std::vector<VertexId> bfs_distances(const PlaneGraph& g, VertexId source);
std::size_t graph_distance(const PlaneGraph& g, VertexId u, VertexId v);

// A vertex permutation; perm[v] is the image of v.
using Automorphism = std::vector<VertexId>;

// Automorphisms extending `pins` that preserve the cyclic rotation at every
// vertex of degree >= 3. A non-empty `rigid` mask restricts the rotation
// constraint to the flagged vertices. `limit` bounds the number returned.
std::vector<Automorphism> embedded_automorphisms(
    const PlaneGraph& g, std::span<const std::pair<VertexId, VertexId>> pins,
    std::size_t limit = std::numeric_limits<std::size_t>::max(), std::span<const char> rigid = {});

bool is_embedded_automorphism(const PlaneGraph& g, std::span<const VertexId> perm,
                              std::span<const char> rigid = {});

using Path = std::vector<VertexId>;

}  // namespace gasket
