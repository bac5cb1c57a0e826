#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gasket/plane_graph.hpp"

namespace gasket {

// Finite core F: g1 -> g0 of a degree-d simplicial branched covering.
//
// After create(), whenever every g0 name occurs in g1, the g0 vertices occupy
// the g1 indices [0, |g0|) in g0 order, so a g0 index is also a g1 index.
struct CoreSpec {
  std::string name;
  int degree = 2;
  PlaneGraph g0;
  PlaneGraph g1;
  std::vector<VertexId> vertex_map;  // g1 vertex -> g0 index of its image
  std::vector<int> local_degree;     // per g1 vertex
  VertexId fixed_a = kNoVertex;      // E0 = [fixed_a, fixed_b], g1 indices
  VertexId fixed_b = kNoVertex;
  std::optional<std::pair<VertexId, VertexId>> critical;  // (a0, c)

  // Throws UnknownVertex / SchemaError for structurally malformed input.
  // Missing vertex_map or local_degree entries are schema errors; semantic
  // problems are left to validate_core().
  static CoreSpec create(std::string name, int degree, PlaneGraph g0, PlaneGraph g1,
                         const std::map<std::string, std::string>& vertex_map,
                         const std::map<std::string, int>& local_degree,
                         std::pair<std::string, std::string> fixed_edge,
                         std::optional<std::pair<std::string, std::string>> critical);

  std::map<std::string, std::string> vertex_map_by_name() const;
  std::map<std::string, int> local_degree_by_name() const;
  EdgeKey fixed_edge() const { return edge_key(fixed_a, fixed_b); }
  // True when g0 vertex i is g1 vertex i for every i.
  bool normalized() const;
};

enum class CoreRule {
  Containment,
  Simplicial,
  RiemannHurwitz,
  FiberSaturation,
  RotationCompatibility,
  FaceCovering,
  FixedEdge,
  EdgeAbsorption,
  CriticalCycles,
  ComplementConnected,
};

std::string_view to_string(CoreRule rule) noexcept;

struct RuleResult {
  CoreRule rule;
  ErrorCode code;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<RuleResult> rules;

  bool ok() const;
  const RuleResult& operator[](CoreRule rule) const;
  // First failing rule, if any.
  const RuleResult* first_failure() const;
};

ValidationReport validate_core(const CoreSpec& spec);

// Induced edge map and absorption times.
struct EdgeOrbit {
  EdgeKey edge;
  EdgeKey image;
  std::size_t steps;  // iterations until the fixed edge is reached
};

struct EdgeDynamics {
  EdgeKey fixed_edge;
  std::vector<EdgeOrbit> orbits;  // sorted by edge
  std::size_t max_steps = 0;
};

// Edge map of `g` under `image` (a simplicial self-map into g). Throws
// NotSimplicial, NoFixedEdge, MultipleFixedEdges or EdgeNotAbsorbed (some edge
// needs more than `bound` steps).
EdgeDynamics edge_dynamics(const PlaneGraph& g, std::span<const VertexId> image, std::size_t bound);
EdgeDynamics edge_dynamics(const CoreSpec& spec);

// G^0 ⊆ G^1 ⊆ ... ⊆ G^k with the covering map F: G^{j+1} -> G^j.
//
// Vertex indices are shared by all levels: level j consists of the first
// |V(G^j)| vertices of the top level. New vertices are named
// "<source>.<sheet>", where <source> is the image vertex and <sheet> ranks the
// containing face among the d preimages of its image face.
class GraphTower {
 public:
  // Levels 0 and 1 from a core. Throws the code of the first failing
  // validation rule when the core is invalid.
  explicit GraphTower(const CoreSpec& core);

  int depth() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  int degree() const noexcept { return core_.degree; }
  const CoreSpec& core() const noexcept { return core_; }
  const PlaneGraph& level(int k) const { return levels_.at(static_cast<std::size_t>(k)); }
  const PlaneGraph& top() const { return levels_.back(); }

  VertexId image(VertexId v) const { return image_.at(v); }
  std::span<const VertexId> images() const noexcept { return image_; }
  int local_degree(VertexId v) const { return local_degree_.at(v); }
  int birth_level(VertexId v) const { return birth_.at(v); }
  VertexId fixed_a() const noexcept { return core_.fixed_a; }
  VertexId fixed_b() const noexcept { return core_.fixed_b; }
  // Image of a vertex under F^n.
  VertexId iterate(VertexId v, std::size_t n) const;

  // Serialization used to compare towers for determinism.
  std::string canonical_serialization() const;

 private:
  friend GraphTower pullback(GraphTower tower);

  CoreSpec core_;
  std::vector<PlaneGraph> levels_;
  std::vector<VertexId> image_;
  std::vector<int> local_degree_;
  std::vector<int> birth_;
};

// Adds G^{k+1} = F^{-1}(G^k) by pasting, into every face u of G^k, a copy of
// the part of G^k lying in the image face F(u). Throws PatternMismatch.
GraphTower pullback(GraphTower tower);
GraphTower build_tower(const CoreSpec& core, int depth);

// Per-level structural audit of a tower.
struct LevelCheck {
  int level = 0;
  std::size_t vertices = 0, edges = 0, faces = 0;
  bool euler = false;
  bool counts = false;        // V, E, F recursions against level - 1
  bool simplicial = false;    // F maps edges of this level onto edges of level - 1
  bool fibers = false;        // fiber saturation over level - 1
  bool face_preimages = false;
  std::string detail;

  bool ok() const { return euler && counts && simplicial && fibers && face_preimages; }
};

LevelCheck verify_level(const GraphTower& tower, int k);

// Unique lift of `path` (a path of G^{depth-1}) starting at `start`. At a
// branch vertex the continuation keeps the turning index of the image path;
// at a branch start the first dart in rotation order is taken. Throws NoLift.
Path lift_path(const GraphTower& tower, std::span<const VertexId> path, VertexId start);

// Every lift of `path` starting at `start`, branching at critical vertices.
std::vector<Path> enumerate_lifts(const GraphTower& tower, std::span<const VertexId> path,
                                  VertexId start);

// Bipartition by eventual image: class 0 for vertices whose even iterates
// settle on fixed_a, class 1 for fixed_b.
std::vector<int> eventual_partition(const GraphTower& tower, int level);

}  // namespace gasket
