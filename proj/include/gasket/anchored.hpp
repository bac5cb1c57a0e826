#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gasket/per2.hpp"

namespace gasket {

struct AnchoredCycle {
  EmbeddedCycle cycle;        // starts a0, b0
  std::size_t iteration = 0;  // j with F^j(cycle) = critical loop
  int birth = 0;              // first level containing the whole cycle
};

// Shortest anchored cycles of one level; cycles[0] is the critical loop.
struct AnchoredCycleSet {
  int level = 0;
  std::size_t l = 0;
  std::vector<AnchoredCycle> cycles;
  std::vector<std::pair<std::size_t, std::size_t>> siblings;  // i < j

  std::size_t sibling_count(std::size_t i) const;
};

// All cycles of length 2l through E0 in G^level, each traced forward to the
// critical loop. Throws OrbitEscape.
AnchoredCycleSet shortest_anchored_cycles(const GraphTower& tower, const Per2Core& core, int level);

struct SiblingReport {
  GasketType type = GasketType::I;
  int level = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::size_t> counts;     // siblings per cycle
  std::vector<std::size_t> resolved;   // cycles already present one level down
  std::vector<std::size_t> boundary;   // the rest, excluded from the verdict
  bool matches = false;
  std::string expected;
  std::string observed;
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;

  void check() const;  // throws PatternViolation
};

SiblingReport sibling_report(const AnchoredCycleSet& s, GasketType type);

// Faces of U - Int(E0), U the union of the shortest anchored cycles. The face
// containing E0 is kept but not indexed.
struct Gap {
  std::vector<VertexId> boundary;  // face walk in level ids
  std::optional<int> index;        // n of R_n
  bool contains_e0 = false;
  std::vector<VertexId> vertices;  // closure
  std::vector<EdgeKey> edges;      // closure, sorted
};

struct GapDecomposition {
  int level = 0;
  std::vector<Gap> gaps;
  std::optional<std::size_t> r0;
  std::optional<std::size_t> r0_partner;  // the cycle C1 bounding R0 with C0
  std::size_t e0_gap = 0;
  std::vector<std::vector<std::size_t>> vertex_gaps;  // per level vertex

  const Gap& gap(int n) const;  // throws NotFound
};

// Throws NotEnoughCycles when fewer than two cycles are available.
GapDecomposition gap_decomposition(const GraphTower& tower, const AnchoredCycleSet& s);

// G^level restricted to the closure of a gap, as a disk graph.
PlaneGraph gap_subgraph(const GraphTower& tower, const GapDecomposition& gaps, std::size_t gap);

// Paths u -> v of length <= max_len without chords between vertices at index
// distance >= 2. Throws LimitExceeded once more than `limit` paths turn up.
std::vector<Path> local_geodesics(const PlaneGraph& g, VertexId u, VertexId v, std::size_t max_len,
                                  std::size_t limit = 1'000'000);

struct GeodesicSearch {
  VertexId from = kNoVertex;
  std::function<bool(VertexId)> is_target;
  std::function<bool(VertexId)> interior_ok;
  std::function<bool(VertexId, VertexId)> edge_ok;  // optional
  std::size_t max_len = 0;
  std::size_t limit = 1'000'000;
};

// Local geodesics (chords checked in all of g) from `from` that end at the
// first target reached, visiting only admissible interior vertices. Stops
// early when `visit` returns false.
void for_each_local_geodesic(const PlaneGraph& g, const GeodesicSearch& q,
                             const std::function<bool(const Path&)>& visit);

// Labels of the two boundary arcs of R0.
struct R0Frame {
  std::vector<VertexId> a;  // a0, a1, ..., a_{2l-2}, b0 along C0
  std::vector<VertexId> b;  // b0, b1, ..., b_{2l-2}, a0 along C1, f(b_i) = a_i
  std::size_t l = 0;
};

R0Frame r0_frame(const GraphTower& tower, const AnchoredCycleSet& s, const GapDecomposition& gaps);

struct R0ArcReport {
  int level = 0;
  std::optional<std::size_t> n;  // shortest R0-arc a_l -> a0 lifting to b_l -> a1
  std::optional<std::size_t> k;  // shortest a_l -> b_i local geodesic through Int R0
  std::optional<bool> bound_holds;
  Path n_witness, k_witness;
  bool stabilized = false;       // filled in by callers comparing depths
  std::string note;
};

// Searches G^level for the arcs; the tower must reach level + 1 so that arcs
// can be lifted. Absent values mean nothing was found within max_len.
R0ArcReport r0_arc_search(const GraphTower& tower, const AnchoredCycleSet& s,
                          const GapDecomposition& gaps, std::size_t max_len);

struct SymmetryVerdict {
  int level = 0;
  bool symmetric = false;
  std::optional<Automorphism> witness;  // in disk-graph ids
  std::size_t disk_vertices = 0;
  std::size_t interior_vertices = 0;
  bool trivial = false;                 // no interior vertex: boundary arcs alone decide
  std::string detail;
};

// Orientation-preserving symmetry of a disk graph exchanging the boundary
// arcs a = (x0 .. y) and b = (y .. x0) with a[i] <-> b[i]. Rotation is enforced
// at interior vertices only.
SymmetryVerdict disk_symmetry(const PlaneGraph& disk, const std::vector<VertexId>& arc_a,
                              const std::vector<VertexId>& arc_b);

SymmetryVerdict gap_symmetry_test(const GraphTower& tower, const AnchoredCycleSet& s,
                                  const GapDecomposition& gaps);

// n x n grid with CCW rotation, corners named "0,0" and "n-1,n-1"; returns the
// graph and the two boundary arcs between those corners.
struct GridDisk {
  PlaneGraph graph;
  std::vector<VertexId> arc_a, arc_b;
};
GridDisk grid_disk(std::size_t n);

}  // namespace gasket
