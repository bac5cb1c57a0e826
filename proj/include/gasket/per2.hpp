#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gasket/branched_cover.hpp"

namespace gasket {

enum class GasketType { I, IIA, IIB };

std::string_view to_string(GasketType type) noexcept;

// Quadratic core with a critical 2-cycle a0 <-> b0 and a strictly
// pre-periodic critical vertex c.
struct Per2Core {
  CoreSpec spec;
  VertexId a0 = kNoVertex;
  VertexId b0 = kNoVertex;
  VertexId c = kNoVertex;
  std::size_t q = 0;                 // first j >= 1 with f^j(c) in {a0, b0}
  std::vector<VertexId> c_orbit;     // c, f(c), ..., f^q(c)
  // G0 is exactly the union of f^-i(E0), i < q. Non-canonical cores are
  // accepted when the cycle of G1 is still the map's critical loop.
  bool canonical = false;

  // Validates the core and the Per2 structure; throws the failing rule's code
  // or NotPer2 / NotUnique / DistanceMismatch.
  static Per2Core make(CoreSpec spec);

  const std::string& name() const noexcept { return spec.name; }
};

struct CriticalLoop {
  EmbeddedCycle cycle;              // a0, a1, ..., a_{2l-2}, b0
  std::size_t l = 0;
  std::vector<VertexId> image_path;  // f(cycle) as a simple path from b0
  std::vector<EdgeKey> image_edges;  // sorted
};

// The unique cycle of G1. Throws NotUnique or DistanceMismatch.
CriticalLoop critical_loop(const Per2Core& core);

// Throws Inconsistent when the intersection misses E0.
GasketType classify_type(const Per2Core& core);

// Orientation-preserving canonical form of a core, independent of vertex
// names. Two cores are embedded-isomorphic (fixing E0 as an oriented edge)
// iff their forms agree.
std::string canonical_form(const CoreSpec& spec);

// The same core with vertices renamed to a0..a_{2l-2}, b0 along the critical
// loop and t1, t2, ... elsewhere, in canonical order.
Per2Core canonical_naming(const Per2Core& core, std::string name);

Per2Core iib_l2();
std::vector<Per2Core> bundled_cores();
Per2Core bundled_core(std::string_view name);  // throws UnknownVertex

// Every valid Per2 core with at most `max_vertices_g1` vertices in G1, up to
// embedded isomorphism, in minimal order (|V(G1)|, |E(G0)|, canonical form).
// `threads` == 0 uses GASKET_LAB_THREADS or the hardware concurrency.
std::vector<Per2Core> enumerate_small_cores(std::size_t max_vertices_g1, unsigned threads = 0);

// First core of each type in minimal order.
std::optional<Per2Core> minimal_core(const std::vector<Per2Core>& cores, GasketType type);

}  // namespace gasket
