#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gasket {

// One code per failure mode exposed by the library. The CLI prints the
// string form and maps every code to a nonzero exit status.
enum class ErrorCode {
  // plane_graph
  NotSimple,
  NotSpherical,
  Disconnected,
  InvalidRotation,
  UnknownVertex,
  Unreachable,
  // branched_cover
  ContainmentViolation,
  NotSimplicial,
  RiemannHurwitz,
  FiberSaturation,
  RotationIncompatible,
  FaceCovering,
  EdgeNotFixed,
  NoFixedEdge,
  MultipleFixedEdges,
  EdgeNotAbsorbed,
  CriticalCycle,
  LevyObstruction,
  PatternMismatch,
  NoLift,
  // per2
  NotPer2,
  NotUnique,
  DistanceMismatch,
  Inconsistent,
  LimitExceeded,
  // anchored_analysis
  OrbitEscape,
  PatternViolation,
  NotEnoughCycles,
  NotFound,
  // packing
  NoRealSolution,
  DegenerateConfiguration,
  InvalidRoot,
  EmbeddingFailure,
  // io / cli
  SchemaError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gasket
