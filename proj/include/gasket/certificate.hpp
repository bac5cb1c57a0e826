#pragma once

#include <array>
#include <string>

#include "gasket/anchored.hpp"
#include "gasket/io.hpp"
#include "gasket/packing.hpp"

namespace gasket {

struct CertifyOptions {
  int depth = 3;
  std::size_t max_arc_length = 16;
  bool deterministic = false;  // omit the timestamp
};

// Machine-readable summary of every finite-depth check for one core; follows
// schemas/certificate.schema.json with kind = "core".
Json certify_core(const Per2Core& core, const CertifyOptions& options);

// kind = "packing".
Json certify_packing(const CirclePacking& packing, bool deterministic);

// Verdict on two certificates, e.g. "non-equivalent: bipartite vs odd cycle".
// Throws SchemaError when the documents are not certificates of the right kind.
Json compare_certificates(const Json& core_certificate, const Json& packing_certificate);

Json packing_to_json(const CirclePacking& packing);

}  // namespace gasket
