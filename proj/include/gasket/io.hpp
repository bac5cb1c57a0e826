#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "gasket/branched_cover.hpp"

namespace gasket {

using Json = nlohmann::ordered_json;

// Core documents follow schemas/core.schema.json. Parsing is strict: unknown
// or missing fields raise SchemaError.
CoreSpec core_from_json(const Json& doc);
CoreSpec parse_core(std::string_view text);
Json core_to_json(const CoreSpec& spec);
std::string core_to_string(const CoreSpec& spec);

Json graph_to_json(const PlaneGraph& g);
PlaneGraph graph_from_json(const Json& doc);

// Cores shipped with the library besides the hand-built iib_l2.
std::span<const std::string_view> bundled_core_documents();

struct DotStyle {
  std::optional<EdgeKey> highlight;       // drawn bold red
  std::vector<int> classes;               // two-colour fill when non-empty
  std::vector<int> level;                 // optional per-vertex level annotation
};

std::string to_dot(const PlaneGraph& g, const DotStyle& style = {}, std::string_view name = "G");

Json tower_to_json(const GraphTower& tower);
std::string tower_to_dot(const GraphTower& tower);

std::string read_file(const std::string& path);  // throws IoError
void write_file(const std::string& path, std::string_view content);

}  // namespace gasket
