#pragma once

#include <string>
#include <variant>

#include "dwl/decomposition.hpp"
#include "dwl/digraph.hpp"

#include "json.hpp"

namespace dwl {

/// Graph text format: header "n m", then m lines "u v" with 0-based
/// endpoints; lines starting with '#' are ignored. Parse/serialize round-trips
/// are identity up to comment removal and arc sorting.
Digraph parse_digraph(const std::string& text);
std::string serialize_digraph(const Digraph& g);

using AnyDecomposition = std::variant<DirectedPathDecomposition, DagDecomposition,
                                      KellyDecomposition, ArborealDecomposition>;

DecompositionKind kind_of(const AnyDecomposition& d);

/// JSON object:
///   {"kind": "dpd"|"dag"|"kelly"|"arboreal",
///    "universe": [ints],
///    "nodes": [{"id": int, "bag": [ints], "guard": [ints] (kelly only)}],
///    "arcs": [{"from": int, "to": int, "bag": [ints] (arboreal only)}]}
/// Arrays sorted ascending, ids unique. Readers reject unknown keys and
/// structural violations with JSON-path diagnostics.
nlohmann::ordered_json decomposition_to_json(const AnyDecomposition& d);
AnyDecomposition decomposition_from_json(const nlohmann::json& j);

std::string decomposition_to_string(const AnyDecomposition& d);
AnyDecomposition decomposition_from_string(const std::string& text);

}  // namespace dwl
