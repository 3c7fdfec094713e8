#pragma once

// Internal JSON helpers shared by the file-format readers and writers.

#include "succmso/circuit.hpp"
#include "succmso/graph.hpp"

#include <json.hpp>

#include <string_view>

namespace succmso::detail {

nlohmann::ordered_json parse_json(std::string_view text);
std::uint64_t require_uint(const nlohmann::ordered_json& obj, const char* key, const char* what);

nlohmann::ordered_json circuit_to_json(const BoolCircuit& circuit);
BoolCircuit circuit_from_json(const nlohmann::ordered_json& doc);

nlohmann::ordered_json gadget_to_json(const BiboundariedGraph& g);
BiboundariedGraph gadget_from_json(const nlohmann::ordered_json& obj);

} // namespace succmso::detail
