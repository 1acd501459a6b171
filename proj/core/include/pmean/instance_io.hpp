#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "pmean/instance.hpp"

namespace pmean {

// Instance files are JSON:
//   {"n": 2, "valuation": {"type": "additive", "weights": [...]}}
// with type one of additive | budget_additive (weights, cap) |
// xos (clauses) | explicit (table, indexed by bitmask with good j at bit j).
// Throws InvalidArgument on malformed input.
Instance parse_instance(std::string_view json_text);
Instance load_instance(const std::filesystem::path& path);

// Compact JSON; byte-identical for identical instances. Reduced instances
// are written with their full good set.
std::string instance_to_json(const Instance& inst);

}  // namespace pmean
