#pragma once

#include <cstdint>
#include <string_view>

#include "pmean/instance.hpp"

namespace pmean {

enum class Family { Additive, BudgetAdditive, Xos, Explicit };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);

struct GenParams {
  // Additive clauses for xos, and for explicit tables (tabulated max-of-k).
  unsigned clauses = 3;
  // Budget cap as a fraction of the total weight.
  double cap_fraction = 0.5;
};

// Deterministic random instance. Weights are Rng::uniform01() * 100 rounded
// to a 1e-6 grid, drawn good by good (clause by clause for xos/explicit).
// Explicit tables are max-of-k additive functions tabulated over all 2^m
// subsets, so they satisfy every axiom. Explicit requires m <= 16.
Instance generate_instance(Family family, unsigned n, unsigned m, std::uint64_t seed,
                           const GenParams& params = {});

}  // namespace pmean
