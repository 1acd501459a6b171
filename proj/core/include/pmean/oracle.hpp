#pragma once

#include <span>
#include <vector>

#include "pmean/common.hpp"
#include "pmean/instance.hpp"
#include "pmean/means.hpp"

namespace pmean {

// A p-optimal allocation found by exhaustive search.
struct OptResult {
  Exponent p = Exponent::finite(1.0);
  Allocation alloc;
  double welfare = 0.0;
};

// Exact maximizer of M_p over every labeled partition; the first allocation
// in enumeration order wins ties.
OptResult p_opt_brute(const Instance& inst, Exponent p, const Budget& budget = {});

// Same as calling p_opt_brute once per exponent, with a single scan.
std::vector<OptResult> p_opt_brute_grid(const Instance& inst, std::span<const Exponent> grid,
                                        const Budget& budget = {});

// True iff OPT_1 >= OPT_p - kEpsilon for every p in the grid.
bool check_monotonicity(const Instance& inst, std::span<const Exponent> grid,
                        const Budget& budget = {});

struct StructuralReport {
  bool holds = true;
  // Bundles of the p-optimal allocation worth more than 11.33 * f_value.
  unsigned premise_bundles = 0;
  OptResult optimum;

  bool vacuous() const { return premise_bundles == 0; }
};

// Finds A*(inst, p) by brute force and checks that every bundle worth more
// than 11.33 * f_value contains a good worth at least 1/40 of the bundle.
// p must be -inf or finite with p < 0.4 (InvalidArgument otherwise).
StructuralReport check_structural_lemma(const Instance& inst, Exponent p, double f_value,
                                        const Budget& budget = {});

}  // namespace pmean
