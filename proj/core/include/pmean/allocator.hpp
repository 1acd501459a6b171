#pragma once

#include <vector>

#include "pmean/common.hpp"
#include "pmean/instance.hpp"
#include "pmean/swmax.hpp"

namespace pmean {

// Thresholds of the two-phase algorithm.
struct AlgConstants {
  // A good is "high value" when v(g) >= F / phase1_divisor.
  static constexpr double phase1_divisor = 3.53;
  // Phase-two bundles are filled up to just below F * alglow_fraction.
  static constexpr double alglow_fraction = 1.0 / 3.0;
  static constexpr double approx_factor = 40.0;
  static constexpr double high_bundle_factor = 11.33;
  static constexpr double extraction_floor_divisor = 20.0;
  static constexpr double combined_divisor = 7.06;
};

static_assert(AlgConstants::phase1_divisor * AlgConstants::high_bundle_factor <=
              AlgConstants::approx_factor);
static_assert(AlgConstants::combined_divisor == 2 * AlgConstants::phase1_divisor);

struct AlgTrace {
  // Goods assigned as singletons, in assignment order (bundle t holds
  // singleton_goods[t]).
  std::vector<unsigned> singleton_goods;
  // F of the instance before each phase-one test: f_values[t] is F after t
  // singletons were removed, so there are k + 1 entries.
  std::vector<double> f_values;
  // Bundles produced by the second phase, for the last n - k agents.
  std::vector<GoodSet> phase2_bundles;

  std::size_t k() const { return singleton_goods.size(); }
};

struct AlgResult {
  Allocation alloc;
  AlgTrace trace;
};

struct AlgLowResult {
  Allocation bundles;
  // F of the instance the bundles were cut from.
  double f_value = 0.0;
};

// Phase one assigns high-value goods as singletons while the top remaining
// good clears F/3.53 of the shrinking instance; phase two splits the rest.
// Stops early when one agent remains or the top good is worthless.
AlgResult alg(const Instance& inst, SwBackend backend, const Budget& budget = {});

// Phase two on its own: cuts bundles of value just under F/3 out of a
// welfare-maximizing allocation's bundles and hands leftovers to the last
// agent. Throws PreconditionViolated if the source bundles run out first,
// which happens only when some good exceeds F/3.53.
AlgLowResult alg_low(const Instance& inst, SwBackend backend, const Budget& budget = {});
AlgLowResult alg_low(const Instance& inst, const SwEstimate& estimate);

// Repeatedly peels sub-bundles of value in [f/20, f/3] off `s` while the
// remainder is worth more than f/3. Requires v(s) >= f/3 and every good in s
// worth at most f/3.53 (PreconditionViolated otherwise).
std::vector<GoodSet> extract_subbundles(GoodSet s, const Valuation& v, double f);

}  // namespace pmean
