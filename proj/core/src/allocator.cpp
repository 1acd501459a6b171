#include "pmean/allocator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pmean {

AlgResult alg(const Instance& inst, SwBackend backend, const Budget& budget) {
  const Valuation& v = inst.valuation();
  const unsigned n = inst.num_agents();

  // Non-increasing singleton value, ascending index on ties.
  std::vector<unsigned> order = inst.goods().members();
  std::vector<double> single(v.num_goods(), 0.0);
  for (unsigned g : order) single[g] = v.value_of(g);
  std::stable_sort(order.begin(), order.end(),
                   [&](unsigned a, unsigned b) { return single[a] > single[b]; });

  AlgResult result;
  result.alloc.bundles.assign(n, GoodSet());
  AlgTrace& trace = result.trace;

  GoodSet remaining = inst.goods();
  unsigned agents_left = n;
  SwEstimate estimate = sw_estimate(inst, backend, budget);
  trace.f_values.push_back(estimate.f_value);

  for (unsigned g : order) {
    if (agents_left <= 1) break;
    if (single[g] == 0.0) break;
    const double threshold = estimate.f_value / AlgConstants::phase1_divisor;
    if (single[g] < threshold - kEpsilon) break;

    const unsigned agent = n - agents_left;
    result.alloc.bundles[agent] = GoodSet::single(g);
    trace.singleton_goods.push_back(g);
    remaining.erase(g);
    --agents_left;

    estimate = sw_estimate(inst.reduced(agents_left, remaining), backend, budget);
    trace.f_values.push_back(estimate.f_value);
  }

  const Instance rest = inst.reduced(agents_left, remaining);
  AlgLowResult low = alg_low(rest, estimate);
  const std::size_t k = trace.k();
  for (std::size_t i = 0; i < low.bundles.size(); ++i) {
    result.alloc.bundles[k + i] = low.bundles.bundles[i];
  }
  trace.phase2_bundles = std::move(low.bundles.bundles);
  return result;
}

AlgLowResult alg_low(const Instance& inst, SwBackend backend, const Budget& budget) {
  return alg_low(inst, sw_estimate(inst, backend, budget));
}

AlgLowResult alg_low(const Instance& inst, const SwEstimate& estimate) {
  const Valuation& v = inst.valuation();
  const unsigned agents = inst.num_agents();
  if (estimate.alloc.size() != agents) {
    throw InvalidArgument("sw estimate has " + std::to_string(estimate.alloc.size()) +
                          " bundles for " + std::to_string(agents) + " agents");
  }
  const double f = estimate.f_value;
  const double threshold = f * AlgConstants::alglow_fraction - kEpsilon;

  // Source bundles by non-increasing value, original index on ties.
  std::vector<GoodSet> source = estimate.alloc.bundles;
  std::vector<double> source_value = bundle_values(v, estimate.alloc);
  std::vector<unsigned> rank(agents);
  std::iota(rank.begin(), rank.end(), 0u);
  std::stable_sort(rank.begin(), rank.end(),
                   [&](unsigned a, unsigned b) { return source_value[a] > source_value[b]; });

  std::vector<GoodSet> out(agents);
  unsigned a = 0;
  unsigned i = 0;
  while (a + 1 < agents) {
    if (i >= agents) {
      throw PreconditionViolated(
          "phase-two source bundles exhausted with " + std::to_string(agents - a) +
          " bundles unfilled; some good exceeds F/3.53");
    }
    GoodSet& s = source[rank[i]];
    if (!s.empty()) {
      const unsigned g = s.first();
      GoodSet with = out[a];
      with.insert(g);
      if (v.value(with) < threshold) {
        out[a] = with;
        s.erase(g);
      } else {
        ++a;
      }
    } else if (threshold <= 0.0) {
      // F is (numerically) zero: no good can ever be added, so the bundle
      // counts as filled.
      ++a;
    }
    if (v.value(s) < threshold) ++i;
  }

  GoodSet used;
  for (unsigned b = 0; b + 1 < agents; ++b) used |= out[b];
  out[agents - 1] |= inst.goods() - used;
  return {Allocation{std::move(out)}, f};
}

std::vector<GoodSet> extract_subbundles(GoodSet s, const Valuation& v, double f) {
  const double cap = f * AlgConstants::alglow_fraction;
  const double good_cap = f / AlgConstants::phase1_divisor;
  if (v.value(s) < cap - kEpsilon) {
    throw PreconditionViolated("extract_subbundles needs v(S) >= f/3");
  }
  for (unsigned g : s.members()) {
    if (v.value_of(g) > good_cap + kEpsilon) {
      throw PreconditionViolated("good " + std::to_string(g) + " exceeds f/3.53");
    }
  }

  std::vector<GoodSet> out;
  GoodSet rest = s;
  while (v.value(rest) > cap + kEpsilon) {
    GoodSet piece;
    for (unsigned g : rest.members()) {
      GoodSet with = piece;
      with.insert(g);
      if (v.value(with) > cap + kEpsilon) break;
      piece = with;
    }
    if (piece.empty()) break;
    rest -= piece;
    out.push_back(piece);
  }
  return out;
}

}  // namespace pmean
