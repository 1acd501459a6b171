#include "pmean/swmax.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subset_values.hpp"

namespace pmean {

std::string_view to_string(SwBackend b) {
  switch (b) {
    case SwBackend::ExactBruteForce: return "exact";
    case SwBackend::GreedyDemand: return "greedy";
  }
  return "?";
}

std::string_view to_string(Guarantee g) {
  switch (g) {
    case Guarantee::Exact: return "exact";
    case Guarantee::HalfApprox: return "half-approx";
    case Guarantee::Heuristic: return "heuristic";
  }
  return "?";
}

SwBackend parse_sw_backend(std::string_view text) {
  if (text == "exact") return SwBackend::ExactBruteForce;
  if (text == "greedy") return SwBackend::GreedyDemand;
  throw InvalidArgument("unknown sw backend '" + std::string(text) + "' (expected exact|greedy)");
}

LabeledPartitions::LabeledPartitions(GoodSet goods, unsigned n, const Budget& budget)
    : goods_(goods.members()), digits_(goods_.size(), 0), n_(n) {
  if (n == 0) throw InvalidArgument("labeled partitions need at least one bundle");
  require_partition_budget(n, static_cast<unsigned>(goods_.size()), budget);
  count_ = saturating_pow(n, static_cast<unsigned>(goods_.size()));
  alloc_.bundles.assign(n, GoodSet());
  alloc_.bundles[0] = goods;
}

bool LabeledPartitions::advance() {
  changed_.clear();
  for (std::size_t i = goods_.size(); i-- > 0;) {
    const unsigned g = goods_[i];
    const unsigned from = digits_[i];
    const unsigned to = from + 1 < n_ ? from + 1 : 0;
    alloc_.bundles[from].erase(g);
    alloc_.bundles[to].insert(g);
    digits_[i] = to;
    changed_.push_back(from);
    changed_.push_back(to);
    if (to != 0) {
      ++index_;
      return true;
    }
  }
  // Every digit wrapped: back at the first allocation.
  changed_.clear();
  return false;
}

std::vector<Allocation> enumerate_labeled_partitions(unsigned m, unsigned n, const Budget& budget) {
  LabeledPartitions parts(GoodSet::full(m), n, budget);
  std::vector<Allocation> out;
  out.reserve(static_cast<std::size_t>(parts.count()));
  do {
    out.push_back(parts.current());
  } while (parts.advance());
  return out;
}

namespace {

SwEstimate exact_estimate(const Instance& inst, const Budget& budget) {
  const unsigned n = inst.num_agents();
  const detail::SubsetValues value(inst.valuation(), inst.goods());
  LabeledPartitions parts(inst.goods(), n, budget);

  std::vector<double> values(n);
  for (unsigned i = 0; i < n; ++i) values[i] = value(parts.current().bundles[i]);
  double best_total = std::accumulate(values.begin(), values.end(), 0.0);
  Allocation best = parts.current();

  while (parts.advance()) {
    for (unsigned b : parts.changed_bundles()) values[b] = value(parts.current().bundles[b]);
    const double total = std::accumulate(values.begin(), values.end(), 0.0);
    if (total > best_total) {
      best_total = total;
      best = parts.current();
    }
  }
  return {std::move(best), best_total / n, Guarantee::Exact};
}

// Agents take turns; each turn the agent adds the remaining good with the
// largest marginal value (lowest index on ties).
SwEstimate greedy_estimate(const Instance& inst) {
  const unsigned n = inst.num_agents();
  const Valuation& v = inst.valuation();
  Allocation alloc;
  alloc.bundles.assign(n, GoodSet());
  std::vector<double> values(n, 0.0);

  GoodSet remaining = inst.goods();
  for (unsigned turn = 0; !remaining.empty(); turn = (turn + 1) % n) {
    unsigned pick = remaining.first();
    double pick_value = -1.0;
    for (unsigned g : remaining.members()) {
      GoodSet with = alloc.bundles[turn];
      with.insert(g);
      const double val = v.value(with);
      if (val > pick_value) {
        pick_value = val;
        pick = g;
      }
    }
    alloc.bundles[turn].insert(pick);
    values[turn] = pick_value;
    remaining.erase(pick);
  }
  const double total = std::accumulate(values.begin(), values.end(), 0.0);
  return {std::move(alloc), total / n, Guarantee::Heuristic};
}

}  // namespace

SwEstimate sw_estimate(const Instance& inst, SwBackend backend, const Budget& budget) {
  switch (backend) {
    case SwBackend::ExactBruteForce: return exact_estimate(inst, budget);
    case SwBackend::GreedyDemand: return greedy_estimate(inst);
  }
  throw InvalidArgument("unknown sw backend");
}

}  // namespace pmean
