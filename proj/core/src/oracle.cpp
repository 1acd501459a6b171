#include "pmean/oracle.hpp"

#include "pmean/allocator.hpp"
#include "pmean/swmax.hpp"
#include "subset_values.hpp"

namespace pmean {

std::vector<OptResult> p_opt_brute_grid(const Instance& inst, std::span<const Exponent> grid,
                                        const Budget& budget) {
  const unsigned n = inst.num_agents();
  const detail::SubsetValues value(inst.valuation(), inst.goods());
  LabeledPartitions parts(inst.goods(), n, budget);

  std::vector<double> values(n);
  for (unsigned i = 0; i < n; ++i) values[i] = value(parts.current().bundles[i]);

  std::vector<OptResult> best;
  best.reserve(grid.size());
  for (const Exponent& p : grid) best.push_back({p, parts.current(), p_mean(values, p)});

  while (parts.advance()) {
    for (unsigned b : parts.changed_bundles()) values[b] = value(parts.current().bundles[b]);
    for (OptResult& r : best) {
      const double w = p_mean(values, r.p);
      if (w > r.welfare) {
        r.welfare = w;
        r.alloc = parts.current();
      }
    }
  }
  return best;
}

OptResult p_opt_brute(const Instance& inst, Exponent p, const Budget& budget) {
  return p_opt_brute_grid(inst, std::span<const Exponent>(&p, 1), budget).front();
}

bool check_monotonicity(const Instance& inst, std::span<const Exponent> grid,
                        const Budget& budget) {
  std::vector<Exponent> all(grid.begin(), grid.end());
  all.push_back(Exponent::finite(1.0));
  const std::vector<OptResult> opts = p_opt_brute_grid(inst, all, budget);
  const double opt1 = opts.back().welfare;
  for (std::size_t i = 0; i + 1 < opts.size(); ++i) {
    if (opt1 < opts[i].welfare - kEpsilon) return false;
  }
  return true;
}

StructuralReport check_structural_lemma(const Instance& inst, Exponent p, double f_value,
                                        const Budget& budget) {
  if (!p.is_neg_infinity() && !(p.value() < 0.4)) {
    throw InvalidArgument("structural check applies to p < 0.4 or p = -inf, got " +
                          p.to_string());
  }
  StructuralReport report;
  report.optimum = p_opt_brute(inst, p, budget);
  const Valuation& v = inst.valuation();
  for (GoodSet bundle : report.optimum.alloc.bundles) {
    const double bundle_value = v.value(bundle);
    if (!(bundle_value > AlgConstants::high_bundle_factor * f_value)) continue;
    ++report.premise_bundles;
    bool witness = false;
    for (unsigned g : bundle.members()) {
      if (v.value_of(g) >= bundle_value / AlgConstants::approx_factor - kEpsilon) {
        witness = true;
        break;
      }
    }
    report.holds = report.holds && witness;
  }
  return report;
}

}  // namespace pmean
