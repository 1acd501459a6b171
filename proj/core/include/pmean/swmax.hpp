#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pmean/common.hpp"
#include "pmean/instance.hpp"

namespace pmean {

enum class SwBackend { ExactBruteForce, GreedyDemand };
enum class Guarantee { Exact, HalfApprox, Heuristic };

std::string_view to_string(SwBackend b);
std::string_view to_string(Guarantee g);
// "exact" or "greedy".
SwBackend parse_sw_backend(std::string_view text);

// An allocation together with its average social welfare F = M_1(alloc).
struct SwEstimate {
  Allocation alloc;
  double f_value = 0.0;
  Guarantee guarantee = Guarantee::Heuristic;
};

// Stand-in for the factor-2 social-welfare subroutine. ExactBruteForce
// returns an M_1-optimal allocation (first in enumeration order on ties);
// GreedyDemand is a heuristic with no a-priori guarantee.
SwEstimate sw_estimate(const Instance& inst, SwBackend backend, const Budget& budget = {});

// Every assignment of `goods` to n labeled bundles, exactly once. Goods are
// digits of a base-n counter with the lowest-indexed good most significant,
// so the first allocation puts every good in bundle 0.
class LabeledPartitions {
 public:
  // Throws BudgetExceeded unless n^|goods| <= budget.max_states.
  LabeledPartitions(GoodSet goods, unsigned n, const Budget& budget = {});

  const Allocation& current() const { return alloc_; }
  // Position of current() in enumeration order, starting at 0.
  std::uint64_t index() const { return index_; }
  std::uint64_t count() const { return count_; }
  // Moves to the next allocation; false once the enumeration is exhausted.
  bool advance();

  // Bundle indices touched by the most recent advance().
  const std::vector<unsigned>& changed_bundles() const { return changed_; }

 private:
  std::vector<unsigned> goods_;
  std::vector<unsigned> digits_;
  unsigned n_;
  Allocation alloc_;
  std::uint64_t index_ = 0;
  std::uint64_t count_ = 0;
  std::vector<unsigned> changed_;
};

// Materializes the full stream for goods {0, ..., m-1}.
std::vector<Allocation> enumerate_labeled_partitions(unsigned m, unsigned n,
                                                     const Budget& budget = {});

}  // namespace pmean
