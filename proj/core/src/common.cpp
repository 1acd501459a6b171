#include "pmean/common.hpp"

#include <limits>
#include <string>

namespace pmean {

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

void require_partition_budget(unsigned n, unsigned m, const Budget& budget) {
  const std::uint64_t states = saturating_pow(n, m);
  if (states > budget.max_states) {
    throw BudgetExceeded("enumeration of " + std::to_string(n) + "^" + std::to_string(m) +
                         " labeled partitions exceeds budget of " +
                         std::to_string(budget.max_states) + " states");
  }
}

}  // namespace pmean
