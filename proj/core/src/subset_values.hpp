#pragma once

#include <vector>

#include "pmean/good_set.hpp"
#include "pmean/valuation.hpp"

namespace pmean::detail {

// Memoized v(S) for every S within a fixed good set, used by the brute-force
// scans. Falls back to direct evaluation when m is too large to tabulate.
class SubsetValues {
 public:
  static constexpr unsigned kMaxTabulatedGoods = 20;

  SubsetValues(const Valuation& v, GoodSet goods) : v_(v) {
    if (v.num_goods() > kMaxTabulatedGoods) return;
    table_.assign(std::size_t{1} << v.num_goods(), 0.0);
    const std::uint64_t all = goods.bits();
    std::uint64_t s = all;
    while (true) {
      table_[s] = v.value(GoodSet(s));
      if (s == 0) break;
      s = (s - 1) & all;
    }
  }

  double operator()(GoodSet s) const {
    return table_.empty() ? v_.value(s) : table_[static_cast<std::size_t>(s.bits())];
  }

 private:
  const Valuation& v_;
  std::vector<double> table_;
};

}  // namespace pmean::detail
