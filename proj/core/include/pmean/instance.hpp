#pragma once

#include <vector>

#include "pmean/good_set.hpp"
#include "pmean/valuation.hpp"

namespace pmean {

// n agents sharing one valuation over a set of goods. The goods field lets
// algorithms work on reduced instances (a subset of the original goods and
// fewer agents) without reindexing.
class Instance {
 public:
  // All goods {0, ..., v.num_goods()-1}.
  Instance(unsigned n, Valuation v);
  Instance(unsigned n, Valuation v, GoodSet goods);

  unsigned num_agents() const { return n_; }
  unsigned num_goods() const { return goods_.size(); }
  GoodSet goods() const { return goods_; }
  const Valuation& valuation() const { return v_; }

  // Same valuation, given agents and goods.
  Instance reduced(unsigned n, GoodSet goods) const { return Instance(n, v_, goods); }

 private:
  unsigned n_;
  Valuation v_;
  GoodSet goods_;
};

// Ordered n-partition of an instance's goods. Empty bundles are allowed.
struct Allocation {
  std::vector<GoodSet> bundles;

  std::size_t size() const { return bundles.size(); }
  bool operator==(const Allocation&) const = default;
};

// Pairwise disjoint bundles whose union is exactly `goods`.
bool is_partition_of(const Allocation& alloc, GoodSet goods);

// Partition of the instance's goods into exactly num_agents() bundles.
bool is_valid_for(const Allocation& alloc, const Instance& inst);

std::vector<double> bundle_values(const Valuation& v, const Allocation& alloc);

}  // namespace pmean
