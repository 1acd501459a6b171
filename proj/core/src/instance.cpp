#include "pmean/instance.hpp"

#include "pmean/common.hpp"

namespace pmean {

Instance::Instance(unsigned n, Valuation v) : Instance(n, v, GoodSet::full(v.num_goods())) {}

Instance::Instance(unsigned n, Valuation v, GoodSet goods)
    : n_(n), v_(std::move(v)), goods_(goods) {
  if (n_ == 0) throw InvalidArgument("instance needs at least one agent");
  if (!goods_.within(v_.num_goods())) {
    throw InvalidArgument("instance goods exceed the valuation's good count");
  }
}

bool is_partition_of(const Allocation& alloc, GoodSet goods) {
  GoodSet seen;
  for (GoodSet b : alloc.bundles) {
    if (!b.disjoint(seen)) return false;
    seen |= b;
  }
  return seen == goods;
}

bool is_valid_for(const Allocation& alloc, const Instance& inst) {
  return alloc.size() == inst.num_agents() && is_partition_of(alloc, inst.goods());
}

std::vector<double> bundle_values(const Valuation& v, const Allocation& alloc) {
  std::vector<double> out;
  out.reserve(alloc.size());
  for (GoodSet b : alloc.bundles) out.push_back(v.value(b));
  return out;
}

}  // namespace pmean
