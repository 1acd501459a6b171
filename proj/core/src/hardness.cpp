#include "pmean/hardness.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "pmean/oracle.hpp"
#include "pmean/rng.hpp"

namespace pmean::hardness {
namespace {

std::uint64_t edge_mask(const std::array<unsigned, 3>& e) {
  return (std::uint64_t{1} << e[0]) | (std::uint64_t{1} << e[1]) | (std::uint64_t{1} << e[2]);
}

template <class T>
void shuffle(std::vector<T>& xs, Rng& rng) {
  for (std::size_t i = xs.size(); i > 1; --i) {
    std::swap(xs[i - 1], xs[rng.below(i)]);
  }
}

std::array<unsigned, 3> random_edge(unsigned q, unsigned x_lo, Rng& rng) {
  const auto x = x_lo + static_cast<unsigned>(rng.below(q - x_lo));
  const auto y = q + static_cast<unsigned>(rng.below(q));
  const auto z = 2 * q + static_cast<unsigned>(rng.below(q));
  return {x, y, z};
}

}  // namespace

void Gap3dmInstance::validate() const {
  if (q == 0) throw InvalidArgument("3DM instance needs q >= 1");
  if (3 * q > GoodSet::kMaxGoods) throw SizeLimitExceeded("3DM instance needs 3q <= 64");
  if (edges.empty()) throw InvalidArgument("3DM instance needs at least one hyperedge");
  for (const auto& e : edges) {
    if (e[0] >= q || e[1] < q || e[1] >= 2 * q || e[2] < 2 * q || e[2] >= 3 * q) {
      throw InvalidArgument("hyperedge (" + std::to_string(e[0]) + "," + std::to_string(e[1]) +
                            "," + std::to_string(e[2]) + ") does not span X, Y, Z");
    }
  }
}

bool is_matching(const Gap3dmInstance& g, std::span<const std::size_t> edges) {
  std::uint64_t used = 0;
  for (std::size_t i : edges) {
    if (i >= g.edges.size()) return false;
    const std::uint64_t m = edge_mask(g.edges[i]);
    if (used & m) return false;
    used |= m;
  }
  return true;
}

Instance reduce(const Gap3dmInstance& g) {
  g.validate();
  const unsigned m = 3 * g.q;
  std::vector<std::vector<double>> clauses;
  clauses.reserve(g.edges.size());
  for (const auto& e : g.edges) {
    std::vector<double> w(m, 0.0);
    for (unsigned vertex : e) w[vertex] = 1.0;
    clauses.push_back(std::move(w));
  }
  return Instance(g.q, Valuation::xos(std::move(clauses)));
}

Allocation matching_to_allocation(const Gap3dmInstance& g, std::span<const std::size_t> matched) {
  g.validate();
  if (matched.size() != g.q || !is_matching(g, matched)) {
    throw NotPerfect("expected a disjoint set of " + std::to_string(g.q) + " hyperedges, got " +
                     std::to_string(matched.size()));
  }
  Allocation alloc;
  alloc.bundles.reserve(g.q);
  GoodSet used;
  for (std::size_t i : matched) {
    const GoodSet b(edge_mask(g.edges[i]));
    alloc.bundles.push_back(b);
    used |= b;
  }
  alloc.bundles.back() |= GoodSet::full(3 * g.q) - used;
  return alloc;
}

Matching max_matching_brute(const Gap3dmInstance& g) {
  g.validate();
  const std::size_t t = g.edges.size();
  if (t > kMaxBruteForceEdges) {
    throw SizeLimitExceeded("brute-force matching enumerates edge subsets; at most " +
                            std::to_string(kMaxBruteForceEdges) + " edges");
  }
  std::vector<std::uint64_t> masks(t);
  for (std::size_t i = 0; i < t; ++i) masks[i] = edge_mask(g.edges[i]);

  std::uint64_t best = 0;
  unsigned best_size = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << t); ++subset) {
    const auto size = static_cast<unsigned>(std::popcount(subset));
    if (size <= best_size) continue;
    std::uint64_t used = 0;
    bool disjoint = true;
    for (std::uint64_t b = subset; b != 0 && disjoint; b &= b - 1) {
      const std::uint64_t m = masks[static_cast<std::size_t>(std::countr_zero(b))];
      disjoint = (used & m) == 0;
      used |= m;
    }
    if (disjoint) {
      best = subset;
      best_size = size;
    }
  }
  Matching out;
  for (std::uint64_t b = best; b != 0; b &= b - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  }
  return out;
}

NoSideReport verify_no_side(const Gap3dmInstance& g, double alpha, std::span<const Exponent> grid,
                            const Budget& budget) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("alpha must lie in (0, 1)");
  NoSideReport r;
  r.max_matching = max_matching_brute(g).size();
  r.bound = 2.0 + alpha;
  r.premise = static_cast<double>(r.max_matching) <= alpha * g.q + kEpsilon;
  if (!r.premise) return r;
  const std::vector<OptResult> opts = p_opt_brute_grid(reduce(g), grid, budget);
  for (const OptResult& o : opts) {
    r.opt_welfare.push_back(o.welfare);
    r.holds = r.holds && o.welfare <= r.bound + kEpsilon;
  }
  return r;
}

Gap3dmInstance random_yes_instance(unsigned q, unsigned extra_edges, std::uint64_t seed) {
  if (q == 0) throw InvalidArgument("q must be positive");
  Rng rng(seed);
  std::vector<unsigned> ys(q), zs(q);
  std::iota(ys.begin(), ys.end(), q);
  std::iota(zs.begin(), zs.end(), 2 * q);
  shuffle(ys, rng);
  shuffle(zs, rng);
  Gap3dmInstance g{q, {}};
  for (unsigned x = 0; x < q; ++x) g.edges.push_back({x, ys[x], zs[x]});
  for (unsigned i = 0; i < extra_edges; ++i) g.edges.push_back(random_edge(q, 0, rng));
  shuffle(g.edges, rng);
  g.validate();
  return g;
}

Gap3dmInstance random_no_instance(unsigned q, unsigned edges, std::uint64_t seed) {
  if (q < 2) throw InvalidArgument("a NO instance needs q >= 2 (every q = 1 instance is perfect)");
  if (edges == 0) throw InvalidArgument("a NO instance needs at least one edge");
  Rng rng(seed);
  Gap3dmInstance g{q, {}};
  for (unsigned i = 0; i < edges; ++i) g.edges.push_back(random_edge(q, 1, rng));
  g.validate();
  return g;
}

}  // namespace pmean::hardness
