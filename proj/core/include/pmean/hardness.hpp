#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "pmean/common.hpp"
#include "pmean/instance.hpp"
#include "pmean/means.hpp"

namespace pmean::hardness {

// 3-dimensional matching instance over 3q vertices indexed globally:
// X = [0, q), Y = [q, 2q), Z = [2q, 3q). Each hyperedge is (x, y, z).
struct Gap3dmInstance {
  unsigned q = 0;
  std::vector<std::array<unsigned, 3>> edges;

  // Throws InvalidArgument unless q >= 1, there is at least one edge, and
  // every edge takes one vertex from each block.
  void validate() const;
};

// Indices into Gap3dmInstance::edges.
using Matching = std::vector<std::size_t>;

bool is_matching(const Gap3dmInstance& g, std::span<const std::size_t> edges);

// q agents, 3q goods, v(S) = max_i |S ∩ E_i| as an XOS valuation with one
// 0/1 clause per hyperedge.
Instance reduce(const Gap3dmInstance& g);

// Agent i receives the goods of the i-th matched edge. Throws NotPerfect
// unless the matching is a disjoint set of exactly q edges.
Allocation matching_to_allocation(const Gap3dmInstance& g, std::span<const std::size_t> matched);

inline constexpr std::size_t kMaxBruteForceEdges = 20;

// Maximum-cardinality matching by subset enumeration (first found on ties).
// Throws SizeLimitExceeded for more than 20 edges.
Matching max_matching_brute(const Gap3dmInstance& g);

struct NoSideReport {
  // max matching <= alpha * q.
  bool premise = false;
  bool holds = true;
  std::size_t max_matching = 0;
  double bound = 0.0;
  // Brute-force OPT_p per grid point; empty when the premise is false.
  std::vector<double> opt_welfare;
};

// When the maximum matching has at most alpha * q edges, checks that the
// brute-force OPT_p of the reduced instance is at most 2 + alpha for every
// grid p. Vacuously holds otherwise. alpha must lie in (0, 1).
NoSideReport verify_no_side(const Gap3dmInstance& g, double alpha, std::span<const Exponent> grid,
                            const Budget& budget = {});

// Random instance containing a planted perfect matching plus `extra_edges`
// random hyperedges, in shuffled order.
Gap3dmInstance random_yes_instance(unsigned q, unsigned extra_edges, std::uint64_t seed);

// Random instance whose edges all avoid vertex 0 of X, so no perfect
// matching exists. Requires q >= 2 and edges >= 1.
Gap3dmInstance random_no_instance(unsigned q, unsigned edges, std::uint64_t seed);

}  // namespace pmean::hardness
