#pragma once

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "pmean/good_set.hpp"

namespace pmean {

// v(S) = sum of weights in S.
struct Additive {
  std::vector<double> weights;
};

// v(S) = min(cap, sum of weights in S).
struct BudgetAdditive {
  std::vector<double> weights;
  double cap = 0.0;
};

// v(S) = max over clauses of the clause's additive value of S.
struct Xos {
  std::vector<std::vector<double>> clauses;
};

// v(S) = values[mask(S)]; the only family that can violate the axioms.
struct ExplicitTable {
  std::vector<double> values;
};

using PriceVector = std::vector<double>;

struct DemandResult {
  GoodSet set;
  double utility = 0.0;
};

struct AxiomReport {
  bool normalized = false;
  bool monotone = false;
  bool subadditive = false;

  bool all() const { return normalized && monotone && subadditive; }
};

// Immutable valuation shared by all agents. Construct through the named
// factories, which validate weights and sizes.
class Valuation {
 public:
  using Family = std::variant<Additive, BudgetAdditive, Xos, ExplicitTable>;

  static constexpr unsigned kMaxBudgetAdditiveDemandGoods = 24;
  static constexpr unsigned kMaxExplicitGoods = 16;
  static constexpr unsigned kMaxAxiomCheckGoods = 12;

  static Valuation additive(std::vector<double> weights);
  static Valuation budget_additive(std::vector<double> weights, double cap);
  static Valuation xos(std::vector<std::vector<double>> clauses);
  // table.size() must be a power of two 2^m with m <= 16.
  static Valuation explicit_table(std::vector<double> table);

  unsigned num_goods() const { return m_; }
  const Family& family() const { return family_; }
  std::string_view family_name() const;

  double value(GoodSet s) const;
  double value_of(unsigned good) const { return value(GoodSet::single(good)); }

  // Utility-maximizing set for max_S v(S) - sum_{j in S} prices[j]. Throws
  // SizeLimitExceeded for enumerating families past their cap.
  DemandResult demand(std::span<const double> prices) const;

 private:
  Valuation(Family family, unsigned m) : family_(std::move(family)), m_(m) {}

  Family family_;
  unsigned m_ = 0;
};

// Exhaustive check over all subsets (and subset pairs for subadditivity).
// Requires m <= 12; tolerance kEpsilon.
AxiomReport check_axioms(const Valuation& v);

}  // namespace pmean
