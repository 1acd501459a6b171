#include "pmean/valuation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "pmean/common.hpp"

namespace pmean {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_nonneg(std::span<const double> xs, const char* what) {
  for (double x : xs) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw InvalidArgument(std::string(what) + " must be finite and nonnegative");
    }
  }
}

void require_goods(std::size_t m) {
  if (m > GoodSet::kMaxGoods) {
    throw SizeLimitExceeded("at most " + std::to_string(GoodSet::kMaxGoods) + " goods supported");
  }
}

double additive_sum(std::span<const double> w, GoodSet s) {
  double total = 0.0;
  for (std::uint64_t b = s.bits(); b != 0; b &= b - 1) {
    total += w[static_cast<std::size_t>(std::countr_zero(b))];
  }
  return total;
}

DemandResult exhaustive_demand(const Valuation& v, std::span<const double> prices) {
  const unsigned m = v.num_goods();
  // Descending mask order so that the full set wins exact ties.
  const std::uint64_t full = GoodSet::full(m).bits();
  DemandResult best{GoodSet(full), v.value(GoodSet(full)) - additive_sum(prices, GoodSet(full))};
  for (std::uint64_t mask = full; mask-- > 0;) {
    const GoodSet s(mask);
    const double u = v.value(s) - additive_sum(prices, s);
    if (u > best.utility) best = {s, u};
  }
  return best;
}

}  // namespace

Valuation Valuation::additive(std::vector<double> weights) {
  require_goods(weights.size());
  require_nonneg(weights, "additive weights");
  const auto m = static_cast<unsigned>(weights.size());
  return Valuation(Additive{std::move(weights)}, m);
}

Valuation Valuation::budget_additive(std::vector<double> weights, double cap) {
  require_goods(weights.size());
  require_nonneg(weights, "budget-additive weights");
  require_nonneg(std::span<const double>(&cap, 1), "budget cap");
  const auto m = static_cast<unsigned>(weights.size());
  return Valuation(BudgetAdditive{std::move(weights), cap}, m);
}

Valuation Valuation::xos(std::vector<std::vector<double>> clauses) {
  if (clauses.empty()) throw InvalidArgument("xos valuation needs at least one clause");
  const std::size_t m = clauses.front().size();
  require_goods(m);
  for (const auto& c : clauses) {
    if (c.size() != m) throw InvalidArgument("xos clauses must all have the same length");
    require_nonneg(c, "xos clause weights");
  }
  return Valuation(Xos{std::move(clauses)}, static_cast<unsigned>(m));
}

Valuation Valuation::explicit_table(std::vector<double> table) {
  const std::size_t size = table.size();
  if (size == 0 || !std::has_single_bit(size)) {
    throw InvalidArgument("explicit table size must be a power of two");
  }
  const auto m = static_cast<unsigned>(std::countr_zero(size));
  if (m > kMaxExplicitGoods) {
    throw SizeLimitExceeded("explicit table supports at most " +
                            std::to_string(kMaxExplicitGoods) + " goods");
  }
  require_nonneg(table, "explicit table values");
  return Valuation(ExplicitTable{std::move(table)}, m);
}

std::string_view Valuation::family_name() const {
  return std::visit(Overloaded{
                        [](const Additive&) { return std::string_view("additive"); },
                        [](const BudgetAdditive&) { return std::string_view("budget_additive"); },
                        [](const Xos&) { return std::string_view("xos"); },
                        [](const ExplicitTable&) { return std::string_view("explicit"); },
                    },
                    family_);
}

double Valuation::value(GoodSet s) const {
  return std::visit(Overloaded{
                        [&](const Additive& f) { return additive_sum(f.weights, s); },
                        [&](const BudgetAdditive& f) {
                          return std::min(f.cap, additive_sum(f.weights, s));
                        },
                        [&](const Xos& f) {
                          double best = 0.0;
                          for (const auto& c : f.clauses) best = std::max(best, additive_sum(c, s));
                          return best;
                        },
                        [&](const ExplicitTable& f) {
                          return f.values[static_cast<std::size_t>(s.bits())];
                        },
                    },
                    family_);
}

DemandResult Valuation::demand(std::span<const double> prices) const {
  if (prices.size() != m_) {
    throw InvalidArgument("price vector length " + std::to_string(prices.size()) +
                          " does not match " + std::to_string(m_) + " goods");
  }
  return std::visit(
      Overloaded{
          [&](const Additive& f) {
            DemandResult r;
            for (unsigned j = 0; j < m_; ++j) {
              if (f.weights[j] >= prices[j]) {
                r.set.insert(j);
                r.utility += f.weights[j] - prices[j];
              }
            }
            return r;
          },
          [&](const Xos& f) {
            // max_S max_c (c(S) - p(S)) = max_c max_S (c(S) - p(S)); each inner
            // problem is additive.
            DemandResult best;
            bool have = false;
            for (const auto& c : f.clauses) {
              DemandResult r;
              for (unsigned j = 0; j < m_; ++j) {
                if (c[j] >= prices[j]) {
                  r.set.insert(j);
                  r.utility += c[j] - prices[j];
                }
              }
              if (!have || r.utility > best.utility) {
                best = r;
                have = true;
              }
            }
            return best;
          },
          [&](const BudgetAdditive&) {
            if (m_ > kMaxBudgetAdditiveDemandGoods) {
              throw SizeLimitExceeded("budget-additive demand enumerates subsets; m <= " +
                                      std::to_string(kMaxBudgetAdditiveDemandGoods));
            }
            return exhaustive_demand(*this, prices);
          },
          [&](const ExplicitTable&) { return exhaustive_demand(*this, prices); },
      },
      family_);
}

AxiomReport check_axioms(const Valuation& v) {
  const unsigned m = v.num_goods();
  if (m > Valuation::kMaxAxiomCheckGoods) {
    throw SizeLimitExceeded("axiom check enumerates subset pairs; m <= " +
                            std::to_string(Valuation::kMaxAxiomCheckGoods));
  }
  const std::size_t count = std::size_t{1} << m;
  std::vector<double> table(count);
  for (std::size_t s = 0; s < count; ++s) table[s] = v.value(GoodSet(s));

  AxiomReport report;
  report.normalized = std::abs(table[0]) <= kEpsilon;

  report.monotone = true;
  for (std::size_t s = 0; s < count && report.monotone; ++s) {
    for (unsigned j = 0; j < m; ++j) {
      const std::size_t t = s | (std::size_t{1} << j);
      if (table[s] > table[t] + kEpsilon) {
        report.monotone = false;
        break;
      }
    }
  }

  report.subadditive = true;
  for (std::size_t a = 0; a < count && report.subadditive; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      if (table[a | b] > table[a] + table[b] + kEpsilon) {
        report.subadditive = false;
        break;
      }
    }
  }
  return report;
}

}  // namespace pmean
