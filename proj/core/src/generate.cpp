#include "pmean/generate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pmean/common.hpp"
#include "pmean/rng.hpp"

namespace pmean {
namespace {

double round6(double x) { return std::round(x * 1e6) / 1e6; }

std::vector<double> weights(unsigned m, Rng& rng) {
  std::vector<double> w(m);
  for (double& x : w) x = round6(rng.uniform01() * 100.0);
  return w;
}

std::vector<std::vector<double>> clauses(unsigned k, unsigned m, Rng& rng) {
  if (k == 0) throw InvalidArgument("need at least one clause");
  std::vector<std::vector<double>> out;
  for (unsigned i = 0; i < k; ++i) out.push_back(weights(m, rng));
  return out;
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Additive: return "additive";
    case Family::BudgetAdditive: return "budget_additive";
    case Family::Xos: return "xos";
    case Family::Explicit: return "explicit";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  if (text == "additive") return Family::Additive;
  if (text == "budget_additive") return Family::BudgetAdditive;
  if (text == "xos") return Family::Xos;
  if (text == "explicit") return Family::Explicit;
  throw InvalidArgument("unknown family '" + std::string(text) +
                        "' (expected additive|budget_additive|xos|explicit)");
}

Instance generate_instance(Family family, unsigned n, unsigned m, std::uint64_t seed,
                           const GenParams& params) {
  if (m > GoodSet::kMaxGoods) throw SizeLimitExceeded("at most 64 goods supported");
  Rng rng(seed);
  switch (family) {
    case Family::Additive: return Instance(n, Valuation::additive(weights(m, rng)));
    case Family::BudgetAdditive: {
      std::vector<double> w = weights(m, rng);
      double total = 0.0;
      for (double x : w) total += x;
      const double cap = round6(params.cap_fraction * total);
      return Instance(n, Valuation::budget_additive(std::move(w), cap));
    }
    case Family::Xos: return Instance(n, Valuation::xos(clauses(params.clauses, m, rng)));
    case Family::Explicit: {
      if (m > Valuation::kMaxExplicitGoods) {
        throw SizeLimitExceeded("explicit family supports at most " +
                                std::to_string(Valuation::kMaxExplicitGoods) + " goods");
      }
      const Valuation xos = Valuation::xos(clauses(params.clauses, m, rng));
      std::vector<double> table(std::size_t{1} << m);
      for (std::size_t s = 0; s < table.size(); ++s) table[s] = xos.value(GoodSet(s));
      return Instance(n, Valuation::explicit_table(std::move(table)));
    }
  }
  throw InvalidArgument("unknown family");
}

}  // namespace pmean
