#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmean/instance.hpp"

namespace pmean {

// Generalized-mean exponent p in (-inf, 1]: a finite real or -infinity.
class Exponent {
 public:
  // Throws InvalidArgument for p > 1 or NaN.
  static Exponent finite(double p);
  static Exponent neg_infinity() { return Exponent(true, 0.0); }

  bool is_neg_infinity() const { return neg_inf_; }
  // Finite value; -infinity for NegInfinity.
  double value() const;

  // "-inf" or the shortest round-trip decimal.
  std::string to_string() const;

  bool operator==(const Exponent&) const = default;

 private:
  Exponent(bool neg_inf, double p) : neg_inf_(neg_inf), p_(p) {}

  bool neg_inf_;
  double p_;
};

// Strict order with -inf below every finite exponent.
bool operator<(const Exponent& a, const Exponent& b);

// Accepts a decimal literal or "-inf".
Exponent parse_exponent(std::string_view text);
// Comma-separated list, e.g. "-inf,-1,0,0.4,1".
std::vector<Exponent> parse_exponent_list(std::string_view text);

// Width of the band |p| < kLogBand evaluated through log1p/expm1.
inline constexpr double kLogBand = 1e-4;

// M_p(x) = ((1/n) sum x_i^p)^(1/p); geometric mean at p = 0; min at -inf.
// Returns 0 for p <= 0 when any entry is 0. Throws EmptyInput on an empty
// list and InvalidArgument on negative entries.
double p_mean(std::span<const double> values, Exponent p);

// M_p of the bundle values of a valid allocation.
double p_mean_welfare(const Instance& inst, const Allocation& alloc, Exponent p);

}  // namespace pmean
