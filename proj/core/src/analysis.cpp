#include "pmean/analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "pmean/allocator.hpp"
#include "pmean/common.hpp"

namespace pmean::analysis {

double f(double p) {
  using K = IneqConstants;
  return std::pow(K::a, p) + std::pow(K::b, p) - 1.0 - std::pow(K::c, p);
}

SignRangeReport check_sign_ranges(double neg_lo, double neg_step, double pos_step) {
  if (!(neg_step > 0.0) || !(pos_step > 0.0) || !(neg_lo < 0.0)) {
    throw InvalidArgument("sign-range grids need positive steps and a negative lower end");
  }
  SignRangeReport r;
  r.zero_at_origin = f(0.0) == 0.0;

  r.negative = {neg_lo, 0.0, neg_step, 0, -INFINITY, neg_lo, true};
  const auto neg_count = static_cast<long long>(std::llround(-neg_lo / neg_step));
  for (long long k = 0; k < neg_count; ++k) {
    const double p = neg_lo + static_cast<double>(k) * neg_step;
    if (p >= 0.0) break;
    const double y = f(p);
    ++r.negative.points;
    if (y > r.negative.extreme) {
      r.negative.extreme = y;
      r.negative.extreme_at = p;
    }
  }
  r.negative.ok = r.negative.extreme <= kSignTolerance;

  r.positive = {0.0, 0.4, pos_step, 0, INFINITY, 0.4, true};
  const auto pos_count = static_cast<long long>(std::llround(0.4 / pos_step));
  for (long long k = 1; k <= pos_count; ++k) {
    const double p = static_cast<double>(k) * pos_step;
    const double y = f(p);
    ++r.positive.points;
    if (y < r.positive.extreme) {
      r.positive.extreme = y;
      r.positive.extreme_at = p;
    }
  }
  r.positive.ok = r.positive.extreme >= -kSignTolerance;
  return r;
}

double locate_root() {
  double lo = 0.4;
  double hi = 0.41;
  if (!(f(lo) > 0.0) || !(f(hi) < 0.0)) {
    throw BracketInvalid("f must be positive at 0.4 and negative at 0.41");
  }
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) return mid;
    const double y = f(mid);
    if (std::abs(y) < 1e-14) return mid;
    if (y > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

LargePConstantsReport check_large_p_constants(double lo, double hi, double step) {
  if (!(lo >= 0.4) || !(hi <= 1.0) || !(lo <= hi) || !(step > 0.0)) {
    throw InvalidArgument("large-p constant grid must lie within [0.4, 1] with a positive step");
  }
  static constexpr std::array<double, 9> kSamples = {0.0, 1e-3, 0.25, 0.5, 1.0,
                                                     2.0, 7.5,  100.0, 1e4};
  LargePConstantsReport r;
  r.worst_combined_margin = INFINITY;
  r.worst_factor_margin = INFINITY;
  const auto count = static_cast<long long>(std::llround((hi - lo) / step));
  for (long long k = 0; k <= count; ++k) {
    const double p = std::min(hi, lo + static_cast<double>(k) * step);
    ++r.points;
    const double forty = std::pow(AlgConstants::approx_factor, p);
    r.worst_combined_margin =
        std::min(r.worst_combined_margin, forty - 2.0 * std::pow(AlgConstants::combined_divisor, p));
    r.worst_factor_margin = std::min(r.worst_factor_margin, forty - 2.0);
    for (double x : kSamples) {
      for (double y : kSamples) {
        ++r.power_pairs_checked;
        const double rhs = std::pow(x, p) + std::pow(y, p);
        if (std::pow(x + y, p) > rhs * (1.0 + kSignTolerance)) ++r.power_pair_failures;
      }
    }
  }
  return r;
}

ExtremaReport check_extrema_are_maxima(double lo, double hi, double step, double tolerance) {
  if (!(step > 0.0) || !(lo < hi)) throw InvalidArgument("extrema scan needs lo < hi and step > 0");
  ExtremaReport r;
  int last_sign = 0;
  const auto count = static_cast<long long>(std::llround((hi - lo) / step));
  for (long long k = 0; k <= count; ++k) {
    const double p = lo + static_cast<double>(k) * step;
    const double d = (f(p + step) - f(p - step)) / (2.0 * step);
    const int sign = d > tolerance ? 1 : (d < -tolerance ? -1 : 0);
    if (sign == 0) continue;
    if (last_sign == 1 && sign == -1) r.maxima.push_back(p);
    if (last_sign == -1 && sign == 1) r.minima.push_back(p);
    last_sign = sign;
  }
  return r;
}

}  // namespace pmean::analysis
