#pragma once

#include <cstddef>
#include <vector>

namespace pmean::analysis {

// Constants of f(p) = a^p + b^p - 1 - c^p.
struct IneqConstants {
  static constexpr double a = 0.5 - 1.0 / 40.0;
  static constexpr double b = 0.5;
  static constexpr double c = 2.0 / 11.33;
};

static_assert(0.0 < IneqConstants::c && IneqConstants::c < IneqConstants::a &&
              IneqConstants::a < IneqConstants::b && IneqConstants::b < 1.0);

double f(double p);

// Result of scanning one sign condition over a uniform grid.
struct GridCheck {
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;
  std::size_t points = 0;
  // Largest f on the negative grid / smallest f on the positive grid.
  double extreme = 0.0;
  double extreme_at = 0.0;
  bool ok = true;
};

struct SignRangeReport {
  // f <= 1e-12 on [neg_lo, 0).
  GridCheck negative;
  // f >= -1e-12 on (0, 0.4].
  GridCheck positive;
  bool zero_at_origin = false;

  bool ok() const { return negative.ok && positive.ok && zero_at_origin; }
};

inline constexpr double kSignTolerance = 1e-12;

SignRangeReport check_sign_ranges(double neg_lo = -50.0, double neg_step = 0.01,
                                  double pos_step = 0.001);

// Bisection on [0.4, 0.41] until |f| < 1e-14 or the bracket collapses.
// Throws BracketInvalid if f(0.4) <= 0 or f(0.41) >= 0.
double locate_root();

struct LargePConstantsReport {
  std::size_t points = 0;
  // min over the grid of 40^p - 2 * 7.06^p; must be >= 0.
  double worst_combined_margin = 0.0;
  // min over the grid of 40^p - 2; must be > 0.
  double worst_factor_margin = 0.0;
  std::size_t power_pairs_checked = 0;
  // Failures of (x+y)^p <= x^p + y^p on the sampled pairs.
  std::size_t power_pair_failures = 0;

  bool ok() const {
    return worst_combined_margin >= 0.0 && worst_factor_margin > 0.0 && power_pair_failures == 0;
  }
};

// Grid over [lo, hi], which must lie within [0.4, 1].
LargePConstantsReport check_large_p_constants(double lo = 0.4, double hi = 1.0, double step = 0.001);

struct ExtremaReport {
  // Grid points where the central-difference derivative changes sign.
  std::vector<double> maxima;
  std::vector<double> minima;

  bool ok() const { return minima.empty(); }
};

// Scans sign changes of the central-difference derivative of f; derivative
// values within `tolerance` of zero carry no sign.
ExtremaReport check_extrema_are_maxima(double lo = -5.0, double hi = 1.0, double step = 1e-3,
                                       double tolerance = 1e-8);

}  // namespace pmean::analysis
