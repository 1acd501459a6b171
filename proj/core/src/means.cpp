#include "pmean/means.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "pmean/common.hpp"

namespace pmean {

Exponent Exponent::finite(double p) {
  if (std::isnan(p) || !(p <= 1.0) || std::isinf(p)) {
    throw InvalidArgument("exponent must be a finite real p <= 1 (use -inf for the minimum)");
  }
  return Exponent(false, p);
}

double Exponent::value() const {
  return neg_inf_ ? -std::numeric_limits<double>::infinity() : p_;
}

std::string Exponent::to_string() const {
  if (neg_inf_) return "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, p_);
  return std::string(buf, ptr);
}

bool operator<(const Exponent& a, const Exponent& b) { return a.value() < b.value(); }

Exponent parse_exponent(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text == "-inf") return Exponent::neg_infinity();
  double p = 0.0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, p);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(p)) {
    throw InvalidArgument("bad exponent '" + std::string(text) +
                          "': expected a decimal literal or -inf");
  }
  return Exponent::finite(p);
}

std::vector<Exponent> parse_exponent_list(std::string_view text) {
  std::vector<Exponent> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(parse_exponent(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double p_mean(std::span<const double> values, Exponent p) {
  if (values.empty()) throw EmptyInput("p_mean of an empty list");
  bool has_zero = false;
  for (double x : values) {
    if (!(x >= 0.0) || std::isinf(x)) {
      throw InvalidArgument("p_mean requires finite nonnegative values");
    }
    has_zero = has_zero || x == 0.0;
  }
  const auto n = static_cast<double>(values.size());

  if (p.is_neg_infinity()) return *std::min_element(values.begin(), values.end());

  const double q = p.value();
  if (q <= 0.0 && has_zero) return 0.0;

  if (q == 1.0) {
    double sum = 0.0;
    for (double x : values) sum += x;
    return sum / n;
  }

  if (q == 0.0) {
    double log_sum = 0.0;
    for (double x : values) log_sum += std::log(x);
    return std::exp(log_sum / n);
  }

  if (std::abs(q) < kLogBand) {
    // log M_p = log1p(mean(expm1(p log x))) / p, which stays accurate as p -> 0.
    double s = 0.0;
    for (double x : values) s += std::expm1(q * std::log(x));
    s /= n;
    if (s <= -1.0) return 0.0;
    return std::exp(std::log1p(s) / q);
  }

  if (q > 0.0) {
    const double hi = *std::max_element(values.begin(), values.end());
    if (hi == 0.0) return 0.0;
    double sum = 0.0;
    for (double x : values) sum += std::pow(x / hi, q);
    return hi * std::pow(sum / n, 1.0 / q);
  }

  // q < 0, all entries positive; ratios x/lo >= 1 keep every term in (0, 1].
  const double lo = *std::min_element(values.begin(), values.end());
  double sum = 0.0;
  for (double x : values) sum += std::pow(x / lo, q);
  return lo * std::pow(sum / n, 1.0 / q);
}

double p_mean_welfare(const Instance& inst, const Allocation& alloc, Exponent p) {
  if (!is_valid_for(alloc, inst)) {
    throw InvalidArgument("allocation is not a partition of the instance's goods into " +
                          std::to_string(inst.num_agents()) + " bundles");
  }
  const std::vector<double> values = bundle_values(inst.valuation(), alloc);
  return p_mean(values, p);
}

}  // namespace pmean
