// Acceptance suite: one PASS/FAIL line per criterion. Exit code is the number
// of failing criteria that are not listed with --known-failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

#include "brute.hpp"
#include "pmean/allocator.hpp"
#include "pmean/analysis.hpp"
#include "pmean/generate.hpp"
#include "pmean/hardness.hpp"
#include "pmean/means.hpp"
#include "pmean/oracle.hpp"
#include "pmean/swmax.hpp"

using namespace pmean;
namespace an = pmean::analysis;
namespace hd = pmean::hardness;

namespace {

// Pinned tolerances.
constexpr double kRatioTol = 1e-9;
constexpr double kBundleTol = 1e-9;
constexpr double kSignTol = 1e-12;
constexpr double kRootTol = 1e-12;
constexpr double kMonotoneTol = 1e-9;
constexpr double kScaleRelTol = 1e-9;
constexpr double kNashLimitRelTol = 1e-4;
constexpr double kMinLimitRelTol = 0.05;
constexpr double kGapTol = 1e-9;
constexpr double kDemandTol = 1e-9;
constexpr double kSwTol = 1e-9;
constexpr double kRatioSuiteSeconds = 300.0;
constexpr double kIneqSuiteSeconds = 1.0;

const std::vector<Exponent> kGrid{Exponent::neg_infinity(), Exponent::finite(-4), Exponent::finite(-1),
                                  Exponent::finite(-0.5),    Exponent::finite(0),  Exponent::finite(0.25),
                                  Exponent::finite(0.4),     Exponent::finite(0.7), Exponent::finite(1)};
const Family kFamilies[] = {Family::Additive, Family::BudgetAdditive, Family::Xos, Family::Explicit};

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  std::string id;
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}
std::string num(double x) { return fmt("%.6g", x); }

// Instances shared by AC1 and AC7.
std::vector<Instance> ratio_instances() {
  std::vector<Instance> out;
  for (Family fam : kFamilies)
    for (unsigned n : {2u, 3u})
      for (unsigned m : {4u, 6u, 8u})
        for (std::uint64_t seed = 0; seed < 50; ++seed) out.push_back(generate_instance(fam, n, m, seed));
  return out;
}

Outcome ac1_ratio(const std::vector<Instance>& instances, std::vector<double>& opt1_out) {
  const auto start = Clock::now();
  std::size_t cells = 0, vacuous = 0, failures = 0;
  double worst = INFINITY;
  std::string worst_at;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const Instance& inst = instances[i];
    const AlgResult r = alg(inst, SwBackend::ExactBruteForce);
    const std::vector<double> values = bundle_values(inst.valuation(), r.alloc);
    const std::vector<OptResult> opts = p_opt_brute_grid(inst, kGrid);
    opt1_out.push_back(opts.back().welfare);
    for (const OptResult& o : opts) {
      ++cells;
      if (o.welfare <= 0.0) {
        ++vacuous;
        continue;
      }
      const double w = p_mean(values, o.p);
      if (w < o.welfare / 40.0 - kRatioTol) ++failures;
      const double ratio = w / o.welfare;
      if (ratio < worst) {
        worst = ratio;
        worst_at = "instance " + std::to_string(i) + " p=" + o.p.to_string();
      }
    }
  }
  const double secs = seconds_since(start);
  const bool pass = failures == 0 && secs < kRatioSuiteSeconds;
  return {"AC1", pass,
          "ratio suite: " + std::to_string(instances.size()) + " instances, " + std::to_string(cells) +
              " cells, " + std::to_string(vacuous) + " vacuous, " + std::to_string(failures) +
              " below OPT_p/40; worst ratio " + num(worst) + " at " + worst_at + "; " + fmt("%.2f", secs) +
              " s (limit 300)"};
}

// Near-uniform goods so that no good exceeds F/3.53.
Valuation low_value_valuation(Family fam, unsigned m, Rng& rng) {
  auto weights = [&] { return testing::random_weights(rng, m, 7.0, 13.0); };
  switch (fam) {
    case Family::Additive:
      return Valuation::additive(weights());
    case Family::BudgetAdditive: {
      auto w = weights();
      double total = 0.0;
      for (double x : w) total += x;
      return Valuation::budget_additive(w, (0.8 + 0.2 * rng.uniform01()) * total);
    }
    case Family::Xos:
      return Valuation::xos({weights(), weights(), weights()});
    case Family::Explicit: {
      const Valuation x = Valuation::xos({weights(), weights()});
      std::vector<double> table(std::size_t{1} << m);
      for (std::uint64_t s = 0; s < table.size(); ++s) table[s] = x.value(GoodSet(s));
      return Valuation::explicit_table(table);
    }
  }
  return Valuation::additive({});
}

Outcome ac2_alglow() {
  Rng rng(2024);
  std::size_t instances = 0, rejected = 0, bundles = 0, failures = 0, raised = 0;
  double worst_f = INFINITY, worst_opt = INFINITY;
  const unsigned two_agent_m[] = {8, 9, 10, 11, 12};
  for (std::size_t trial = 0; instances < 240 && trial < 2000; ++trial) {
    const Family fam = kFamilies[trial % 4];
    const bool three = trial % 10 == 9;
    const unsigned n = three ? 3 : 2;
    const unsigned m = three ? 11 + static_cast<unsigned>(rng.below(2)) : two_agent_m[rng.below(5)];
    const Instance inst(n, low_value_valuation(fam, m, rng));
    const SwEstimate est = sw_estimate(inst, SwBackend::ExactBruteForce);
    bool low = true;
    for (unsigned g = 0; g < m; ++g) low = low && inst.valuation().value_of(g) <= est.f_value / 3.53;
    if (!low) {
      ++rejected;
      continue;
    }
    ++instances;
    const double opt1 = p_opt_brute(inst, Exponent::finite(1)).welfare;
    try {
      const AlgLowResult r = alg_low(inst, est);
      if (!is_valid_for(r.bundles, inst)) ++failures;
      for (double v : bundle_values(inst.valuation(), r.bundles)) {
        ++bundles;
        if (v < r.f_value / 20.0 - kBundleTol || v < opt1 / 40.0 - kBundleTol) ++failures;
        worst_f = std::min(worst_f, v / r.f_value);
        worst_opt = std::min(worst_opt, v / opt1);
      }
    } catch (const PreconditionViolated&) {
      ++raised;
    }
  }
  const bool pass = instances >= 200 && failures == 0 && raised == 0;
  return {"AC2", pass,
          "low-value bundles: " + std::to_string(instances) + " instances (" + std::to_string(rejected) +
              " rejected), " + std::to_string(bundles) + " bundles, " + std::to_string(failures) +
              " violations, " + std::to_string(raised) + " PreconditionViolated; min v/F " + num(worst_f) +
              " (floor 0.05), min v/OPT_1 " + num(worst_opt) + " (floor 0.025)"};
}

Outcome ac3_inequalities() {
  const auto start = Clock::now();
  std::vector<std::string> bad;
  if (an::f(0.0) != 0.0) bad.push_back("f(0) != 0");
  if (!(an::f(0.4) > 0.0)) bad.push_back("f(0.4) <= 0");
  if (!(an::f(0.41) < 0.0)) bad.push_back("f(0.41) >= 0");

  // Direct grid scans with integer-indexed points.
  double neg_max = -INFINITY;
  for (int i = -5000; i < 0; ++i) neg_max = std::max(neg_max, an::f(i * 0.01));
  if (neg_max > kSignTol) bad.push_back("f > 1e-12 on [-50, 0)");
  double pos_min = INFINITY;
  for (int i = 1; i <= 400; ++i) pos_min = std::min(pos_min, an::f(i * 0.001));
  if (pos_min < -kSignTol) bad.push_back("f < -1e-12 on (0, 0.4]");
  const an::SignRangeReport signs = an::check_sign_ranges(-50.0, 0.01, 0.001);
  if (!signs.ok()) bad.push_back("check_sign_ranges");

  double root = NAN;
  try {
    root = an::locate_root();
  } catch (const BracketInvalid&) {
    bad.push_back("bracket");
  }
  if (!(root > 0.4 && root < 0.41 && std::abs(an::f(root)) < kRootTol)) bad.push_back("root");

  double combined = INFINITY, factor = INFINITY;
  for (int i = 400; i <= 1000; ++i) {
    const double p = i * 0.001;
    combined = std::min(combined, std::pow(40.0, p) - 2.0 * std::pow(7.06, p));
    factor = std::min(factor, std::pow(40.0, p) - 2.0);
  }
  if (combined < 0.0 || factor <= 0.0) bad.push_back("[0.4, 1] constants");
  const an::LargePConstantsReport consts = an::check_large_p_constants(0.4, 1.0, 0.001);
  if (!consts.ok()) bad.push_back("check_large_p_constants");

  const double secs = seconds_since(start);
  if (secs >= kIneqSuiteSeconds) bad.push_back("runtime");
  std::string detail = "inequalities: f(0.4)=" + fmt("%.6e", an::f(0.4)) + " f(0.41)=" + fmt("%.6e", an::f(0.41)) +
                       " max f on [-50,0)=" + fmt("%.3e", neg_max) + " min f on (0,0.4]=" +
                       fmt("%.3e", pos_min) + " root=" + fmt("%.12f", root) + " |f(root)|=" +
                       fmt("%.1e", std::abs(an::f(root))) + " min(40^p-2*7.06^p)=" + fmt("%.3e", combined) +
                       "; " + fmt("%.3f", secs) + " s";
  for (const auto& b : bad) detail += "; FAILED " + b;
  return {"AC3", bad.empty(), detail};
}

Outcome ac4_means() {
  Rng rng(404);
  std::size_t mono = 0, scale = 0, perm = 0, zero = 0, nash = 0, minlim = 0;
  std::size_t minlim_short = 0;
  double worst_min_excess = 0.0;
  const std::vector<double> ps{-30, -4, -1, -0.5, -1e-5, 0, 1e-5, 0.25, 0.4, 0.7, 1};
  for (int t = 0; t < 1000; ++t) {
    const unsigned len = 1 + static_cast<unsigned>(rng.below(8));
    std::vector<double> x(len);
    for (double& v : x) v = std::pow(10.0, -3.0 + 6.0 * rng.uniform01());

    double prev = p_mean(x, Exponent::neg_infinity());
    for (double p : ps) {
      const double cur = p_mean(x, Exponent::finite(p));
      if (prev > cur + kMonotoneTol) ++mono;
      prev = cur;
    }
    const double c = 1e-2 + 1e2 * rng.uniform01();
    std::vector<double> scaled = x;
    for (double& v : scaled) v *= c;
    std::vector<double> shuffled = x;
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    for (double p : ps) {
      const Exponent e = Exponent::finite(p);
      const double base = p_mean(x, e);
      if (std::abs(p_mean(scaled, e) - c * base) > kScaleRelTol * c * base) ++scale;
      if (std::abs(p_mean(shuffled, e) - base) > kScaleRelTol * base) ++perm;
    }
    if (std::abs(p_mean(scaled, Exponent::neg_infinity()) - c * p_mean(x, Exponent::neg_infinity())) >
        kScaleRelTol * c * p_mean(x, Exponent::neg_infinity()))
      ++scale;

    std::vector<double> with_zero = x;
    with_zero[rng.below(len)] = 0.0;
    for (double p : {-4.0, -1.0, -1e-5, 0.0}) {
      const double z = p_mean(with_zero, Exponent::finite(p));
      if (z != 0.0) ++zero;
    }
    if (p_mean(with_zero, Exponent::neg_infinity()) != 0.0) ++zero;
    for (double p : {0.25, 1.0}) {
      const double z = p_mean(with_zero, Exponent::finite(p));
      if (std::isnan(z) || std::abs(z - testing::naive_mean(with_zero, p)) > 1e-9 * (1 + z)) ++zero;
    }

    const double m0 = p_mean(x, Exponent::finite(0));
    if (std::abs(p_mean(x, Exponent::finite(1e-6)) - m0) > kNashLimitRelTol * m0) ++nash;
    const double mn = *std::min_element(x.begin(), x.end());
    const double excess = (p_mean(x, Exponent::finite(-30)) - mn) / mn;
    worst_min_excess = std::max(worst_min_excess, excess);
    if (excess > kMinLimitRelTol) {
      ++minlim;
      if (len <= 4) ++minlim_short;
    }
  }

  std::size_t prop_fail = 0, prop_instances = 0;
  for (Family fam : kFamilies) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Instance inst = generate_instance(fam, 2 + seed % 2, 5, 500 + seed);
      ++prop_instances;
      const double opt1 = testing::brute_opt(inst, [](const std::vector<double>& v) { return testing::naive_mean(v, 1.0); });
      bool ok = check_monotonicity(inst, kGrid);
      for (const Exponent& p : kGrid) {
        const double pv = p.is_neg_infinity() ? -INFINITY : p.value();
        const double optp = testing::brute_opt(inst, [pv](const std::vector<double>& v) { return testing::naive_mean(v, pv); });
        ok = ok && opt1 >= optp - kMonotoneTol;
      }
      if (!ok) ++prop_fail;
    }
  }

  const bool pass = mono + scale + perm + zero + nash + minlim + prop_fail == 0;
  std::string detail = "means: 1000 vectors; monotone " + std::to_string(mono) + ", scale " + std::to_string(scale) +
                       ", permutation " + std::to_string(perm) + ", zero handling " + std::to_string(zero) +
                       ", p->0 limit " + std::to_string(nash) + ", p=-30 within 5% of min " +
                       std::to_string(minlim) + " violations (" + std::to_string(minlim_short) +
                       " with length <= 4; worst excess " + num(worst_min_excess) +
                       ", analytic worst case n^(1/30)-1 = " + num(std::pow(8.0, 1.0 / 30) - 1) +
                       " at n=8); OPT_1 >= OPT_p on " + std::to_string(prop_instances) + " instances, " +
                       std::to_string(prop_fail) + " failures";
  return {"AC4", pass, detail};
}

Instance dominant_instance(unsigned n, unsigned m, double big, double tiny) {
  std::vector<double> w(m, tiny);
  w[0] = big;
  return Instance(n, Valuation::additive(w));
}

Outcome ac5_structural() {
  const std::vector<Exponent> ps{Exponent::neg_infinity(), Exponent::finite(-1), Exponent::finite(0),
                                 Exponent::finite(0.25)};
  std::size_t checks = 0, fails = 0, vacuous = 0, active = 0;
  for (const Exponent& p : ps) {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Family fam = seed % 2 ? Family::Xos : Family::Additive;
      const Instance inst = generate_instance(fam, 2 + seed % 2, 4 + seed % 5, 5000 + seed);
      const double opt1 = p_opt_brute(inst, Exponent::finite(1)).welfare;
      // F ranges over [OPT_1/2, OPT_1].
      for (double f : {opt1, opt1 / 2}) {
        const StructuralReport r = check_structural_lemma(inst, p, f);
        ++checks;
        if (!r.holds) ++fails;
        if (r.vacuous()) ++vacuous; else ++active;
      }
    }
  }
  struct Adv {
    unsigned n, m;
    double big, tiny;
  };
  const Adv adversarial[] = {{2, 4, 100, 0.01}, {3, 5, 100, 0.05}, {6, 7, 100, 0.1}, {6, 8, 250, 0.5}, {7, 7, 100, 0.01}};
  std::size_t adv_checks = 0, adv_fails = 0, adv_active = 0;
  for (const Adv& a : adversarial) {
    const Instance inst = dominant_instance(a.n, a.m, a.big, a.tiny);
    const double opt1 = p_opt_brute(inst, Exponent::finite(1)).welfare;
    for (const Exponent& p : ps) {
      for (double f : {opt1, opt1 / 2}) {
        const StructuralReport r = check_structural_lemma(inst, p, f);
        ++adv_checks;
        if (!r.holds) ++adv_fails;
        if (!r.vacuous()) ++adv_active;
      }
    }
  }
  const bool pass = fails == 0 && adv_fails == 0;
  return {"AC5", pass,
          "heavy-bundle witness: " + std::to_string(checks) + " random checks (" + std::to_string(vacuous) +
              " vacuous, " + std::to_string(active) + " with premise), " + std::to_string(fails) +
              " failures; " + std::to_string(adv_checks) + " dominant-good checks (" + std::to_string(adv_active) +
              " with premise), " + std::to_string(adv_fails) + " failures"};
}

Outcome ac6_gap() {
  std::size_t yes_checks = 0, yes_fail = 0, no_checks = 0, no_fail = 0, no_instances = 0;
  double worst_no_margin = INFINITY;
  for (unsigned q : {1u, 2u, 3u}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const hd::Gap3dmInstance g = hd::random_yes_instance(q, q, 60 + seed);
      const Instance inst = hd::reduce(g);
      for (const OptResult& o : p_opt_brute_grid(inst, kGrid)) {
        ++yes_checks;
        if (std::abs(o.welfare - 3.0) > kGapTol) ++yes_fail;
      }
      if (q < 2) continue;
      const hd::Gap3dmInstance ng = hd::random_no_instance(q, 2 * q, 70 + seed);
      ++no_instances;
      const std::size_t mm = testing::branch_max_matching(ng.edges);
      const double alpha = static_cast<double>(mm) / q;
      const hd::NoSideReport r = hd::verify_no_side(ng, alpha, kGrid);
      if (!r.premise || !r.holds || r.max_matching != mm) ++no_fail;
      const Instance ninst = hd::reduce(ng);
      for (const Exponent& p : kGrid) {
        const double pv = p.is_neg_infinity() ? -INFINITY : p.value();
        const double opt = testing::brute_opt(ninst, [pv](const std::vector<double>& v) { return testing::naive_mean(v, pv); });
        ++no_checks;
        if (opt > 2.0 + alpha + kGapTol) ++no_fail;
        worst_no_margin = std::min(worst_no_margin, 2.0 + alpha - opt);
      }
    }
  }
  Rng rng(66);
  const Instance demand_inst = hd::reduce(hd::random_yes_instance(3, 4, 6));
  std::size_t demand_fail = 0;
  for (int i = 0; i < 100; ++i) {
    const std::vector<double> prices = testing::random_weights(rng, 9, 0.0, 1.5);
    const double got = demand_inst.valuation().demand(prices).utility;
    if (std::abs(got - testing::brute_demand_utility(demand_inst.valuation(), prices)) > kDemandTol) ++demand_fail;
  }
  const bool pass = yes_fail == 0 && no_fail == 0 && demand_fail == 0;
  return {"AC6", pass,
          "gap reduction: YES " + std::to_string(yes_checks) + " cells, " + std::to_string(yes_fail) +
              " off 3; NO " + std::to_string(no_instances) + " instances, " + std::to_string(no_checks) +
              " cells, " + std::to_string(no_fail) + " failures, min slack to 2+alpha " + num(worst_no_margin) +
              "; xos demand 100 prices on m=9, " + std::to_string(demand_fail) + " mismatches"};
}

Outcome ac7_oracles(const std::vector<Instance>& instances, const std::vector<double>& opt1) {
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const double sw = sw_estimate(instances[i], SwBackend::ExactBruteForce).f_value;
    worst = std::max(worst, std::abs(sw - opt1[i]));
    if (std::abs(sw - opt1[i]) > kSwTol) ++mismatches;
  }
  std::string counts;
  bool counts_ok = true;
  for (auto [m, n] : {std::pair{3u, 2u}, std::pair{4u, 2u}, std::pair{4u, 3u}}) {
    const auto all = enumerate_labeled_partitions(m, n);
    std::set<std::vector<std::uint64_t>> distinct;
    for (const Allocation& a : all) {
      std::vector<std::uint64_t> key;
      for (GoodSet b : a.bundles) key.push_back(b.bits());
      distinct.insert(key);
      counts_ok = counts_ok && is_partition_of(a, GoodSet::full(m));
    }
    const std::size_t expect = static_cast<std::size_t>(std::pow(n, m));
    counts_ok = counts_ok && all.size() == expect && distinct.size() == expect;
    counts += " (" + std::to_string(m) + "," + std::to_string(n) + ")=" + std::to_string(distinct.size());
  }
  return {"AC7", mismatches == 0 && counts_ok,
          "oracle cross-checks: OPT_1 vs exact SW on " + std::to_string(instances.size()) + " instances, " +
              std::to_string(mismatches) + " mismatches (max diff " + num(worst) + "); distinct partitions" + counts};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<std::string> known;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--known-failure" && i + 1 < argc) known.insert(argv[++i]);
  }

  std::vector<Outcome> results;
  const std::vector<Instance> instances = ratio_instances();
  std::vector<double> opt1;
  results.push_back(ac1_ratio(instances, opt1));
  results.push_back(ac2_alglow());
  results.push_back(ac3_inequalities());
  results.push_back(ac4_means());
  results.push_back(ac5_structural());
  results.push_back(ac6_gap());
  results.push_back(ac7_oracles(instances, opt1));

  int unexpected = 0;
  for (const Outcome& o : results) {
    const bool excused = !o.pass && known.count(o.id) > 0;
    std::printf("%s %s%s %s\n", o.id.c_str(), o.pass ? "PASS" : "FAIL", excused ? " (known)" : "",
                o.detail.c_str());
    if (!o.pass && !excused) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected;
}
