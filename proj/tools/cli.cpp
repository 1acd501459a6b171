#include "cli.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "pmean/allocator.hpp"
#include "pmean/analysis.hpp"
#include "pmean/generate.hpp"
#include "pmean/hardness.hpp"
#include "pmean/instance_io.hpp"
#include "pmean/means.hpp"
#include "pmean/oracle.hpp"
#include "pmean/swmax.hpp"

namespace pmean::cli {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr const char* kDefaultGrid = "-inf,-4,-1,-0.5,0,0.25,0.4,0.7,1";

struct RunConfig {
  std::string instance_path;
  std::string p_list;
  std::string sw_backend = "exact";
  std::string output = "json";
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;

  // gen
  std::string family;
  unsigned n = 2;
  unsigned m = 6;
  GenParams gen;
  std::string out_path;

  // check-ineq
  std::optional<double> grid_step;

  // hardness-demo
  unsigned q = 2;
  std::string mode = "yes";
  std::optional<unsigned> edges;
};

Budget resolve_budget(const RunConfig& cfg) {
  Budget b;
  if (cfg.budget) {
    b.max_states = *cfg.budget;
  } else if (const char* env = std::getenv("PMEAN_BUDGET"); env != nullptr && *env != '\0') {
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw InvalidArgument("PMEAN_BUDGET must be a nonnegative integer, got '" +
                            std::string(s) + "'");
    }
    b.max_states = v;
  }
  return b;
}

std::string num(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

json goods_json(GoodSet s) { return s.members(); }

json allocation_json(const Allocation& a) {
  json out = json::array();
  for (GoodSet b : a.bundles) out.push_back(goods_json(b));
  return out;
}

json instance_summary(const Instance& inst) {
  return {{"n", inst.num_agents()},
          {"m", inst.num_goods()},
          {"family", std::string(inst.valuation().family_name())}};
}

json trace_json(const AlgTrace& t) {
  json bundles = json::array();
  for (GoodSet b : t.phase2_bundles) bundles.push_back(goods_json(b));
  return {{"k", t.k()},
          {"singleton_goods", t.singleton_goods},
          {"f_values", t.f_values},
          {"phase2_bundles", std::move(bundles)}};
}

void print_csv(std::ostream& out, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

void require_output(const RunConfig& cfg) {
  if (cfg.output != "json" && cfg.output != "csv") {
    throw InvalidArgument("--output must be json or csv");
  }
}

int cmd_gen(const RunConfig& cfg, std::ostream& out) {
  const Instance inst = generate_instance(parse_family(cfg.family), cfg.n, cfg.m, cfg.seed, cfg.gen);
  const std::string text = instance_to_json(inst) + "\n";
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write " + cfg.out_path);
    file << text;
  }
  return kExitOk;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out) {
  require_output(cfg);
  const Instance inst = load_instance(cfg.instance_path);
  const std::vector<Exponent> grid = parse_exponent_list(cfg.p_list);
  const SwBackend backend = parse_sw_backend(cfg.sw_backend);
  const Budget budget = resolve_budget(cfg);

  const auto start = Clock::now();
  const AlgResult result = alg(inst, backend, budget);
  const double alg_ms = elapsed_ms(start);
  const std::vector<double> values = bundle_values(inst.valuation(), result.alloc);

  json table = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const Exponent& p : grid) {
    const double w = p_mean(values, p);
    table.push_back({{"p", p.to_string()}, {"alg_welfare", w}});
    rows.push_back({p.to_string(), num(w)});
  }
  if (cfg.output == "csv") {
    print_csv(out, {"p", "alg_welfare"}, rows);
    return kExitOk;
  }
  const json report = {
      {"command", "solve"},
      {"instance", instance_summary(inst)},
      {"sw_backend", std::string(to_string(backend))},
      {"guarantee", std::string(to_string(backend == SwBackend::ExactBruteForce
                                              ? Guarantee::Exact
                                              : Guarantee::Heuristic))},
      {"allocation", allocation_json(result.alloc)},
      {"bundle_values", values},
      {"trace", trace_json(result.trace)},
      {"table", std::move(table)},
      {"timings_ms", {{"alg", alg_ms}}},
  };
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_exact(const RunConfig& cfg, std::ostream& out) {
  require_output(cfg);
  const Instance inst = load_instance(cfg.instance_path);
  const std::vector<Exponent> grid = parse_exponent_list(cfg.p_list);
  const auto start = Clock::now();
  const std::vector<OptResult> opts = p_opt_brute_grid(inst, grid, resolve_budget(cfg));
  const double ms = elapsed_ms(start);

  json table = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const OptResult& o : opts) {
    table.push_back({{"p", o.p.to_string()},
                     {"opt_welfare", o.welfare},
                     {"allocation", allocation_json(o.alloc)}});
    rows.push_back({o.p.to_string(), num(o.welfare)});
  }
  if (cfg.output == "csv") {
    print_csv(out, {"p", "opt_welfare"}, rows);
    return kExitOk;
  }
  const json report = {{"command", "exact"},
                       {"instance", instance_summary(inst)},
                       {"table", std::move(table)},
                       {"timings_ms", {{"exact", ms}}}};
  out << report.dump(2) << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  require_output(cfg);
  const Instance inst = load_instance(cfg.instance_path);
  const std::vector<Exponent> grid = parse_exponent_list(cfg.p_list);
  const SwBackend backend = parse_sw_backend(cfg.sw_backend);
  const Budget budget = resolve_budget(cfg);

  auto start = Clock::now();
  const AlgResult result = alg(inst, backend, budget);
  const double alg_ms = elapsed_ms(start);
  start = Clock::now();
  const std::vector<OptResult> opts = p_opt_brute_grid(inst, grid, budget);
  const double exact_ms = elapsed_ms(start);
  const std::vector<double> values = bundle_values(inst.valuation(), result.alloc);

  bool all_pass = true;
  json table = json::array();
  std::vector<std::vector<std::string>> rows;
  for (const OptResult& o : opts) {
    const double w = p_mean(values, o.p);
    json row = {{"p", o.p.to_string()}, {"alg_welfare", w}, {"opt_welfare", o.welfare}};
    std::string status;
    std::string ratio_text;
    if (o.welfare <= 0.0) {
      status = "vacuous";
      row["ratio"] = nullptr;
    } else {
      const double ratio = w / o.welfare;
      const bool pass = w >= o.welfare / AlgConstants::approx_factor - kEpsilon;
      status = pass ? "pass" : "fail";
      all_pass = all_pass && pass;
      row["ratio"] = ratio;
      ratio_text = num(ratio);
    }
    row["status"] = status;
    table.push_back(std::move(row));
    rows.push_back({o.p.to_string(), num(w), num(o.welfare), ratio_text, status});
  }
  const int code = all_pass ? kExitOk : kExitViolation;
  if (cfg.output == "csv") {
    print_csv(out, {"p", "alg_welfare", "opt_welfare", "ratio", "status"}, rows);
    return code;
  }
  const json report = {
      {"command", "verify"},
      {"instance", instance_summary(inst)},
      {"sw_backend", std::string(to_string(backend))},
      {"guarantee", std::string(to_string(backend == SwBackend::ExactBruteForce
                                              ? Guarantee::Exact
                                              : Guarantee::Heuristic))},
      {"bound", 1.0 / AlgConstants::approx_factor},
      {"allocation", allocation_json(result.alloc)},
      {"bundle_values", values},
      {"trace", trace_json(result.trace)},
      {"table", std::move(table)},
      {"all_pass", all_pass},
      {"timings_ms", {{"alg", alg_ms}, {"exact", exact_ms}}},
  };
  out << report.dump(2) << '\n';
  return code;
}

int cmd_check_ineq(const RunConfig& cfg, std::ostream& out) {
  namespace an = analysis;
  const double neg_step = cfg.grid_step.value_or(0.01);
  const double pos_step = cfg.grid_step.value_or(0.001);
  const double large_step = cfg.grid_step.value_or(0.001);

  const an::SignRangeReport signs = an::check_sign_ranges(-50.0, neg_step, pos_step);
  const double root = an::locate_root();
  const an::LargePConstantsReport large_p = an::check_large_p_constants(0.4, 1.0, large_step);
  const an::ExtremaReport extrema = an::check_extrema_are_maxima();

  const bool root_ok = root > 0.4 && root < 0.41 && std::abs(an::f(root)) < 1e-12;
  const bool endpoints_ok = an::f(0.4) > 0.0 && an::f(0.41) < 0.0;
  const bool ok = signs.ok() && root_ok && endpoints_ok && large_p.ok() && extrema.ok();
  const double worst = std::max({0.0, signs.negative.extreme, -signs.positive.extreme,
                                 -large_p.worst_combined_margin, -large_p.worst_factor_margin});

  auto grid_json = [](const an::GridCheck& g, const char* extreme_key) {
    return json{{"lo", g.lo},           {"hi", g.hi},
                {"step", g.step},       {"points", g.points},
                {extreme_key, g.extreme}, {"at", g.extreme_at},
                {"ok", g.ok}};
  };
  const json report = {
      {"command", "check-ineq"},
      {"constants",
       {{"a", an::IneqConstants::a}, {"b", an::IneqConstants::b}, {"c", an::IneqConstants::c}}},
      {"ranges",
       {{"negative", grid_json(signs.negative, "max_f")},
        {"positive", grid_json(signs.positive, "min_f")}}},
      {"f_at_0", an::f(0.0)},
      {"f_at_0_4", an::f(0.4)},
      {"f_at_0_41", an::f(0.41)},
      {"root", root},
      {"f_at_root", an::f(root)},
      {"large_p",
       {{"points", large_p.points},
        {"worst_combined_margin", large_p.worst_combined_margin},
        {"worst_factor_margin", large_p.worst_factor_margin},
        {"power_pairs_checked", large_p.power_pairs_checked},
        {"power_pair_failures", large_p.power_pair_failures},
        {"ok", large_p.ok()}}},
      {"extrema", {{"maxima", extrema.maxima}, {"minima", extrema.minima}, {"ok", extrema.ok()}}},
      {"worst_violation", worst},
      {"ok", ok},
  };
  out << report.dump(2) << '\n';
  return ok ? kExitOk : kExitViolation;
}

int cmd_hardness_demo(const RunConfig& cfg, std::ostream& out) {
  namespace hd = hardness;
  const bool yes = cfg.mode == "yes";
  if (!yes && cfg.mode != "no") throw InvalidArgument("--mode must be yes or no");
  const std::vector<Exponent> grid =
      parse_exponent_list(cfg.p_list.empty() ? kDefaultGrid : cfg.p_list);
  const Budget budget = resolve_budget(cfg);

  const hd::Gap3dmInstance g =
      yes ? hd::random_yes_instance(cfg.q, cfg.edges.value_or(cfg.q), cfg.seed)
          : hd::random_no_instance(cfg.q, cfg.edges.value_or(2 * cfg.q), cfg.seed);
  const Instance inst = hd::reduce(g);
  const std::string instance_text = instance_to_json(inst);
  if (!cfg.out_path.empty()) {
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write " + cfg.out_path);
    file << instance_text << '\n';
  }

  const hd::Matching matching = hd::max_matching_brute(g);
  const double alpha = static_cast<double>(matching.size()) / g.q;
  const std::vector<OptResult> opts = p_opt_brute_grid(inst, grid, budget);
  const AlgResult result = alg(inst, SwBackend::ExactBruteForce, budget);
  const std::vector<double> values = bundle_values(inst.valuation(), result.alloc);

  bool ok = true;
  json rows = json::array();
  for (const OptResult& o : opts) {
    const bool pass = yes ? std::abs(o.welfare - 3.0) <= kEpsilon
                          : o.welfare <= 2.0 + alpha + kEpsilon;
    ok = ok && pass;
    rows.push_back({{"p", o.p.to_string()},
                    {"opt_welfare", o.welfare},
                    {"alg_welfare", p_mean(values, o.p)},
                    {"pass", pass}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back(e);
  const json report = {
      {"command", "hardness-demo"},
      {"q", g.q},
      {"mode", cfg.mode},
      {"seed", cfg.seed},
      {"edges", std::move(edges)},
      {"max_matching", matching.size()},
      {"alpha", alpha},
      {"expected", yes ? "opt_welfare == 3" : "opt_welfare <= 2 + alpha"},
      {"instance", json::parse(instance_text)},
      {"table", std::move(rows)},
      {"ok", ok},
  };
  out << report.dump(2) << '\n';
  return ok ? kExitOk : kExitViolation;
}

// "--p -inf,-1" would otherwise be read as a short-option cluster.
std::vector<std::string> join_dash_values(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--p" && i + 1 < args.size() && !args[i + 1].empty() &&
        args[i + 1][0] == '-' && args[i + 1].rfind("--", 0) != 0) {
      out.push_back("--p=" + args[i + 1]);
      ++i;
    } else {
      out.push_back(args[i]);
    }
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Approximate p-mean welfare maximization for identical subadditive valuations",
               "pmean"};
  app.require_subcommand(1);

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", cfg.budget,
                    "Cap on enumerated labeled partitions (default 1e7, env PMEAN_BUDGET)");
  };

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance file");
  gen->add_option("--family", cfg.family, "additive|budget_additive|xos|explicit")->required();
  gen->add_option("--n", cfg.n, "Number of agents");
  gen->add_option("--m", cfg.m, "Number of goods");
  gen->add_option("--seed", cfg.seed, "PRNG seed");
  gen->add_option("--clauses", cfg.gen.clauses, "Additive clauses for xos/explicit");
  gen->add_option("--cap-fraction", cfg.gen.cap_fraction, "Budget cap as a fraction of total");
  gen->add_option("--out", cfg.out_path, "Output file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Run the two-phase algorithm");
  solve->add_option("--instance", cfg.instance_path)->required();
  solve->add_option("--sw-backend", cfg.sw_backend, "exact|greedy");
  solve->add_option("--p", cfg.p_list, "Comma-separated exponents; -inf allowed")->required();
  solve->add_option("--output", cfg.output, "json|csv");
  add_budget(solve);

  CLI::App* exact = app.add_subcommand("exact", "Brute-force p-optimal welfare");
  exact->add_option("--instance", cfg.instance_path)->required();
  exact->add_option("--p", cfg.p_list)->required();
  exact->add_option("--output", cfg.output, "json|csv");
  add_budget(exact);

  CLI::App* verify = app.add_subcommand("verify", "Compare the algorithm against brute force");
  verify->add_option("--instance", cfg.instance_path)->required();
  verify->add_option("--p", cfg.p_list)->required();
  verify->add_option("--sw-backend", cfg.sw_backend, "exact|greedy");
  verify->add_option("--output", cfg.output, "json|csv");
  add_budget(verify);

  CLI::App* ineq = app.add_subcommand("check-ineq", "Check the numeric inequalities");
  ineq->add_option("--grid-step", cfg.grid_step, "Override every grid step");

  CLI::App* demo = app.add_subcommand("hardness-demo", "Build and check a 3DM gap instance");
  demo->add_option("--q", cfg.q, "Size of each vertex block");
  demo->add_option("--mode", cfg.mode, "yes|no");
  demo->add_option("--seed", cfg.seed, "PRNG seed");
  demo->add_option("--edges", cfg.edges, "Extra edges (yes) or total edges (no)");
  demo->add_option("--p", cfg.p_list, "Exponent grid");
  demo->add_option("--out", cfg.out_path, "Write the reduced instance here");
  add_budget(demo);

  std::vector<std::string> args = join_dash_values(raw_args);
  std::vector<char*> argv;
  std::string prog = "pmean";
  argv.push_back(prog.data());
  for (std::string& a : args) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "pmean: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(cfg, out);
    if (solve->parsed()) return cmd_solve(cfg, out);
    if (exact->parsed()) return cmd_exact(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (ineq->parsed()) return cmd_check_ineq(cfg, out);
    if (demo->parsed()) return cmd_hardness_demo(cfg, out);
  } catch (const Error& e) {
    err << "pmean: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pmean::cli
