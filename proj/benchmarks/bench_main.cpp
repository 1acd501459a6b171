#include <benchmark/benchmark.h>

#include <vector>

#include "pmean/allocator.hpp"
#include "pmean/generate.hpp"
#include "pmean/means.hpp"
#include "pmean/oracle.hpp"
#include "pmean/rng.hpp"
#include "pmean/swmax.hpp"

using namespace pmean;

static void BM_AlgExact(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const Instance inst = generate_instance(Family::Xos, 3, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(alg(inst, SwBackend::ExactBruteForce));
}
BENCHMARK(BM_AlgExact)->Arg(6)->Arg(8)->Arg(10);

static void BM_AlgGreedy(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const Instance inst = generate_instance(Family::Additive, 8, m, 1);
  for (auto _ : state) benchmark::DoNotOptimize(alg(inst, SwBackend::GreedyDemand));
}
BENCHMARK(BM_AlgGreedy)->Arg(16)->Arg(32)->Arg(64);

static void BM_OptGrid(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  const Instance inst = generate_instance(Family::BudgetAdditive, 3, m, 2);
  const std::vector<Exponent> grid = parse_exponent_list("-inf,-4,-1,-0.5,0,0.25,0.4,0.7,1");
  for (auto _ : state) benchmark::DoNotOptimize(p_opt_brute_grid(inst, grid));
}
BENCHMARK(BM_OptGrid)->Arg(6)->Arg(8)->Arg(10);

static void BM_PartitionScan(benchmark::State& state) {
  const unsigned m = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    LabeledPartitions parts(GoodSet::full(m), 3);
    std::size_t n = 0;
    do {
      ++n;
    } while (parts.advance());
    benchmark::DoNotOptimize(n);
  }
}
BENCHMARK(BM_PartitionScan)->Arg(8)->Arg(12);

static void BM_PMean(benchmark::State& state) {
  Rng rng(3);
  std::vector<double> x(static_cast<std::size_t>(state.range(0)));
  for (double& v : x) v = 1e-3 + 1e3 * rng.uniform01();
  const Exponent p = Exponent::finite(-0.5);
  for (auto _ : state) benchmark::DoNotOptimize(p_mean(x, p));
}
BENCHMARK(BM_PMean)->Arg(8)->Arg(1024);

BENCHMARK_MAIN();
