// Serial reference vs OpenMP sweep, and exact vs word-sized 3-adic sums.

#include "bincert/binom_sums.hpp"
#include "bincert/kernels.hpp"
#include "bincert/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace bincert;

namespace {

SweepConfig scc1_config(int jobs) {
  SweepConfig c;
  c.claim = ClaimId::SCC1;
  c.m_values = parse_int_list("4..40:3");
  c.n_max = 400;
  c.policy = ModePolicy::Fast;
  c.seed = 1;
  c.jobs = jobs;
  return c;
}

void BM_SweepSerial(benchmark::State& state) {
  const SweepConfig c = scc1_config(1);
  const SweepPlan plan = plan_sweep(c);
  for (auto _ : state) benchmark::DoNotOptimize(run_serial(plan, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.tasks.size()));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const SweepConfig c = scc1_config(static_cast<int>(state.range(0)));
  const SweepPlan plan = plan_sweep(c);
  for (auto _ : state) benchmark::DoNotOptimize(run_parallel(plan, c));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(plan.tasks.size()));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_ScaledSumExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scaled_sum(7, n));
}
BENCHMARK(BM_ScaledSumExact)->Arg(100)->Arg(1000)->Arg(3000);

void BM_ScaledSumTruncated(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::scaled_sum_3adic(7, n, 30));
}
BENCHMARK(BM_ScaledSumTruncated)->Arg(100)->Arg(1000)->Arg(3000);

void BM_CentralSumExact(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(central_sum(n));
}
BENCHMARK(BM_CentralSumExact)->Arg(1000)->Arg(5000);

void BM_CentralSumTruncated(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::central_sum_3adic(n, 30));
}
BENCHMARK(BM_CentralSumTruncated)->Arg(1000)->Arg(5000);

}  // namespace

BENCHMARK_MAIN();
