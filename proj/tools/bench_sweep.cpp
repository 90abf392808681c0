// Serial versus parallel property sweeps over the same norm balls.

#include <benchmark/benchmark.h>

#include <thread>

#include "ordinals/checks.hpp"

using namespace ord;

namespace {

int max_jobs() {
  unsigned n = std::thread::hardware_concurrency();
  return n > 1 ? static_cast<int>(n) : 2;
}

void bench_order(benchmark::State& state) {
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CheckResult r = check_order(System::Theta, 8, jobs);
    if (!r.ok) state.SkipWithError("order sweep failed");
    benchmark::DoNotOptimize(r.cases);
  }
}

void bench_bachmann(benchmark::State& state) {
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CheckResult r = check_bachmann(System::Theta, 8, 3, jobs);
    if (!r.ok) state.SkipWithError("bachmann sweep failed");
    benchmark::DoNotOptimize(r.cases);
  }
}

void bench_oracle(benchmark::State& state) {
  int jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CheckResult r = check_oracle(8, 100000, jobs);
    if (!r.ok) state.SkipWithError("oracle sweep failed");
    benchmark::DoNotOptimize(r.cases);
  }
}

}  // namespace

BENCHMARK(bench_order)->Arg(1)->Arg(max_jobs())->Unit(benchmark::kMillisecond);
BENCHMARK(bench_bachmann)->Arg(1)->Arg(max_jobs())->Unit(benchmark::kMillisecond);
BENCHMARK(bench_oracle)->Arg(1)->Arg(max_jobs())->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
