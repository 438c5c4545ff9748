#include "kpasep/ansatz.hpp"
#include "kpasep/ratchain.hpp"
#include "kpasep/rhombic.hpp"

#include <benchmark/benchmark.h>

using namespace kpasep;

namespace {

Execution mode(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

void BM_Z(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(Z(7, 2, {2}, mode(s)));
}

void BM_Z_partition(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(Z_partition(7, 3, {1, 2}, mode(s)));
}

void BM_chain(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(chain(5, 2, mode(s)).size());
}

}  // namespace

// argument 0 = serial reference, 1 = OpenMP
BENCHMARK(BM_Z)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Z_partition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_chain)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
