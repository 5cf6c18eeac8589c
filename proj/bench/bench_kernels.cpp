// Serial vs OpenMP subset scans. Arguments: (n, d, size or -1 for all
// subsets); the parallel runs also take a thread count.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "gotzmann/kernels.hpp"

namespace {

using namespace gotzmann;

SubsetSpace space_for(const ShadowTable& table, long size) {
  return size < 0 ? SubsetSpace::all(table.bits())
                  : SubsetSpace::of_size(table.bits(), static_cast<std::size_t>(size));
}

void BM_SerialGotzmannScan(benchmark::State& state) {
  const ShadowTable table(state.range(0), state.range(1));
  const SubsetSpace space = space_for(table, state.range(2));
  for (auto _ : state) {
    auto found = serial::select(space, [&](Mask m) { return table.is_gotzmann(m); });
    benchmark::DoNotOptimize(found.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space.count()));
}

void BM_ParallelGotzmannScan(benchmark::State& state) {
  const ShadowTable table(state.range(0), state.range(1));
  const SubsetSpace space = space_for(table, state.range(2));
  omp_set_num_threads(static_cast<int>(state.range(3)));
  for (auto _ : state) {
    auto found = parallel::select(space, [&](Mask m) { return table.is_gotzmann(m); });
    benchmark::DoNotOptimize(found.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(space.count()));
}

BENCHMARK(BM_SerialGotzmannScan)->Args({3, 4, -1})->Args({4, 3, 10})->Args({3, 5, 15});
BENCHMARK(BM_ParallelGotzmannScan)
    ->ArgsProduct({{3}, {4}, {-1}, {1, 2, 4, 8}})
    ->ArgsProduct({{4}, {3}, {10}, {1, 2, 4, 8}})
    ->ArgsProduct({{3}, {5}, {15}, {1, 2, 4, 8}})
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
