#include <benchmark/benchmark.h>

#include "decpi/families.hpp"
#include "decpi/pi_batch.hpp"
#include "decpi/pi_incremental.hpp"

namespace {

// First 100 implicants of the gadget family; |IP| = 2^n.
void BM_GadgetFirst100(benchmark::State& state) {
  const decpi::Circuit c = decpi::gadget_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decpi::enumerate_ip(c, 100));
}
BENCHMARK(BM_GadgetFirst100)->DenseRange(10, 30, 5)->Unit(benchmark::kMillisecond);

void BM_GadgetBatch(benchmark::State& state) {
  const decpi::Circuit c = decpi::gadget_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decpi::ip_all(c));
  state.SetItemsProcessed(state.iterations() << state.range(0));
}
BENCHMARK(BM_GadgetBatch)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_ChainEnumerateAll(benchmark::State& state) {
  const decpi::Circuit c = decpi::chain_family(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(decpi::enumerate_ip(c));
}
BENCHMARK(BM_ChainEnumerateAll)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
