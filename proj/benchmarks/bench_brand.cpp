#include <benchmark/benchmark.h>

#include <cycaut/brand.hpp>

using namespace cycaut;

static void BM_EnumerateQ(benchmark::State& state) {
  const QGroupId id(PrimePowerLength(static_cast<u64>(state.range(0)), 2), static_cast<unsigned>(state.range(1)));
  for (auto _ : state) {
    u64 count = 0;
    enumerate(id, [&](const PolyPerm&) {
      ++count;
      return true;
    });
    benchmark::DoNotOptimize(count);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(id.cardinality()));
}
BENCHMARK(BM_EnumerateQ)->Args({3, 2})->Args({5, 2})->Args({7, 2})->Unit(benchmark::kMillisecond);

static void BM_ComposeInvert(benchmark::State& state) {
  const QGroupId id(PrimePowerLength(11, 2), 5);
  const auto g = element_at(id, 123456);
  const auto h = element_at(id, 654321);
  for (auto _ : state) benchmark::DoNotOptimize(compose(invert(g), h));
}
BENCHMARK(BM_ComposeInvert);
