#include <benchmark/benchmark.h>

#include <cycaut/equivalence.hpp>
#include <cycaut_cli/cli.hpp>

using namespace cycaut;

// Worst case for the search: no witness, so all of Q^1 is scanned.
static void BM_AlgorithmBNegative(benchmark::State& state) {
  const u64 p = static_cast<u64>(state.range(0));
  const u64 n = p * p;
  const auto a = cycle_graph(n);
  const CirculantGraph b(n, {p, n - p});
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b).candidates_checked);
}
BENCHMARK(BM_AlgorithmBNegative)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_AlgorithmBCodes(benchmark::State& state) {
  const auto f = Field::of_order(7);
  const auto a = CyclicCode::from_defining_set(25, f, std::vector<u64>{1, 2});
  const auto b = CyclicCode::from_defining_set(25, f, std::vector<u64>{3, 6});
  const SearchOptions opts{kDefaultEnumerationCap, static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(equivalent(a, b, opts).candidates_checked);
}
BENCHMARK(BM_AlgorithmBCodes)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Table2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cli::compute_table2().size());
}
BENCHMARK(BM_Table2)->Unit(benchmark::kMillisecond);
