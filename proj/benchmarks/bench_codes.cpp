#include <benchmark/benchmark.h>

#include <cycaut/autgroup.hpp>
#include <cycaut/codes.hpp>

using namespace cycaut;

static void BM_CanonicalForm(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  const auto f = Field::of_order(2);
  const auto code = CyclicCode::from_defining_set(n, f, std::vector<u64>{1});
  const auto gm = generator_matrix(code);
  for (auto _ : state) {
    LinearCode c(f, n, gm.entries);
    benchmark::DoNotOptimize(c.dimension());
  }
  state.SetLabel("[" + std::to_string(n) + "," + std::to_string(code.dimension()) + "]");
}
BENCHMARK(BM_CanonicalForm)->Arg(7)->Arg(23)->Arg(63)->Arg(127);

static void BM_PermutesOnto(benchmark::State& state) {
  const auto code = CyclicCode::from_defining_set(63, Field::of_order(2), std::vector<u64>{1, 3});
  const auto& lin = code.linear();
  const auto sigma = multiplier(63, 5);
  for (auto _ : state) benchmark::DoNotOptimize(lin.permutes_onto(sigma, lin));
}
BENCHMARK(BM_PermutesOnto);

static void BM_MinDistance(benchmark::State& state) {
  const auto code = CyclicCode::from_defining_set(31, Field::of_order(2), std::vector<u64>{1});
  for (auto _ : state) benchmark::DoNotOptimize(min_distance(code));
}
BENCHMARK(BM_MinDistance)->Unit(benchmark::kMillisecond);

static void BM_ClassifyGolay(benchmark::State& state) {
  const auto code = CyclicCode::from_defining_set(23, Field::of_order(2), std::vector<u64>{1});
  for (auto _ : state) benchmark::DoNotOptimize(classify(code).order);
}
BENCHMARK(BM_ClassifyGolay)->Unit(benchmark::kMillisecond);
