#include <benchmark/benchmark.h>

#include <memory>

#include "dormant/fusion.hpp"
#include "dormant/hyperg.hpp"
#include "dormant/radii.hpp"
#include "dormant/verlinde.hpp"

namespace {

using namespace dormant;

std::vector<Parameter> params(Prime p, std::initializer_list<int> xs) {
  std::vector<Parameter> out;
  for (int x : xs) out.emplace_back(FpElem(p, x));
  return out;
}

void BM_KernelRank(benchmark::State& state) {
  const Prime p(13);
  const HGOperator op(p, params(p, {1, 5, 9, 11}), params(p, {2, 3, 7, 12}));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_rank(op));
}
BENCHMARK(BM_KernelRank);

void BM_OracleRank(benchmark::State& state) {
  const Prime p(13);
  const HGOperator op(p, params(p, {1, 5, 9, 11}), params(p, {2, 3, 7, 12}));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_rank(op));
}
BENCHMARK(BM_OracleRank);

void BM_HypSet(benchmark::State& state) {
  const Prime p(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(hyp_set(p, n));
}
BENCHMARK(BM_HypSet)->Args({7, 3})->Args({11, 3})->Args({13, 4})->Unit(benchmark::kMillisecond);

void BM_BaseTable(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BaseTable::build(Prime(7), static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BaseTable)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_CountCold(benchmark::State& state) {
  const auto table = std::make_shared<const BaseTable>(BaseTable::build(Prime(7), 3));
  const int g = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const CountEngine engine(table);
    benchmark::DoNotOptimize(engine.count(g, {}));
  }
}
BENCHMARK(BM_CountCold)->DenseRange(2, 6, 2);

void BM_VerlindeCount(benchmark::State& state) {
  const Prime p(static_cast<int>(state.range(0)));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(verlinde_count(p, n, 2));
}
BENCHMARK(BM_VerlindeCount)->Args({7, 3})->Args({13, 3})->Args({17, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
