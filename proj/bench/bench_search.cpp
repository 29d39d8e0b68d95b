#include <benchmark/benchmark.h>

#include "genalg/search/kernels.hpp"
#include "genalg/search/search.hpp"
#include "genalg/zoo/zoo.hpp"

namespace {

using namespace genalg;

SearchBudget budget_for(bool parallel) {
  SearchBudget b;
  b.parallel = parallel;
  return b;
}

void BM_MinGenerators(benchmark::State& state) {
  const auto m = matrix_algebra(PrimeField(3), 2);
  const auto b = budget_for(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(min_generators(m, b, false));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_MinGenerators)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaxClosureDimension(benchmark::State& state) {
  const auto e = split_etale(PrimeField(3), 4);
  const auto b = budget_for(state.range(0) != 0);
  for (auto _ : state) benchmark::DoNotOptimize(max_closure_dimension(e, 2, b, false));
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_MaxClosureDimension)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_CompletionSearch(benchmark::State& state) {
  const auto m = matrix_algebra(PrimeField(2), 3);
  const std::vector<Vec<PrimeField>> partial{m.basis_vector(0)};
  SearchBudget b = budget_for(state.range(0) != 0);
  b.max_exhaustive = 1 << 10;
  for (auto _ : state) {
    benchmark::DoNotOptimize(completable(m, std::span<const Vec<PrimeField>>(partial), 2, b, false));
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_CompletionSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FindFirstKernel(benchmark::State& state) {
  const std::uint64_t total = 1 << 20;
  auto pred = [](std::uint64_t i) { return (i * 2654435761u) % 1000003 == 17; };
  for (auto _ : state) {
    if (state.range(0)) {
      benchmark::DoNotOptimize(search::parallel::find_first(total, pred));
    } else {
      benchmark::DoNotOptimize(search::serial::find_first(total, pred));
    }
  }
  state.SetLabel(state.range(0) ? "parallel" : "serial");
}
BENCHMARK(BM_FindFirstKernel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
