#include "boolform/enumerate.hpp"

#include <benchmark/benchmark.h>

using namespace boolform;

namespace {

// Args: model index, size m, variables n.
Model model_arg(const benchmark::State& st) { return kAllModels[st.range(0)]; }

void set_items(benchmark::State& st) {
  const BigInt trees = count_trees(model_arg(st), static_cast<int>(st.range(1)),
                                   static_cast<int>(st.range(2)));
  st.SetItemsProcessed(st.iterations() * trees.convert_to<std::int64_t>());
  st.SetLabel(model_name(model_arg(st)));
}

void BM_Serial(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(distribution_words_serial(
        model_arg(st), static_cast<int>(st.range(1)), static_cast<int>(st.range(2))));
  set_items(st);
}

void BM_Parallel(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(distribution_words_parallel(
        model_arg(st), static_cast<int>(st.range(1)), static_cast<int>(st.range(2))));
  set_items(st);
}

void BM_DynamicProgramming(benchmark::State& st) {
  for (auto _ : st)
    benchmark::DoNotOptimize(distribution_words_dp(model_arg(st), static_cast<int>(st.range(1)),
                                                   static_cast<int>(st.range(2))));
  set_items(st);
}

void sizes(benchmark::internal::Benchmark* b) {
  b->Args({0, 6, 2})->Args({1, 6, 2})->Args({2, 7, 2})->Args({3, 7, 2})->Args({2, 6, 3});
  b->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_Serial)->Apply(sizes);
BENCHMARK(BM_Parallel)->Apply(sizes);
BENCHMARK(BM_DynamicProgramming)->Apply(sizes);

BENCHMARK_MAIN();
