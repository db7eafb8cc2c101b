#include <benchmark/benchmark.h>

#include "elliptica/casebook.hpp"

using namespace elliptica;

static void BM_Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_degree_types(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_ExceptionalLists(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(exceptional_lists());
}
BENCHMARK(BM_ExceptionalLists)->Unit(benchmark::kMillisecond);

static DegreeType exceptional(int i) {
  ExceptionalLists l = expected_exceptional_lists();
  std::vector<DegreeType> all;
  for (const auto* v : {&l.sector8, &l.sector10, &l.sector12}) all.insert(all.end(), v->begin(), v->end());
  return all.at(static_cast<std::size_t>(i));
}

// Sampling includes the ellipticity window check.
static void BM_SampleExceptional(benchmark::State& state) {
  DegreeType dt = exceptional(static_cast<int>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample_presentation(dt, seed++));
}
BENCHMARK(BM_SampleExceptional)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_HalperinExceptional(benchmark::State& state) {
  DegreeType dt = exceptional(static_cast<int>(state.range(0)));
  auto s = sample_presentation(dt, 1);
  for (auto _ : state) {
    Quotient q(s.presentation);
    benchmark::DoNotOptimize(halperin_check(q));
  }
}
BENCHMARK(BM_HalperinExceptional)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

static void BM_SliceRank(benchmark::State& state) {
  // Top degree of a sampled (2,2,2,2;4,4,4,4) algebra, exact path.
  auto s = sample_presentation(make_degree_type({2, 2, 2, 2}, {4, 4, 4, 4}), 3);
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Quotient q(s.presentation);
    benchmark::DoNotOptimize(q.slice_rank(n));
  }
}
BENCHMARK(BM_SliceRank)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_HilbertIncremental(benchmark::State& state) {
  auto s = sample_presentation(make_degree_type({2, 2, 2, 2}, {4, 4, 4, 4}), 3);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_function_incremental(s.presentation, 10));
}
BENCHMARK(BM_HilbertIncremental)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
