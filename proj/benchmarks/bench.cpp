#include <benchmark/benchmark.h>

#include "hompre/bialgebra.hpp"
#include "hompre/dendriform.hpp"
#include "hompre/document.hpp"
#include "hompre/fixtures.hpp"
#include "hompre/matched_pair.hpp"
#include "hompre/search.hpp"
#include "hompre/sweep.hpp"

using namespace hompre;
using namespace hompre::fixtures;

static void BM_ValidateHomPreLie(benchmark::State& state) {
  const auto a = F2c();
  for (auto _ : state) benchmark::DoNotOptimize(validate_hom_pre_lie(a).valid());
}
BENCHMARK(BM_ValidateHomPreLie);

static void BM_IsHomPreLie(benchmark::State& state) {
  const auto a = FN();
  for (auto _ : state) benchmark::DoNotOptimize(is_hom_pre_lie(a));
}
BENCHMARK(BM_IsHomPreLie);

static void BM_StandardManinTriple(benchmark::State& state) {
  const auto a = F2();
  const auto d = dual_product_from_r(a, Tensor2::elementary(2, 1, 1));
  for (auto _ : state) benchmark::DoNotOptimize(standard_manin_triple(a, d).verdict.valid());
}
BENCHMARK(BM_StandardManinTriple);

static void BM_CanonicalSMatrix(benchmark::State& state) {
  const auto d = D1();
  for (auto _ : state) {
    const auto c = canonical_smatrix(d);
    benchmark::DoNotOptimize(hom_s_bracket(c.big_algebra, c.r).is_zero());
  }
}
BENCHMARK(BM_CanonicalSMatrix);

static void BM_CorpusSearch(benchmark::State& state) {
  SearchSpec spec;
  spec.workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_search(spec).size());
}
BENCHMARK(BM_CorpusSearch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_SweepDoublePreLie(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_double_pre_lie({1, 50, 1}).candidates);
}
BENCHMARK(BM_SweepDoublePreLie)->Unit(benchmark::kMillisecond);

static void BM_RoundTrip(benchmark::State& state) {
  const std::string text = serialize(standard_manin_triple(F2(), zero_dual(F2())).triple);
  for (auto _ : state) benchmark::DoNotOptimize(serialize(parse_document(text)));
}
BENCHMARK(BM_RoundTrip);

BENCHMARK_MAIN();
