#include <benchmark/benchmark.h>

#include "bench_common.h"
#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"

namespace lexind::bench {
namespace {

void BM_BuildCooccurrence(benchmark::State& state) {
  const auto mode = state.range(0) ? WindowMode::kOrdered : WindowMode::kUnordered;
  const int k = static_cast<int>(state.range(1));
  auto corpus = ZipfCorpus(5000, 200000, "s", 1);
  auto rows = BuildVocabulary(corpus, 1);
  auto dict = CombinedDictionary::FromSingle(Dictionaries(1000, 1)[0]);
  auto space = MakeSourceSpace(dict, mode, k);
  for (auto _ : state) {
    auto m = BuildCooccurrence(corpus, rows, space);
    benchmark::DoNotOptimize(m.nnz());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.token_count));
}
BENCHMARK(BM_BuildCooccurrence)->Args({0, 2})->Args({0, 5})->Args({1, 5})->Unit(benchmark::kMillisecond);

void BM_LogLikelihoodAndNormalize(benchmark::State& state) {
  auto corpus = ZipfCorpus(5000, 200000, "s", 2);
  auto rows = BuildVocabulary(corpus, 1);
  auto dict = CombinedDictionary::FromSingle(Dictionaries(1000, 1)[0]);
  auto raw = BuildCooccurrence(corpus, rows, MakeSourceSpace(dict, WindowMode::kUnordered, 5));
  const auto freq = CountWords(corpus);
  for (auto _ : state) {
    auto m = NormalizeRows(PruneZeroRows(ApplyLogLikelihood(raw, freq, corpus.token_count)));
    benchmark::DoNotOptimize(m.nnz());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(raw.nnz()));
}
BENCHMARK(BM_LogLikelihoodAndNormalize)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lexind::bench

BENCHMARK_MAIN();
