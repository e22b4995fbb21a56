#include <benchmark/benchmark.h>

#include "bench_common.h"
#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"
#include "lexind/extraction.h"

namespace lexind::bench {
namespace {

CoocMatrix Side(const Corpus& corpus, const ColumnSpacePtr& space) {
  auto raw = BuildCooccurrence(corpus, BuildVocabulary(corpus, 2), space);
  return NormalizeRows(PruneZeroRows(ApplyLogLikelihood(raw, CountWords(corpus), corpus.token_count)));
}

void BM_ExtractLexicon(benchmark::State& state) {
  const bool independent = state.range(0) != 0;
  const auto threads = static_cast<unsigned>(state.range(1));
  auto source = ZipfCorpus(1500, 50000, "s", 4);
  auto target = ZipfCorpus(1500, 50000, "t", 5);
  auto dicts = Dictionaries(300, independent ? 3 : 1);
  auto dict = independent ? CombineIndependent(dicts) : CombinedDictionary::FromSingle(dicts[0]);
  auto src = Side(source, MakeSourceSpace(dict, WindowMode::kUnordered, 3));
  auto tgt = Side(target, MakeTargetSpace(dict, WindowMode::kUnordered, 3));
  const auto metric = independent ? Metric::kNewDiceMin : Metric::kDiceMin;
  WeightSet weights = UnitWeights(dict);
  for (auto _ : state) {
    auto lex = ExtractLexicon(src, tgt, dict, metric, &weights, 10, threads);
    benchmark::DoNotOptimize(lex.entries.size());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(src.rows()));
}
BENCHMARK(BM_ExtractLexicon)->Args({0, 1})->Args({1, 1})->Args({1, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace lexind::bench

BENCHMARK_MAIN();
