#ifndef LEXIND_BENCHMARKS_BENCH_COMMON_H_
#define LEXIND_BENCHMARKS_BENCH_COMMON_H_

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "lexind/corpus.h"
#include "lexind/dictionary.h"

namespace lexind::bench {

// Zipf-distributed words "<prefix><i>", 12-token sentences, 8 per document.
inline Corpus ZipfCorpus(std::size_t vocabulary, std::size_t tokens, const std::string& prefix,
                         std::uint64_t seed) {
  std::vector<double> weights(vocabulary);
  for (std::size_t i = 0; i < vocabulary; ++i) weights[i] = 1.0 / static_cast<double>(i + 1);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  std::mt19937_64 rng(seed);
  std::string text;
  for (std::size_t t = 0; t < tokens; ++t) {
    text += prefix + std::to_string(pick(rng));
    if (t % 96 == 95) {
      text += "\n\n";
    } else {
      text += t % 12 == 11 ? '\n' : ' ';
    }
  }
  return ParseCorpus(text, {}, prefix);
}

// Maps s<i> to t<i> for the `size` most frequent words, in `origins` equal
// slices that overlap by half a slice.
inline std::vector<SeedDictionary> Dictionaries(std::size_t size, std::size_t origins) {
  std::vector<SeedDictionary> out;
  const std::size_t slice = size / origins;
  for (std::size_t o = 0; o < origins; ++o) {
    std::vector<SeedEntry> entries;
    const std::size_t begin = o * slice / 2;
    for (std::size_t i = begin; i < begin + slice; ++i) {
      entries.push_back({"s" + std::to_string(i), "t" + std::to_string(i)});
    }
    out.emplace_back("D" + std::to_string(o), entries);
  }
  return out;
}

}  // namespace lexind::bench

#endif  // LEXIND_BENCHMARKS_BENCH_COMMON_H_
