#ifndef LEXIND_EVALUATION_H_
#define LEXIND_EVALUATION_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexind/extraction.h"

namespace lexind {

// source word -> acceptable translations (never empty)
using GoldSet = std::map<std::string, std::set<std::string>>;

// `source<TAB>target1[<TAB>target2...]`; blank lines skipped. A repeated
// source or a line without targets is a ParseError.
GoldSet LoadGold(const std::string& path);

struct EvalReport {
  std::map<std::size_t, double> top_k;  // k -> share of gold words hit within k
  // 1-based rank of the first acceptable translation, nullopt when none.
  std::map<std::string, std::optional<std::size_t>> best_rank;
  std::size_t n_test_words = 0;
};

// Gold words missing from the lexicon count as misses. ConfigError on an
// empty gold set, empty ks or k = 0.
EvalReport Evaluate(const RankedLexicon& lexicon, const GoldSet& gold,
                    const std::vector<std::size_t>& ks);

// "Top-1 0.2500" lines, one per k.
std::string FormatSummary(const EvalReport& report);

// `top<TAB>k<TAB>value` rows followed by `word<TAB>source<TAB>rank|-` rows.
void WriteReport(const EvalReport& report, const std::string& path);

}  // namespace lexind

#endif  // LEXIND_EVALUATION_H_
