#ifndef LEXIND_PIVOT_H_
#define LEXIND_PIVOT_H_

#include <cstddef>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexind/dictionary.h"
#include "lexind/text.h"

namespace lexind {

// One side of a pivot dictionary pair: headword -> set of pivot-language
// words describing it (stop words and non-letters removed). Descriptions
// are sorted and duplicate-free.
class PivotDictionarySide {
 public:
  PivotDictionarySide() = default;
  // Cleans each description and drops headwords left with nothing.
  PivotDictionarySide(const std::map<std::string, std::vector<std::string>>& raw,
                      const WordSet& stopwords);

  const std::map<std::string, std::vector<std::string>>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Number of descriptions containing `word` (presence, not multiplicity).
  std::size_t document_frequency(const std::string& word) const;

 private:
  std::map<std::string, std::vector<std::string>> entries_;
  std::unordered_map<std::string, std::size_t> doc_freq_;
};

enum class PivotOrientation {
  kHeadwordFirst,  // headword<TAB>pivot words
  kPivotFirst,     // pivot word<TAB>headwords; inverted on load
};

// Lines for a repeated headword are merged. Throws IoError, ParseError,
// DataError (nothing left after cleaning).
PivotDictionarySide LoadPivotSide(const std::string& path, const WordSet& stopwords,
                                  PivotOrientation orientation);

// ln((|Pr| + |It|) / (Pr_w + It_w)); DomainError when w occurs on neither side.
double PivotIdf(const PivotDictionarySide& src, const PivotDictionarySide& tgt,
                const std::string& word);

using IdfTable = std::unordered_map<std::string, double>;

IdfTable ComputeIdf(const PivotDictionarySide& src, const PivotDictionarySide& tgt);

// idf-weighted Dice overlap of two description sets; 0 when both idf sums
// are zero. Arguments must be sorted and duplicate-free.
double PivotScore(const std::vector<std::string>& src_desc,
                  const std::vector<std::string>& tgt_desc, const IdfTable& idf);

struct PivotCandidate {
  std::string source;
  std::string target;
  double score;
};

// Best target per source headword (ties: smaller target), then the global
// top_n by score (ties: smaller source). Candidate pairs are found through
// an inverted index over pivot words. Throws DataError if no pair shares a
// pivot word, ConfigError if top_n is 0.
std::vector<PivotCandidate> RankPivotCandidates(const PivotDictionarySide& src,
                                                const PivotDictionarySide& tgt,
                                                std::size_t top_n, unsigned threads = 1);

SeedDictionary BuildPivotDictionary(const PivotDictionarySide& src,
                                    const PivotDictionarySide& tgt, std::size_t top_n,
                                    const std::string& dict_id = "DicPi",
                                    unsigned threads = 1);

}  // namespace lexind

#endif  // LEXIND_PIVOT_H_
