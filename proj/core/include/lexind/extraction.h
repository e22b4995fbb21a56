#ifndef LEXIND_EXTRACTION_H_
#define LEXIND_EXTRACTION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexind/column_space.h"
#include "lexind/cooccurrence.h"
#include "lexind/dictionary.h"
#include "lexind/similarity.h"

namespace lexind {

// Maps source-space columns onto target-space columns through a seed
// dictionary. Position offsets are preserved; source columns that land on
// the same target column are summed in source-column order.
class VectorTransfer {
 public:
  VectorTransfer(const CombinedDictionary& dict, ColumnSpacePtr source, ColumnSpacePtr target);

  const ColumnSpacePtr& source() const { return source_; }
  const ColumnSpacePtr& target() const { return target_; }

  ContextVector Apply(std::span<const Cell> source_cells) const;
  // ConfigError unless `v` lives in source().
  ContextVector Apply(const ContextVector& v) const;

 private:
  ColumnSpacePtr source_;
  ColumnSpacePtr target_;
  std::vector<std::uint32_t> seed_map_;  // source seed -> target seed
};

// One-off transfer; the target space is derived from `dict` with v's mode
// and window.
ContextVector TransferVector(const ContextVector& v, const CombinedDictionary& dict);
ContextVector TransferVector(const ContextVector& v, const SeedDictionary& dict);

struct Candidate {
  std::string target;
  double score;

  bool operator==(const Candidate&) const = default;
};

struct RankedCandidates {
  std::string source_word;
  std::vector<Candidate> candidates;  // best first; ties in byte order of target
};

struct RankedLexicon {
  std::vector<RankedCandidates> entries;
  std::string config_fingerprint;

  const RankedCandidates* find(const std::string& source_word) const;
};

// Scores transferred vectors against every row of a target matrix. Builds a
// column -> rows index once so that, for every metric except cityblock,
// only rows sharing a column with the query are scored (the rest score 0).
class CandidateRanker {
 public:
  // `weights` is required for kNewDiceMin and ignored otherwise.
  CandidateRanker(const CoocMatrix& target, Metric metric, const WeightSet* weights = nullptr);

  Metric metric() const { return metric_; }

  // ConfigError when `tv` is not in the target matrix's space or top_k is 0.
  RankedCandidates Rank(const std::string& source_word, const ContextVector& tv,
                        std::size_t top_k) const;
  // As Rank, for cells already known to be in the target space.
  RankedCandidates RankCells(const std::string& source_word, std::span<const Cell> cells,
                             std::size_t top_k) const;

 private:

  const CoocMatrix& target_;
  Metric metric_;
  std::vector<VectorStats> row_stats_;
  OriginWeights origin_weights_;
  std::vector<std::size_t> postings_offsets_;
  std::vector<std::uint32_t> postings_;
};

RankedCandidates RankCandidates(const ContextVector& tv, const CoocMatrix& target, Metric metric,
                                const WeightSet* weights, std::size_t top_k,
                                const std::string& source_word = {});

// For every source row: transfer through `dict`, rank all target rows, keep
// the top_k. Both matrices must share mode, window, measure and
// normalization and be built over the dictionary's source and target
// spaces. Output does not depend on `threads`.
RankedLexicon ExtractLexicon(const CoocMatrix& source, const CoocMatrix& target,
                             const CombinedDictionary& dict, Metric metric,
                             const WeightSet* weights, std::size_t top_k, unsigned threads = 1);

// `source<TAB>rank<TAB>target<TAB>score`, preceded by `# <fingerprint>`.
void WriteLexicon(const RankedLexicon& lexicon, const std::string& path);
RankedLexicon LoadLexicon(const std::string& path);

}  // namespace lexind

#endif  // LEXIND_EXTRACTION_H_
