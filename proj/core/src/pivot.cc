#include "lexind/pivot.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>

#include "lexind/error.h"
#include "lexind/parallel.h"

namespace lexind {
namespace {

double IdfSum(const std::vector<std::string>& desc, const IdfTable& idf) {
  double sum = 0.0;
  for (const auto& w : desc) {
    auto it = idf.find(w);
    if (it == idf.end()) throw DomainError("no idf for pivot word: " + w);
    sum += it->second;
  }
  return sum;
}

double IntersectionIdf(const std::vector<std::string>& a, const std::vector<std::string>& b,
                       const IdfTable& idf) {
  double sum = 0.0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      sum += idf.at(*ia);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

double DiceFromSums(double shared, double src_sum, double tgt_sum) {
  const double denom = src_sum + tgt_sum;
  return denom > 0.0 ? 2.0 * shared / denom : 0.0;
}

}  // namespace

PivotDictionarySide::PivotDictionarySide(
    const std::map<std::string, std::vector<std::string>>& raw, const WordSet& stopwords) {
  for (const auto& [head, words] : raw) {
    std::vector<std::string> clean;
    for (const auto& w : words) {
      if (stopwords.count(w)) continue;
      auto letters = KeepLetters(w);
      if (letters.empty() || stopwords.count(letters)) continue;
      clean.push_back(std::move(letters));
    }
    std::sort(clean.begin(), clean.end());
    clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
    if (clean.empty()) continue;
    for (const auto& w : clean) ++doc_freq_[w];
    entries_.emplace(head, std::move(clean));
  }
}

std::size_t PivotDictionarySide::document_frequency(const std::string& word) const {
  auto it = doc_freq_.find(word);
  return it == doc_freq_.end() ? 0 : it->second;
}

PivotDictionarySide LoadPivotSide(const std::string& path, const WordSet& stopwords,
                                  PivotOrientation orientation) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open pivot dictionary: " + path);
  std::map<std::string, std::vector<std::string>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = SplitFields(view);
    if (fields.size() != 2 || fields[0].empty()) {
      throw ParseError(path, line_no, "expected headword<TAB>description");
    }
    auto words = SplitWords(fields[1]);
    if (orientation == PivotOrientation::kHeadwordFirst) {
      auto& desc = raw[std::string(fields[0])];
      for (auto w : words) desc.emplace_back(w);
    } else {
      for (auto head : words) raw[std::string(head)].emplace_back(fields[0]);
    }
  }
  if (in.bad()) throw IoError("read failed: " + path);
  PivotDictionarySide side(raw, stopwords);
  if (side.empty()) throw DataError("empty pivot dictionary after cleaning: " + path);
  return side;
}

double PivotIdf(const PivotDictionarySide& src, const PivotDictionarySide& tgt,
                const std::string& word) {
  const auto df = src.document_frequency(word) + tgt.document_frequency(word);
  if (df == 0) throw DomainError("pivot word occurs in no description: " + word);
  return std::log(static_cast<double>(src.size() + tgt.size()) / static_cast<double>(df));
}

IdfTable ComputeIdf(const PivotDictionarySide& src, const PivotDictionarySide& tgt) {
  IdfTable idf;
  for (const auto* side : {&src, &tgt}) {
    for (const auto& [head, desc] : side->entries()) {
      for (const auto& w : desc) {
        if (!idf.count(w)) idf.emplace(w, PivotIdf(src, tgt, w));
      }
    }
  }
  return idf;
}

double PivotScore(const std::vector<std::string>& src_desc,
                  const std::vector<std::string>& tgt_desc, const IdfTable& idf) {
  return DiceFromSums(IntersectionIdf(src_desc, tgt_desc, idf), IdfSum(src_desc, idf),
                      IdfSum(tgt_desc, idf));
}

std::vector<PivotCandidate> RankPivotCandidates(const PivotDictionarySide& src,
                                                const PivotDictionarySide& tgt,
                                                std::size_t top_n, unsigned threads) {
  if (top_n == 0) throw ConfigError("top_n must be at least 1");
  if (src.empty() || tgt.empty()) throw DataError("empty pivot dictionary side");
  const auto idf = ComputeIdf(src, tgt);

  std::vector<const std::string*> tgt_heads;
  std::vector<const std::vector<std::string>*> tgt_descs;
  std::vector<double> tgt_sums;
  std::unordered_map<std::string, std::vector<std::size_t>> postings;
  for (const auto& [head, desc] : tgt.entries()) {
    for (const auto& w : desc) postings[w].push_back(tgt_heads.size());
    tgt_heads.push_back(&head);
    tgt_descs.push_back(&desc);
    tgt_sums.push_back(IdfSum(desc, idf));
  }
  std::vector<const std::pair<const std::string, std::vector<std::string>>*> src_entries;
  for (const auto& entry : src.entries()) src_entries.push_back(&entry);

  std::vector<std::optional<PivotCandidate>> best(src_entries.size());
  ParallelFor(src_entries.size(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
    std::vector<std::size_t> stamp(tgt_heads.size(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = begin; i < end; ++i) {
      const auto& [head, desc] = *src_entries[i];
      touched.clear();
      for (const auto& w : desc) {
        auto it = postings.find(w);
        if (it == postings.end()) continue;
        for (auto j : it->second) {
          if (stamp[j] != i + 1) {
            stamp[j] = i + 1;
            touched.push_back(j);
          }
        }
      }
      if (touched.empty()) continue;
      const double src_sum = IdfSum(desc, idf);
      std::optional<PivotCandidate> winner;
      for (auto j : touched) {
        const double score =
            DiceFromSums(IntersectionIdf(desc, *tgt_descs[j], idf), src_sum, tgt_sums[j]);
        if (!winner || score > winner->score ||
            (score == winner->score && *tgt_heads[j] < winner->target)) {
          winner = PivotCandidate{head, *tgt_heads[j], score};
        }
      }
      best[i] = std::move(winner);
    }
  });

  std::vector<PivotCandidate> ranked;
  for (auto& b : best) {
    if (b) ranked.push_back(std::move(*b));
  }
  if (ranked.empty()) throw DataError("no candidates: no headword pair shares a pivot word");
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.source < b.source;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);
  return ranked;
}

SeedDictionary BuildPivotDictionary(const PivotDictionarySide& src,
                                    const PivotDictionarySide& tgt, std::size_t top_n,
                                    const std::string& dict_id, unsigned threads) {
  std::vector<SeedEntry> entries;
  for (auto& c : RankPivotCandidates(src, tgt, top_n, threads)) {
    entries.push_back({std::move(c.source), std::move(c.target)});
  }
  return SeedDictionary(dict_id, entries);
}

}  // namespace lexind
