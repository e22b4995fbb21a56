#include "lexind/corpus.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <sstream>

#include "lexind/error.h"

namespace lexind {
namespace {

Corpus ReadCorpus(std::istream& in, const WordSet& stopwords, const std::string& tag,
                  const std::string& origin) {
  Corpus corpus;
  corpus.language_tag = tag;
  Document current;
  auto flush = [&] {
    if (!current.sentences.empty()) corpus.documents.push_back(std::move(current));
    current = Document{};
  };
  std::string line;
  while (std::getline(in, line)) {
    auto view = StripLineEnd(line);
    auto tokens = SplitWords(view);
    if (tokens.empty()) {
      flush();
      continue;
    }
    Sentence sentence;
    for (auto tok : tokens) {
      std::string token(tok);
      if (stopwords.count(token) || !HasLetter(token)) continue;
      sentence.push_back(std::move(token));
    }
    corpus.token_count += sentence.size();
    // A sentence emptied by filtering still separates its neighbours.
    current.sentences.push_back(std::move(sentence));
  }
  if (in.bad()) throw IoError("read failed: " + origin);
  flush();
  if (corpus.token_count == 0) throw DataError("empty corpus: " + origin);
  return corpus;
}

}  // namespace

Vocabulary::Vocabulary(std::vector<std::pair<std::string, std::uint64_t>> counted) {
  std::sort(counted.begin(), counted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  words_.reserve(counted.size());
  counts_.reserve(counted.size());
  for (auto& [word, count] : counted) {
    index_.emplace(word, words_.size());
    words_.push_back(std::move(word));
    counts_.push_back(count);
  }
}

std::int64_t Vocabulary::index(const std::string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? -1 : static_cast<std::int64_t>(it->second);
}

std::uint64_t Vocabulary::frequency(const std::string& word) const {
  auto it = index_.find(word);
  return it == index_.end() ? 0 : counts_[it->second];
}

std::uint64_t Vocabulary::total_frequency() const {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Corpus LoadCorpus(const std::string& path, const WordSet& stopwords,
                  const std::string& language_tag) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus: " + path);
  return ReadCorpus(in, stopwords, language_tag, path);
}

Corpus ParseCorpus(const std::string& text, const WordSet& stopwords,
                   const std::string& language_tag) {
  std::istringstream in(text);
  return ReadCorpus(in, stopwords, language_tag, "<memory>");
}

FrequencyTable CountWords(const Corpus& corpus) {
  FrequencyTable counts;
  for (const auto& doc : corpus.documents)
    for (const auto& sentence : doc.sentences)
      for (const auto& token : sentence) ++counts[token];
  return counts;
}

Vocabulary BuildVocabulary(const Corpus& corpus, std::uint64_t min_frequency) {
  std::vector<std::pair<std::string, std::uint64_t>> kept;
  for (auto& [word, count] : CountWords(corpus)) {
    if (count >= min_frequency) kept.emplace_back(word, count);
  }
  if (kept.empty()) {
    throw DataError("empty vocabulary: no word reaches frequency " +
                    std::to_string(min_frequency));
  }
  return Vocabulary(std::move(kept));
}

}  // namespace lexind
