#ifndef LEXIND_CORPUS_H_
#define LEXIND_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexind/text.h"

namespace lexind {

using Sentence = std::vector<std::string>;

// Blank-line separated block of sentences.
struct Document {
  std::vector<Sentence> sentences;
};

// A pre-lemmatized monolingual corpus after stop-word and non-letter filtering.
// Co-occurrence windows never cross sentence boundaries.
struct Corpus {
  std::string language_tag;
  std::vector<Document> documents;
  std::uint64_t token_count = 0;
};

using FrequencyTable = std::unordered_map<std::string, std::uint64_t>;

// Candidate-word rows: descending frequency, ties in byte order.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::pair<std::string, std::uint64_t>> counted);

  const std::vector<std::string>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool contains(const std::string& word) const { return index_.count(word) != 0; }
  // Row position, or -1 when absent.
  std::int64_t index(const std::string& word) const;
  // Occurrence count, or 0 when absent.
  std::uint64_t frequency(const std::string& word) const;
  std::uint64_t total_frequency() const;

 private:
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Reads one sentence per line, space-separated tokens; blank lines end a
// document. Drops stop words and tokens without any letter.
// Throws IoError, or DataError when nothing survives filtering.
Corpus LoadCorpus(const std::string& path, const WordSet& stopwords,
                  const std::string& language_tag);

// Same filtering applied to in-memory text; used by tests and tools.
Corpus ParseCorpus(const std::string& text, const WordSet& stopwords,
                   const std::string& language_tag);

FrequencyTable CountWords(const Corpus& corpus);

// Words with frequency >= min_frequency. Throws DataError when empty.
Vocabulary BuildVocabulary(const Corpus& corpus, std::uint64_t min_frequency);

}  // namespace lexind

#endif  // LEXIND_CORPUS_H_
