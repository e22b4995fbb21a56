#ifndef LEXIND_COLUMN_SPACE_H_
#define LEXIND_COLUMN_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexind/dictionary.h"

namespace lexind {

enum class WindowMode { kUnordered, kOrdered };

const char* ToString(WindowMode mode);
WindowMode ParseWindowMode(const std::string& text);

// The column layout shared by a co-occurrence matrix and every context
// vector drawn from it.
//
// A space has n seed columns. In unordered mode column j is seed j. In
// ordered mode each seed expands to 2k columns, one per signed offset
// -k..-1, +1..+k, laid out seed-major: column = seed * 2k + slot.
//
// Seeds may carry an origin dictionary (independent combination); then the
// same word can back several seeds, one per origin.
class ColumnSpace {
 public:
  struct Seed {
    std::string word;
    int origin = -1;  // index into origins(), -1 when unpartitioned
  };

  ColumnSpace(std::vector<Seed> seeds, std::vector<std::string> origins, WindowMode mode,
              int window);

  WindowMode mode() const { return mode_; }
  int window() const { return window_; }
  std::size_t seed_count() const { return seeds_.size(); }
  std::size_t size() const { return size_; }
  bool partitioned() const { return !origins_.empty(); }
  const std::vector<std::string>& origins() const { return origins_; }
  const Seed& seed(std::size_t j) const { return seeds_[j]; }

  // Offsets per seed: 1 unordered, 2k ordered.
  std::size_t slots() const { return mode_ == WindowMode::kOrdered ? 2 * window_ : 1; }
  // `offset` is ignored (must be 0) in unordered mode.
  std::size_t column(std::size_t seed, int offset) const;
  std::size_t seed_of(std::size_t col) const { return col / slots(); }
  int offset_of(std::size_t col) const;
  int origin_of(std::size_t col) const { return seeds_[seed_of(col)].origin; }

  // `word[#origin][@+p|@-p]`
  std::string key(std::size_t col) const;
  std::optional<std::size_t> find(std::string_view key) const;

  // Seeds backed by `word`; empty when the word is not a seed.
  const std::vector<std::uint32_t>& seeds_for(const std::string& word) const;

  // Fingerprint of the full layout; equal ids mean identical spaces.
  std::uint64_t id() const { return id_; }

 private:
  std::vector<Seed> seeds_;
  std::vector<std::string> origins_;
  WindowMode mode_;
  int window_;
  std::size_t size_;
  std::uint64_t id_;
  std::unordered_map<std::string, std::vector<std::uint32_t>> by_word_;
};

using ColumnSpacePtr = std::shared_ptr<const ColumnSpace>;

// Plain seed words, in the given order; duplicates are a ConfigError.
ColumnSpacePtr MakeSeedSpace(const std::vector<std::string>& words, WindowMode mode, int window);

// Source side of a dictionary: unique source words in byte order, or
// (source, origin) pairs for independent combinations.
ColumnSpacePtr MakeSourceSpace(const CombinedDictionary& dict, WindowMode mode, int window);

// Target side: unique target words (collisions share a column), or
// (target, origin) pairs for independent combinations.
ColumnSpacePtr MakeTargetSpace(const CombinedDictionary& dict, WindowMode mode, int window);

}  // namespace lexind

#endif  // LEXIND_COLUMN_SPACE_H_
