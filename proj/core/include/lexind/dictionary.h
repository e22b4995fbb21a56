#ifndef LEXIND_DICTIONARY_H_
#define LEXIND_DICTIONARY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace lexind {

struct SeedEntry {
  std::string source;
  std::string target;

  bool operator==(const SeedEntry&) const = default;
};

// Single-translation seed dictionary: every source word appears once.
class SeedDictionary {
 public:
  SeedDictionary() = default;
  // Keeps the first entry for each source word.
  SeedDictionary(std::string dict_id, const std::vector<SeedEntry>& entries);

  const std::string& id() const { return id_; }
  const std::vector<SeedEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::string* find(const std::string& source) const;

  std::optional<double> accuracy;

 private:
  std::string id_;
  std::vector<SeedEntry> entries_;
  std::unordered_map<std::string, std::size_t> by_source_;
};

enum class CombinationMode { kSimple, kIndependent };

const char* ToString(CombinationMode mode);
CombinationMode ParseCombinationMode(const std::string& text);

struct CombinedEntry {
  std::string source;
  std::string target;
  std::string origin;

  bool operator==(const CombinedEntry&) const = default;
};

// Seed entries tagged with the dictionary they came from. In simple mode
// source words are unique; in independent mode (source, origin) is unique.
class CombinedDictionary {
 public:
  CombinedDictionary() = default;
  // Validates the mode invariant; throws ConfigError. Every origin must be
  // listed in member_ids.
  CombinedDictionary(CombinationMode mode, std::vector<std::string> member_ids,
                     std::vector<CombinedEntry> entries);

  // A lone seed dictionary viewed as a one-member simple combination.
  static CombinedDictionary FromSingle(const SeedDictionary& dict);

  CombinationMode mode() const { return mode_; }
  const std::vector<std::string>& member_ids() const { return member_ids_; }
  const std::vector<CombinedEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  // Position of `id` in member_ids, or -1.
  int member_index(const std::string& id) const;

 private:
  CombinationMode mode_ = CombinationMode::kSimple;
  std::vector<std::string> member_ids_;
  std::vector<CombinedEntry> entries_;
};

// origin dictionary id -> weight
using WeightSet = std::map<std::string, double>;

// `source<TAB>target1[<TAB>target2...]`; keeps the first target of the first
// line for each headword. Throws IoError, ParseError, DataError (empty).
SeedDictionary LoadDictionary(const std::string& path, const std::string& dict_id);

// `source<TAB>target<TAB>probability`: best target per source (first wins
// ties), then the top_n by probability, ties by source word.
SeedDictionary IngestTranslationTable(const std::string& path, std::size_t top_n,
                                      const std::string& dict_id = "DicPa");

// Priority order: earlier dictionaries win conflicts.
CombinedDictionary CombineSimple(const std::vector<SeedDictionary>& dicts);
CombinedDictionary CombineIndependent(const std::vector<SeedDictionary>& dicts);

WeightSet WeightsByAccuracy(const std::map<std::string, double>& accuracies);
// w_j = accuracy_j * MaxSize / size_j
WeightSet WeightsByAccuracyAndSize(const std::map<std::string, double>& accuracies,
                                   const std::map<std::string, std::uint64_t>& sizes);
WeightSet UnitWeights(const CombinedDictionary& dict);

void WriteDictionary(const SeedDictionary& dict, const std::string& path);

// `source<TAB>target<TAB>origin` preceded by a `#mode=... members=...` line.
void WriteCombined(const CombinedDictionary& dict, const std::string& path);

// Reads a combined TSV (recognized by its `#mode=` header) or a plain seed
// dictionary, which becomes a one-member simple combination named
// `fallback_id`.
CombinedDictionary LoadSeedColumns(const std::string& path,
                                   const std::string& fallback_id = "seed");

}  // namespace lexind

#endif  // LEXIND_DICTIONARY_H_
