#include "lexind/dictionary.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <unordered_set>

#include "lexind/error.h"
#include "lexind/text.h"

namespace lexind {
namespace {

std::ifstream OpenInput(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) throw IoError(std::string("cannot open ") + what + ": " + path);
  return in;
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  return out;
}

void RequireDistinctIds(const std::vector<SeedDictionary>& dicts) {
  if (dicts.size() < 2) throw ConfigError("combination needs at least two dictionaries");
  std::set<std::string> seen;
  for (const auto& d : dicts) {
    if (!seen.insert(d.id()).second) throw ConfigError("duplicate dictionary id: " + d.id());
  }
}

std::vector<std::string> MemberIds(const std::vector<SeedDictionary>& dicts) {
  std::vector<std::string> ids;
  for (const auto& d : dicts) ids.push_back(d.id());
  return ids;
}

}  // namespace

SeedDictionary::SeedDictionary(std::string dict_id, const std::vector<SeedEntry>& entries)
    : id_(std::move(dict_id)) {
  for (const auto& e : entries) {
    if (by_source_.emplace(e.source, entries_.size()).second) entries_.push_back(e);
  }
}

const std::string* SeedDictionary::find(const std::string& source) const {
  auto it = by_source_.find(source);
  return it == by_source_.end() ? nullptr : &entries_[it->second].target;
}

const char* ToString(CombinationMode mode) {
  return mode == CombinationMode::kSimple ? "simple" : "independent";
}

CombinationMode ParseCombinationMode(const std::string& text) {
  if (text == "simple") return CombinationMode::kSimple;
  if (text == "independent") return CombinationMode::kIndependent;
  throw ConfigError("unknown combination mode: " + text);
}

CombinedDictionary::CombinedDictionary(CombinationMode mode, std::vector<std::string> member_ids,
                                       std::vector<CombinedEntry> entries)
    : mode_(mode), member_ids_(std::move(member_ids)), entries_(std::move(entries)) {
  std::set<std::string> members(member_ids_.begin(), member_ids_.end());
  if (members.size() != member_ids_.size()) throw ConfigError("duplicate member id");
  std::set<std::pair<std::string, std::string>> keys;
  for (const auto& e : entries_) {
    if (!members.count(e.origin)) throw ConfigError("entry origin not a member: " + e.origin);
    auto key = mode_ == CombinationMode::kSimple ? std::make_pair(e.source, std::string())
                                                 : std::make_pair(e.source, e.origin);
    if (!keys.insert(key).second) {
      throw ConfigError(std::string("duplicate source word in ") + ToString(mode_) +
                        " combination: " + e.source);
    }
  }
}

CombinedDictionary CombinedDictionary::FromSingle(const SeedDictionary& dict) {
  std::vector<CombinedEntry> entries;
  entries.reserve(dict.size());
  for (const auto& e : dict.entries()) entries.push_back({e.source, e.target, dict.id()});
  return CombinedDictionary(CombinationMode::kSimple, {dict.id()}, std::move(entries));
}

int CombinedDictionary::member_index(const std::string& id) const {
  auto it = std::find(member_ids_.begin(), member_ids_.end(), id);
  return it == member_ids_.end() ? -1 : static_cast<int>(it - member_ids_.begin());
}

SeedDictionary LoadDictionary(const std::string& path, const std::string& dict_id) {
  auto in = OpenInput(path, "dictionary");
  std::vector<SeedEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = SplitFields(view);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(path, line_no, "expected source<TAB>target");
    }
    entries.push_back({std::string(fields[0]), std::string(fields[1])});
  }
  if (in.bad()) throw IoError("read failed: " + path);
  SeedDictionary dict(dict_id, entries);
  if (dict.empty()) throw DataError("empty dictionary: " + path);
  return dict;
}

SeedDictionary IngestTranslationTable(const std::string& path, std::size_t top_n,
                                      const std::string& dict_id) {
  if (top_n == 0) throw ConfigError("top_n must be at least 1");
  auto in = OpenInput(path, "translation table");
  struct Best {
    std::string target;
    double probability;
  };
  std::unordered_map<std::string, Best> best;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = SplitFields(view);
    if (fields.size() != 3 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(path, line_no, "expected source<TAB>target<TAB>probability");
    }
    double p = 0;
    auto text = fields[2];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(p)) {
      throw ParseError(path, line_no, "non-numeric probability '" + std::string(text) + "'");
    }
    if (p < 0.0 || p > 1.0) {
      throw ParseError(path, line_no, "probability out of [0,1]: " + std::string(text));
    }
    auto [it, inserted] = best.try_emplace(std::string(fields[0]), Best{std::string(fields[1]), p});
    if (!inserted && p > it->second.probability) it->second = Best{std::string(fields[1]), p};
  }
  if (in.bad()) throw IoError("read failed: " + path);
  if (best.empty()) throw DataError("empty translation table: " + path);

  std::vector<std::pair<const std::string*, const Best*>> ranked;
  ranked.reserve(best.size());
  for (const auto& [src, b] : best) ranked.emplace_back(&src, &b);
  std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
    if (a.second->probability != b.second->probability)
      return a.second->probability > b.second->probability;
    return *a.first < *b.first;
  });
  if (ranked.size() > top_n) ranked.resize(top_n);
  std::vector<SeedEntry> entries;
  entries.reserve(ranked.size());
  for (const auto& [src, b] : ranked) entries.push_back({*src, b->target});
  return SeedDictionary(dict_id, entries);
}

CombinedDictionary CombineSimple(const std::vector<SeedDictionary>& dicts) {
  RequireDistinctIds(dicts);
  std::unordered_set<std::string> taken;
  std::vector<CombinedEntry> entries;
  for (const auto& d : dicts) {
    for (const auto& e : d.entries()) {
      if (taken.insert(e.source).second) entries.push_back({e.source, e.target, d.id()});
    }
  }
  return CombinedDictionary(CombinationMode::kSimple, MemberIds(dicts), std::move(entries));
}

CombinedDictionary CombineIndependent(const std::vector<SeedDictionary>& dicts) {
  RequireDistinctIds(dicts);
  std::vector<CombinedEntry> entries;
  for (const auto& d : dicts) {
    for (const auto& e : d.entries()) entries.push_back({e.source, e.target, d.id()});
  }
  return CombinedDictionary(CombinationMode::kIndependent, MemberIds(dicts), std::move(entries));
}

WeightSet WeightsByAccuracy(const std::map<std::string, double>& accuracies) {
  if (accuracies.empty()) throw ConfigError("no accuracies given");
  WeightSet weights;
  for (const auto& [id, acc] : accuracies) {
    if (!(acc > 0.0 && acc <= 1.0)) {
      throw DomainError("accuracy of " + id + " must be in (0,1], got " + FormatDouble(acc));
    }
    weights[id] = acc;
  }
  return weights;
}

WeightSet WeightsByAccuracyAndSize(const std::map<std::string, double>& accuracies,
                                   const std::map<std::string, std::uint64_t>& sizes) {
  if (accuracies.empty() || sizes.empty()) throw ConfigError("no accuracies or sizes given");
  auto weights = WeightsByAccuracy(accuracies);
  std::uint64_t max_size = 0;
  for (const auto& [id, size] : sizes) {
    if (size == 0) throw DomainError("size of " + id + " must be at least 1");
    max_size = std::max(max_size, size);
  }
  for (auto& [id, w] : weights) {
    auto it = sizes.find(id);
    if (it == sizes.end()) throw ConfigError("no size for dictionary " + id);
    w = w * static_cast<double>(max_size) / static_cast<double>(it->second);
  }
  return weights;
}

WeightSet UnitWeights(const CombinedDictionary& dict) {
  WeightSet weights;
  for (const auto& id : dict.member_ids()) weights[id] = 1.0;
  return weights;
}

void WriteDictionary(const SeedDictionary& dict, const std::string& path) {
  auto out = OpenOutput(path);
  for (const auto& e : dict.entries()) out << e.source << '\t' << e.target << '\n';
  if (!out) throw IoError("write failed: " + path);
}

void WriteCombined(const CombinedDictionary& dict, const std::string& path) {
  auto out = OpenOutput(path);
  out << "#mode=" << ToString(dict.mode()) << " members=";
  for (std::size_t i = 0; i < dict.member_ids().size(); ++i) {
    out << (i ? "," : "") << dict.member_ids()[i];
  }
  out << '\n';
  for (const auto& e : dict.entries()) {
    out << e.source << '\t' << e.target << '\t' << e.origin << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

CombinedDictionary LoadSeedColumns(const std::string& path, const std::string& fallback_id) {
  auto in = OpenInput(path, "dictionary");
  std::optional<CombinationMode> mode;
  std::vector<std::string> members;
  std::vector<CombinedEntry> entries;
  std::vector<SeedEntry> plain;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      for (auto field : SplitWords(view.substr(1))) {
        if (field.starts_with("mode=")) {
          mode = ParseCombinationMode(std::string(field.substr(5)));
        } else if (field.starts_with("members=")) {
          for (auto id : SplitWords(field.substr(8), ',')) members.emplace_back(id);
        }
      }
      continue;
    }
    auto fields = SplitFields(view);
    if (fields.size() < 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(path, line_no, "expected source<TAB>target[<TAB>origin]");
    }
    if (mode.has_value()) {
      if (fields.size() != 3 || fields[2].empty()) {
        throw ParseError(path, line_no, "expected source<TAB>target<TAB>origin");
      }
      entries.push_back({std::string(fields[0]), std::string(fields[1]), std::string(fields[2])});
    } else {
      plain.push_back({std::string(fields[0]), std::string(fields[1])});
    }
  }
  if (in.bad()) throw IoError("read failed: " + path);
  if (mode.has_value()) {
    if (entries.empty()) throw DataError("empty dictionary: " + path);
    return CombinedDictionary(*mode, std::move(members), std::move(entries));
  }
  SeedDictionary dict(fallback_id, plain);
  if (dict.empty()) throw DataError("empty dictionary: " + path);
  return CombinedDictionary::FromSingle(dict);
}

}  // namespace lexind
