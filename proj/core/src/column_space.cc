#include "lexind/column_space.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "lexind/error.h"

namespace lexind {
namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ull;
constexpr std::uint64_t kFnvPrime = 1099511628211ull;

void Mix(std::uint64_t& h, std::string_view bytes) {
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  h ^= 0xFF;  // field separator
  h *= kFnvPrime;
}

ColumnSpacePtr MakeSideSpace(const CombinedDictionary& dict, WindowMode mode, int window,
                             bool source_side) {
  if (dict.empty()) throw ConfigError("empty seed dictionary");
  const bool partitioned = dict.mode() == CombinationMode::kIndependent;
  std::set<std::pair<std::string, int>> keys;
  for (const auto& e : dict.entries()) {
    keys.emplace(source_side ? e.source : e.target,
                 partitioned ? dict.member_index(e.origin) : -1);
  }
  std::vector<ColumnSpace::Seed> seeds;
  seeds.reserve(keys.size());
  for (const auto& [word, origin] : keys) seeds.push_back({word, origin});
  return std::make_shared<const ColumnSpace>(
      std::move(seeds), partitioned ? dict.member_ids() : std::vector<std::string>{}, mode,
      window);
}

}  // namespace

const char* ToString(WindowMode mode) {
  return mode == WindowMode::kUnordered ? "unordered" : "ordered";
}

WindowMode ParseWindowMode(const std::string& text) {
  if (text == "unordered") return WindowMode::kUnordered;
  if (text == "ordered") return WindowMode::kOrdered;
  throw ConfigError("unknown window mode: " + text);
}

ColumnSpace::ColumnSpace(std::vector<Seed> seeds, std::vector<std::string> origins,
                         WindowMode mode, int window)
    : seeds_(std::move(seeds)), origins_(std::move(origins)), mode_(mode), window_(window) {
  if (window_ < 1) throw ConfigError("window size must be at least 1");
  if (seeds_.empty()) throw ConfigError("empty seed list");
  size_ = seeds_.size() * slots();
  std::set<std::pair<std::string, int>> seen;
  std::uint64_t h = kFnvOffset;
  Mix(h, ToString(mode_));
  Mix(h, std::to_string(window_));
  for (const auto& o : origins_) Mix(h, o);
  for (std::size_t j = 0; j < seeds_.size(); ++j) {
    const auto& s = seeds_[j];
    if (s.origin >= static_cast<int>(origins_.size()) || (s.origin < 0) != origins_.empty()) {
      throw ConfigError("seed origin out of range: " + s.word);
    }
    if (!seen.emplace(s.word, s.origin).second) throw ConfigError("duplicate seed: " + s.word);
    by_word_[s.word].push_back(static_cast<std::uint32_t>(j));
    Mix(h, s.word);
    Mix(h, std::to_string(s.origin));
  }
  id_ = h;
}

std::size_t ColumnSpace::column(std::size_t seed, int offset) const {
  if (mode_ == WindowMode::kUnordered) return seed;
  const std::size_t slot = offset < 0 ? static_cast<std::size_t>(offset + window_)
                                      : static_cast<std::size_t>(window_ + offset - 1);
  return seed * slots() + slot;
}

int ColumnSpace::offset_of(std::size_t col) const {
  if (mode_ == WindowMode::kUnordered) return 0;
  const int slot = static_cast<int>(col % slots());
  return slot < window_ ? slot - window_ : slot - window_ + 1;
}

std::string ColumnSpace::key(std::size_t col) const {
  const auto& s = seeds_[seed_of(col)];
  std::string out = s.word;
  if (s.origin >= 0) out += "#" + origins_[s.origin];
  if (mode_ == WindowMode::kOrdered) {
    const int off = offset_of(col);
    out += off > 0 ? "@+" : "@-";
    out += std::to_string(off > 0 ? off : -off);
  }
  return out;
}

std::optional<std::size_t> ColumnSpace::find(std::string_view key) const {
  int offset = 0;
  if (mode_ == WindowMode::kOrdered) {
    auto at = key.rfind('@');
    if (at == std::string_view::npos || at + 2 > key.size()) return std::nullopt;
    auto num = key.substr(at + 1);
    const char sign = num.front();
    if (sign != '+' && sign != '-') return std::nullopt;
    auto [ptr, ec] = std::from_chars(num.data() + 1, num.data() + num.size(), offset);
    if (ec != std::errc() || ptr != num.data() + num.size()) return std::nullopt;
    if (offset < 1 || offset > window_) return std::nullopt;
    if (sign == '-') offset = -offset;
    key = key.substr(0, at);
  }
  int origin = -1;
  if (partitioned()) {
    auto hash = key.rfind('#');
    if (hash == std::string_view::npos) return std::nullopt;
    auto id = key.substr(hash + 1);
    auto it = std::find(origins_.begin(), origins_.end(), id);
    if (it == origins_.end()) return std::nullopt;
    origin = static_cast<int>(it - origins_.begin());
    key = key.substr(0, hash);
  }
  auto it = by_word_.find(std::string(key));
  if (it == by_word_.end()) return std::nullopt;
  for (auto j : it->second) {
    if (seeds_[j].origin == origin) return column(j, offset);
  }
  return std::nullopt;
}

const std::vector<std::uint32_t>& ColumnSpace::seeds_for(const std::string& word) const {
  static const std::vector<std::uint32_t> kNone;
  auto it = by_word_.find(word);
  return it == by_word_.end() ? kNone : it->second;
}

ColumnSpacePtr MakeSeedSpace(const std::vector<std::string>& words, WindowMode mode, int window) {
  std::vector<ColumnSpace::Seed> seeds;
  seeds.reserve(words.size());
  for (const auto& w : words) seeds.push_back({w, -1});
  return std::make_shared<const ColumnSpace>(std::move(seeds), std::vector<std::string>{}, mode,
                                             window);
}

ColumnSpacePtr MakeSourceSpace(const CombinedDictionary& dict, WindowMode mode, int window) {
  return MakeSideSpace(dict, mode, window, true);
}

ColumnSpacePtr MakeTargetSpace(const CombinedDictionary& dict, WindowMode mode, int window) {
  return MakeSideSpace(dict, mode, window, false);
}

}  // namespace lexind
