#include "lexind/pipeline_config.h"

#include <charconv>
#include <fstream>
#include <set>

#include "lexind/error.h"
#include "lexind/text.h"

namespace lexind::cli {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::pair<std::string, std::string> ParseIdPath(const std::string& text) {
  auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw ConfigError("expected ID=PATH, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

std::map<std::string, double> ParseIdValues(const std::string& text) {
  std::map<std::string, double> out;
  for (auto item : SplitWords(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("expected ID=value in '" + text + "'");
    auto id = Trim(item.substr(0, eq));
    auto num = Trim(item.substr(eq + 1));
    double v = 0;
    auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), v);
    if (id.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
      throw ConfigError("bad ID=value item '" + std::string(item) + "'");
    }
    if (!out.emplace(std::string(id), v).second) {
      throw ConfigError("repeated id '" + std::string(id) + "'");
    }
  }
  if (out.empty()) throw ConfigError("empty ID=value list");
  return out;
}

std::vector<std::size_t> ParseKs(const std::string& text) {
  std::vector<std::size_t> ks;
  for (auto item : SplitWords(text, ',')) {
    item = Trim(item);
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), k);
    if (ec != std::errc() || ptr != item.data() + item.size() || k == 0) {
      throw ConfigError("bad k value '" + std::string(item) + "'");
    }
    ks.push_back(k);
  }
  if (ks.empty()) throw ConfigError("no k values given");
  return ks;
}

std::optional<WeightSet> ResolveWeights(const std::string& source,
                                        const std::map<std::string, double>& accuracies,
                                        const CombinedDictionary& dict) {
  if (source == "unit") return UnitWeights(dict);
  if (source == "accuracy") return WeightsByAccuracy(accuracies);
  if (source == "accuracy_size") {
    std::map<std::string, std::uint64_t> sizes;
    for (const auto& e : dict.entries()) ++sizes[e.origin];
    return WeightsByAccuracyAndSize(accuracies, sizes);
  }
  return ParseIdValues(source);
}

std::vector<std::string> ExpandConfigFile(const std::string& path,
                                          const std::vector<std::string>& given) {
  std::set<std::string> on_command_line;
  for (const auto& arg : given) {
    if (!arg.starts_with("--")) continue;
    on_command_line.insert(arg.substr(2, arg.find('=') == std::string::npos
                                             ? std::string::npos
                                             : arg.find('=') - 2));
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  std::vector<std::string> args;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = Trim(StripLineEnd(line));
    if (view.empty() || view.front() == '#') continue;
    auto eq = view.find('=');
    if (eq == std::string_view::npos) throw ParseError(path, line_no, "expected key=value");
    auto key = std::string(Trim(view.substr(0, eq)));
    auto value = std::string(Trim(view.substr(eq + 1)));
    if (key.empty() || key == "config") throw ParseError(path, line_no, "bad key");
    if (on_command_line.count(key)) continue;
    args.push_back("--" + key + "=" + value);
  }
  if (in.bad()) throw IoError("read failed: " + path);
  return args;
}

}  // namespace lexind::cli
