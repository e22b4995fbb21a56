#include "lexind/evaluation.h"

#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "lexind/error.h"
#include "lexind/text.h"

namespace lexind {

GoldSet LoadGold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open gold set: " + path);
  GoldSet gold;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty() || view.front() == '#') continue;
    auto fields = SplitFields(view);
    if (fields[0].empty()) throw ParseError(path, line_no, "empty source word");
    std::set<std::string> targets;
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (!fields[i].empty()) targets.emplace(fields[i]);
    }
    if (targets.empty()) throw ParseError(path, line_no, "no translation given");
    if (!gold.emplace(std::string(fields[0]), std::move(targets)).second) {
      throw ParseError(path, line_no, "duplicate source word " + std::string(fields[0]));
    }
  }
  if (in.bad()) throw IoError("read failed: " + path);
  return gold;
}

EvalReport Evaluate(const RankedLexicon& lexicon, const GoldSet& gold,
                    const std::vector<std::size_t>& ks) {
  if (gold.empty()) throw ConfigError("empty gold set");
  if (ks.empty()) throw ConfigError("no k values requested");
  for (auto k : ks) {
    if (k == 0) throw ConfigError("k must be at least 1");
  }
  std::unordered_map<std::string, const RankedCandidates*> by_source;
  for (const auto& e : lexicon.entries) by_source.emplace(e.source_word, &e);

  EvalReport report;
  report.n_test_words = gold.size();
  for (const auto& [word, accepted] : gold) {
    std::optional<std::size_t> rank;
    auto it = by_source.find(word);
    if (it != by_source.end()) {
      const auto& cands = it->second->candidates;
      for (std::size_t r = 0; r < cands.size(); ++r) {
        if (accepted.count(cands[r].target)) {
          rank = r + 1;
          break;
        }
      }
    }
    report.best_rank.emplace(word, rank);
  }
  for (auto k : ks) {
    std::size_t hits = 0;
    for (const auto& [word, rank] : report.best_rank) {
      if (rank && *rank <= k) ++hits;
    }
    report.top_k[k] = static_cast<double>(hits) / static_cast<double>(report.n_test_words);
  }
  return report;
}

std::string FormatSummary(const EvalReport& report) {
  std::string out;
  char buf[64];
  for (const auto& [k, value] : report.top_k) {
    std::snprintf(buf, sizeof(buf), "Top-%zu %.4f\n", k, value);
    out += buf;
  }
  return out;
}

void WriteReport(const EvalReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << "#n_test_words=" << report.n_test_words << '\n';
  char buf[32];
  for (const auto& [k, value] : report.top_k) {
    std::snprintf(buf, sizeof(buf), "%.6f", value);
    out << "top\t" << k << '\t' << buf << '\n';
  }
  for (const auto& [word, rank] : report.best_rank) {
    out << "word\t" << word << '\t';
    if (rank) {
      out << *rank;
    } else {
      out << '-';
    }
    out << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace lexind
