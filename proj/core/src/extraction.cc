#include "lexind/extraction.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "lexind/error.h"
#include "lexind/exact_sum.h"
#include "lexind/parallel.h"
#include "lexind/text.h"

namespace lexind {
namespace {

std::string Fingerprint(const CoocMatrix& source, const CombinedDictionary& dict, Metric metric,
                        const WeightSet* weights, std::size_t top_k) {
  std::ostringstream out;
  out << "metric=" << ToString(metric) << " mode=" << ToString(source.mode())
      << " k=" << source.window() << " measure=" << ToString(source.measure())
      << " normalized=" << (source.normalized() ? 1 : 0)
      << " combination=" << ToString(dict.mode()) << " dictionaries=";
  for (std::size_t i = 0; i < dict.member_ids().size(); ++i) {
    out << (i ? "," : "") << dict.member_ids()[i];
  }
  out << " weights=";
  if (weights && metric == Metric::kNewDiceMin) {
    bool first = true;
    for (const auto& [id, w] : *weights) {
      out << (first ? "" : ",") << id << ':' << FormatDouble(w);
      first = false;
    }
  } else {
    out << '-';
  }
  out << " top_k=" << top_k;
  return out.str();
}

}  // namespace

VectorTransfer::VectorTransfer(const CombinedDictionary& dict, ColumnSpacePtr source,
                               ColumnSpacePtr target)
    : source_(std::move(source)), target_(std::move(target)) {
  if (!source_ || !target_) throw ConfigError("transfer needs both column spaces");
  if (source_->mode() != target_->mode() || source_->window() != target_->window()) {
    throw ConfigError("source and target spaces differ in mode or window");
  }
  const bool partitioned = dict.mode() == CombinationMode::kIndependent;
  if (partitioned != source_->partitioned() || partitioned != target_->partitioned()) {
    throw ConfigError("column spaces do not match the dictionary combination mode");
  }
  std::unordered_map<std::string, const std::string*> simple;
  std::map<std::pair<std::string, int>, const std::string*> by_origin;
  for (const auto& e : dict.entries()) {
    if (partitioned) {
      by_origin.emplace(std::make_pair(e.source, dict.member_index(e.origin)), &e.target);
    } else {
      simple.emplace(e.source, &e.target);
    }
  }
  seed_map_.resize(source_->seed_count());
  for (std::size_t j = 0; j < source_->seed_count(); ++j) {
    const auto& seed = source_->seed(j);
    const std::string* target_word = nullptr;
    if (partitioned) {
      auto it = by_origin.find({seed.word, seed.origin});
      if (it != by_origin.end()) target_word = it->second;
    } else {
      auto it = simple.find(seed.word);
      if (it != simple.end()) target_word = it->second;
    }
    if (!target_word) throw ConfigError("source column has no dictionary entry: " + seed.word);
    bool found = false;
    for (auto t : target_->seeds_for(*target_word)) {
      if (target_->seed(t).origin == seed.origin) {
        seed_map_[j] = t;
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError("target space lacks column for " + *target_word);
  }
}

ContextVector VectorTransfer::Apply(std::span<const Cell> source_cells) const {
  std::vector<Cell> mapped;
  mapped.reserve(source_cells.size());
  for (const auto& c : source_cells) {
    const auto seed = source_->seed_of(c.col);
    const auto col = target_->column(seed_map_[seed], source_->offset_of(c.col));
    mapped.push_back({static_cast<std::uint32_t>(col), c.value});
  }
  std::stable_sort(mapped.begin(), mapped.end(),
                   [](const Cell& a, const Cell& b) { return a.col < b.col; });
  std::vector<Cell> out;
  out.reserve(mapped.size());
  for (std::size_t i = 0; i < mapped.size();) {
    ExactSum total;
    std::size_t j = i;
    for (; j < mapped.size() && mapped[j].col == mapped[i].col; ++j) total.Add(mapped[j].value);
    out.push_back({mapped[i].col, total.Result()});
    i = j;
  }
  return ContextVector{target_, std::move(out)};
}

ContextVector VectorTransfer::Apply(const ContextVector& v) const {
  if (!v.space || v.space->id() != source_->id()) {
    throw ConfigError("vector is not in the transfer's source space");
  }
  return Apply(std::span<const Cell>(v.cells));
}

ContextVector TransferVector(const ContextVector& v, const CombinedDictionary& dict) {
  if (!v.space) throw ConfigError("vector without column space");
  const auto mode = v.space->mode();
  const int k = v.space->window();
  VectorTransfer transfer(dict, MakeSourceSpace(dict, mode, k), MakeTargetSpace(dict, mode, k));
  return transfer.Apply(v);
}

ContextVector TransferVector(const ContextVector& v, const SeedDictionary& dict) {
  return TransferVector(v, CombinedDictionary::FromSingle(dict));
}

const RankedCandidates* RankedLexicon::find(const std::string& source_word) const {
  for (const auto& e : entries) {
    if (e.source_word == source_word) return &e;
  }
  return nullptr;
}

CandidateRanker::CandidateRanker(const CoocMatrix& target, Metric metric,
                                 const WeightSet* weights)
    : target_(target), metric_(metric) {
  if (metric_ == Metric::kNewDiceMin) {
    if (!weights) throw ConfigError("newdicemin needs dictionary weights");
    origin_weights_ = MakeOriginWeights(target_.space(), *weights);
  }
  row_stats_.reserve(target_.rows());
  for (std::size_t i = 0; i < target_.rows(); ++i) {
    auto stats = ComputeStats(target_.row(i));
    // A normalized row has mass exactly 1. The computed sum wobbles by an
    // ulp from row to row, which would otherwise break exact score ties by
    // rounding noise instead of by word.
    if (target_.normalized() && !target_.row(i).empty()) stats.sum = 1.0;
    row_stats_.push_back(stats);
  }

  postings_offsets_.assign(target_.space().size() + 1, 0);
  for (std::size_t i = 0; i < target_.rows(); ++i)
    for (const auto& c : target_.row(i)) ++postings_offsets_[c.col + 1];
  std::partial_sum(postings_offsets_.begin(), postings_offsets_.end(), postings_offsets_.begin());
  postings_.resize(postings_offsets_.back());
  auto fill = postings_offsets_;
  for (std::size_t i = 0; i < target_.rows(); ++i)
    for (const auto& c : target_.row(i)) postings_[fill[c.col]++] = static_cast<std::uint32_t>(i);
}

RankedCandidates CandidateRanker::Rank(const std::string& source_word, const ContextVector& tv,
                                       std::size_t top_k) const {
  if (!tv.space || tv.space->id() != target_.space().id()) {
    throw ConfigError("transferred vector does not match the target matrix columns");
  }
  return RankCells(source_word, tv.cells, top_k);
}

RankedCandidates CandidateRanker::RankCells(const std::string& source_word,
                                            std::span<const Cell> cells,
                                            std::size_t top_k) const {
  if (top_k == 0) throw ConfigError("top_k must be at least 1");
  const std::size_t n = target_.rows();
  const auto query_stats = ComputeStats(cells);
  const OriginWeights* weights = origin_weights_.weight.empty() ? nullptr : &origin_weights_;
  std::vector<double> scores(n, 0.0);
  auto score_row = [&](std::size_t i) {
    scores[i] = ScoreVectors(metric_, cells, query_stats, target_.row(i), row_stats_[i], weights);
  };
  if (metric_ == Metric::kCityblock) {
    for (std::size_t i = 0; i < n; ++i) score_row(i);
  } else {
    std::vector<bool> touched(n, false);
    for (const auto& c : cells) {
      for (auto p = postings_offsets_[c.col]; p < postings_offsets_[c.col + 1]; ++p) {
        const auto i = postings_[p];
        if (!touched[i]) {
          touched[i] = true;
          score_row(i);
        }
      }
    }
  }

  const bool ascending = LowerIsBetter(metric_);
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  auto better = [&](std::uint32_t a, std::uint32_t b) {
    if (scores[a] != scores[b]) return ascending ? scores[a] < scores[b] : scores[a] > scores[b];
    return target_.row_word(a) < target_.row_word(b);
  };
  const std::size_t keep = std::min(top_k, n);
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    better);
  RankedCandidates out;
  out.source_word = source_word;
  out.candidates.reserve(keep);
  for (std::size_t r = 0; r < keep; ++r) {
    out.candidates.push_back({target_.row_word(order[r]), scores[order[r]]});
  }
  return out;
}

RankedCandidates RankCandidates(const ContextVector& tv, const CoocMatrix& target, Metric metric,
                                const WeightSet* weights, std::size_t top_k,
                                const std::string& source_word) {
  return CandidateRanker(target, metric, weights).Rank(source_word, tv, top_k);
}

RankedLexicon ExtractLexicon(const CoocMatrix& source, const CoocMatrix& target,
                             const CombinedDictionary& dict, Metric metric,
                             const WeightSet* weights, std::size_t top_k, unsigned threads) {
  if (dict.empty()) throw ConfigError("empty seed dictionary");
  if (top_k == 0) throw ConfigError("top_k must be at least 1");
  if (source.mode() != target.mode() || source.window() != target.window() ||
      source.measure() != target.measure() || source.normalized() != target.normalized()) {
    throw ConfigError("source and target matrices were built with different settings");
  }
  const auto source_space = MakeSourceSpace(dict, source.mode(), source.window());
  const auto target_space = MakeTargetSpace(dict, target.mode(), target.window());
  if (source.space().id() != source_space->id()) {
    throw ConfigError("source matrix columns do not match the seed dictionary");
  }
  if (target.space().id() != target_space->id()) {
    throw ConfigError("target matrix columns do not match the seed dictionary");
  }
  VectorTransfer transfer(dict, source.columns(), target.columns());
  CandidateRanker ranker(target, metric, weights);

  RankedLexicon lexicon;
  lexicon.config_fingerprint = Fingerprint(source, dict, metric, weights, top_k);
  lexicon.entries.resize(source.rows());
  ParallelFor(source.rows(), threads, [&](std::size_t begin, std::size_t end, unsigned) {
    for (auto i = begin; i < end; ++i) {
      const auto tv = transfer.Apply(source.row(i));
      lexicon.entries[i] = ranker.RankCells(source.row_word(i), tv.cells, top_k);
    }
  });
  return lexicon;
}

void WriteLexicon(const RankedLexicon& lexicon, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << "# " << lexicon.config_fingerprint << '\n';
  for (const auto& e : lexicon.entries) {
    for (std::size_t r = 0; r < e.candidates.size(); ++r) {
      out << e.source_word << '\t' << r + 1 << '\t' << e.candidates[r].target << '\t'
          << FormatDouble(e.candidates[r].score) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

RankedLexicon LoadLexicon(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open lexicon: " + path);
  RankedLexicon lexicon;
  std::unordered_map<std::string, std::size_t> index;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      if (line_no == 1) {
        view.remove_prefix(1);
        while (!view.empty() && view.front() == ' ') view.remove_prefix(1);
        lexicon.config_fingerprint = std::string(view);
      }
      continue;
    }
    auto fields = SplitFields(view);
    if (fields.size() != 4) throw ParseError(path, line_no, "expected source<TAB>rank<TAB>target<TAB>score");
    std::size_t rank = 0;
    auto [rp, rec] = std::from_chars(fields[1].data(), fields[1].data() + fields[1].size(), rank);
    double score = 0;
    auto [sp, sec] = std::from_chars(fields[3].data(), fields[3].data() + fields[3].size(), score);
    if (rec != std::errc() || rp != fields[1].data() + fields[1].size() || sec != std::errc() ||
        sp != fields[3].data() + fields[3].size()) {
      throw ParseError(path, line_no, "bad rank or score");
    }
    auto [it, added] = index.try_emplace(std::string(fields[0]), lexicon.entries.size());
    if (added) lexicon.entries.push_back({std::string(fields[0]), {}});
    auto& entry = lexicon.entries[it->second];
    if (rank != entry.candidates.size() + 1) {
      throw ParseError(path, line_no, "ranks for " + entry.source_word + " are not consecutive");
    }
    entry.candidates.push_back({std::string(fields[2]), score});
  }
  if (in.bad()) throw IoError("read failed: " + path);
  return lexicon;
}

}  // namespace lexind
