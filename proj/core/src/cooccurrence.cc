#include "lexind/cooccurrence.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>

#include "lexind/error.h"
#include "lexind/exact_sum.h"
#include "lexind/parallel.h"
#include "lexind/text.h"

namespace lexind {
namespace {

using CountMap = std::unordered_map<std::uint64_t, std::uint64_t>;

std::uint64_t PackKey(std::size_t row, std::size_t col) {
  return (static_cast<std::uint64_t>(row) << 32) | static_cast<std::uint64_t>(col);
}

void CountSentence(const Sentence& sentence, const Vocabulary& rows, const ColumnSpace& space,
                   std::vector<std::int64_t>& row_ids,
                   std::vector<const std::vector<std::uint32_t>*>& seed_ids, CountMap& counts) {
  const std::size_t len = sentence.size();
  row_ids.resize(len);
  seed_ids.resize(len);
  for (std::size_t i = 0; i < len; ++i) {
    row_ids[i] = rows.index(sentence[i]);
    seed_ids[i] = &space.seeds_for(sentence[i]);
  }
  const auto k = static_cast<std::int64_t>(space.window());
  for (std::size_t i = 0; i < len; ++i) {
    if (row_ids[i] < 0) continue;
    const auto row = static_cast<std::size_t>(row_ids[i]);
    const auto pos = static_cast<std::int64_t>(i);
    const auto lo = std::max<std::int64_t>(0, pos - k);
    const auto hi = std::min<std::int64_t>(static_cast<std::int64_t>(len) - 1, pos + k);
    for (auto j = lo; j <= hi; ++j) {
      if (j == pos) continue;
      const int offset = static_cast<int>(j - pos);
      for (auto seed : *seed_ids[static_cast<std::size_t>(j)]) {
        ++counts[PackKey(row, space.column(seed, offset))];
      }
    }
  }
}

std::ofstream OpenOutput(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  return out;
}

}  // namespace

const char* ToString(Measure measure) {
  return measure == Measure::kRawFrequency ? "raw" : "llr";
}

Measure ParseMeasure(const std::string& text) {
  if (text == "raw") return Measure::kRawFrequency;
  if (text == "llr") return Measure::kLogLikelihood;
  throw ConfigError("unknown association measure: " + text);
}

CoocMatrix::CoocMatrix(std::vector<std::string> row_words, ColumnSpacePtr columns,
                       std::vector<std::size_t> row_offsets, std::vector<Cell> cells,
                       Measure measure, bool normalized)
    : row_words_(std::move(row_words)),
      columns_(std::move(columns)),
      offsets_(std::move(row_offsets)),
      cells_(std::move(cells)),
      measure_(measure),
      normalized_(normalized) {
  if (!columns_) throw ConfigError("matrix without column space");
  if (offsets_.size() != row_words_.size() + 1 || offsets_.front() != 0 ||
      offsets_.back() != cells_.size()) {
    throw ConfigError("inconsistent row offsets");
  }
  for (std::size_t i = 0; i < row_words_.size(); ++i) {
    if (!row_index_.emplace(row_words_[i], i).second) {
      throw ConfigError("duplicate row word: " + row_words_[i]);
    }
    if (offsets_[i] > offsets_[i + 1]) throw ConfigError("inconsistent row offsets");
    for (auto c = offsets_[i]; c < offsets_[i + 1]; ++c) {
      if (cells_[c].col >= columns_->size()) throw ConfigError("column out of range");
      if (!(cells_[c].value != 0.0) || !std::isfinite(cells_[c].value)) {
        throw ConfigError("stored cell must be finite and nonzero");
      }
      if (c > offsets_[i] && cells_[c - 1].col >= cells_[c].col) {
        throw ConfigError("row cells not strictly sorted by column");
      }
    }
  }
}

std::optional<std::size_t> CoocMatrix::row_index(const std::string& word) const {
  auto it = row_index_.find(word);
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

double CoocMatrix::value(std::size_t i, std::size_t col) const {
  auto r = row(i);
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const Cell& c, std::size_t v) { return c.col < v; });
  return it != r.end() && it->col == col ? it->value : 0.0;
}

CoocMatrix BuildCooccurrence(const Corpus& corpus, const Vocabulary& rows,
                             const ColumnSpacePtr& columns, unsigned threads) {
  if (!columns) throw ConfigError("no column space");
  std::vector<const Sentence*> sentences;
  for (const auto& doc : corpus.documents)
    for (const auto& s : doc.sentences) sentences.push_back(&s);

  const unsigned workers = ResolveThreads(threads);
  std::vector<CountMap> partial(workers);
  ParallelFor(sentences.size(), workers, [&](std::size_t begin, std::size_t end, unsigned w) {
    std::vector<std::int64_t> row_ids;
    std::vector<const std::vector<std::uint32_t>*> seed_ids;
    for (auto i = begin; i < end; ++i) {
      CountSentence(*sentences[i], rows, *columns, row_ids, seed_ids, partial[w]);
    }
  });
  CountMap& counts = partial.front();
  for (std::size_t w = 1; w < partial.size(); ++w) {
    for (const auto& [key, n] : partial[w]) counts[key] += n;
    CountMap().swap(partial[w]);
  }

  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> offsets(rows.size() + 1, 0);
  std::vector<Cell> cells;
  cells.reserve(sorted.size());
  for (const auto& [key, n] : sorted) {
    ++offsets[(key >> 32) + 1];
    cells.push_back({static_cast<std::uint32_t>(key & 0xFFFFFFFFu), static_cast<double>(n)});
  }
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  return CoocMatrix(rows.words(), columns, std::move(offsets), std::move(cells),
                    Measure::kRawFrequency, false);
}

CoocMatrix BuildUnordered(const Corpus& corpus, const Vocabulary& rows,
                          const std::vector<std::string>& seed_words, int window,
                          unsigned threads) {
  return BuildCooccurrence(corpus, rows, MakeSeedSpace(seed_words, WindowMode::kUnordered, window),
                           threads);
}

CoocMatrix BuildOrdered(const Corpus& corpus, const Vocabulary& rows,
                        const std::vector<std::string>& seed_words, int window,
                        unsigned threads) {
  return BuildCooccurrence(corpus, rows, MakeSeedSpace(seed_words, WindowMode::kOrdered, window),
                           threads);
}

double LogLikelihoodCell(double k11, double k12, double k21, double k22) {
  for (double k : {k11, k12, k21, k22}) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
      throw DomainError("contingency counts must be finite and nonnegative");
    }
  }
  const double n = k11 + k12 + k21 + k22;
  if (n == 0.0) return 0.0;
  const double c1 = k11 + k12;
  const double c2 = k21 + k22;
  const double r1 = k11 + k21;
  const double r2 = k12 + k22;
  auto term = [n](double k, double c, double r) {
    return k > 0.0 ? k * std::log(k * n / (c * r)) : 0.0;
  };
  const double sum = term(k11, c1, r1) + term(k12, c1, r2) + term(k21, c2, r1) + term(k22, c2, r2);
  return sum > 0.0 ? sum : 0.0;
}

CoocMatrix ApplyLogLikelihood(const CoocMatrix& m, const FrequencyTable& frequencies,
                              std::uint64_t token_count, LlrDiagnostics* diagnostics) {
  if (m.measure() != Measure::kRawFrequency) {
    throw StateError("log-likelihood already applied");
  }
  if (m.normalized()) throw StateError("log-likelihood needs unnormalized counts");
  auto freq = [&](const std::string& w) -> double {
    auto it = frequencies.find(w);
    return it == frequencies.end() ? 0.0 : static_cast<double>(it->second);
  };
  const auto& space = m.space();
  std::vector<double> seed_freq(space.seed_count());
  for (std::size_t j = 0; j < seed_freq.size(); ++j) seed_freq[j] = freq(space.seed(j).word);
  const double total = static_cast<double>(token_count);

  std::size_t clipped = 0;
  std::vector<std::size_t> offsets{0};
  std::vector<Cell> cells;
  cells.reserve(m.nnz());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const double f_row = freq(m.row_word(i));
    for (const auto& c : m.row(i)) {
      const double f_seed = seed_freq[space.seed_of(c.col)];
      const double k11 = c.value;
      double k12 = f_row - k11;
      double k21 = f_seed - k11;
      double k22 = total - f_row - f_seed;
      if (k12 < 0.0 || k21 < 0.0 || k22 < 0.0) {
        ++clipped;
        k12 = std::max(k12, 0.0);
        k21 = std::max(k21, 0.0);
        k22 = std::max(k22, 0.0);
      }
      const double v = LogLikelihoodCell(k11, k12, k21, k22);
      if (v > 0.0) cells.push_back({c.col, v});
    }
    offsets.push_back(cells.size());
  }
  if (diagnostics) diagnostics->clipped_cells = clipped;
  return CoocMatrix(m.row_words(), m.columns(), std::move(offsets), std::move(cells),
                    Measure::kLogLikelihood, false);
}

CoocMatrix NormalizeRows(const CoocMatrix& m) {
  if (m.nnz() == 0) throw DataError("cannot normalize a matrix without nonzero rows");
  if (m.normalized()) return m;
  std::vector<std::size_t> offsets{0};
  std::vector<Cell> cells;
  cells.reserve(m.nnz());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    ExactSum total;
    for (const auto& c : r) total.Add(c.value);
    const double sum = total.Result();
    for (const auto& c : r) {
      const double v = c.value / sum;
      if (v != 0.0) cells.push_back({c.col, v});
    }
    offsets.push_back(cells.size());
  }
  return CoocMatrix(m.row_words(), m.columns(), std::move(offsets), std::move(cells), m.measure(),
                    true);
}

CoocMatrix PruneZeroRows(const CoocMatrix& m) {
  std::vector<bool> keep(m.rows());
  bool any = false;
  for (std::size_t i = 0; i < m.rows(); ++i) any |= (keep[i] = !m.row(i).empty());
  if (!any) throw DataError("no candidate words: every row is empty");
  std::size_t i = 0;
  return FilterRows(m, [&](const std::string&) { return keep[i++]; });
}

void WriteMatrix(const CoocMatrix& m, const std::string& path) {
  auto out = OpenOutput(path);
  out << "#mode=" << ToString(m.mode()) << " k=" << m.window() << " measure=" << ToString(m.measure())
      << " normalized=" << (m.normalized() ? 1 : 0) << '\n';
  std::vector<std::string> keys(m.space().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& c : m.row(i)) {
      if (keys[c.col].empty()) keys[c.col] = m.space().key(c.col);
      out << m.row_word(i) << '\t' << keys[c.col] << '\t' << FormatDouble(c.value) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

namespace {

MatrixHeader ParseMatrixHeader(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line) || !line.starts_with("#")) {
    throw ParseError(path, 1, "missing matrix header");
  }
  std::map<std::string, std::string> fields;
  for (auto field : SplitWords(StripLineEnd(line).substr(1))) {
    auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError(path, 1, "bad header field");
    fields.emplace(std::string(field.substr(0, eq)), std::string(field.substr(eq + 1)));
  }
  for (const char* key : {"mode", "k", "measure", "normalized"}) {
    if (!fields.count(key)) throw ParseError(path, 1, std::string("header lacks ") + key);
  }
  MatrixHeader header{};
  try {
    header.mode = ParseWindowMode(fields["mode"]);
    header.measure = ParseMeasure(fields["measure"]);
  } catch (const ConfigError& e) {
    throw ParseError(path, 1, e.what());
  }
  const auto& k = fields["k"];
  auto [ptr, ec] = std::from_chars(k.data(), k.data() + k.size(), header.window);
  if (ec != std::errc() || ptr != k.data() + k.size() || header.window < 1) {
    throw ParseError(path, 1, "bad window size " + k);
  }
  if (fields["normalized"] != "0" && fields["normalized"] != "1") {
    throw ParseError(path, 1, "normalized must be 0 or 1");
  }
  header.normalized = fields["normalized"] == "1";
  return header;
}

}  // namespace

MatrixHeader ReadMatrixHeader(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix: " + path);
  return ParseMatrixHeader(in, path);
}

CoocMatrix LoadMatrix(const std::string& path, const ColumnSpacePtr& columns) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open matrix: " + path);
  const auto header = ParseMatrixHeader(in, path);
  if (header.mode != columns->mode() || header.window != columns->window()) {
    throw ConfigError("matrix " + path + " was built with a different mode or window");
  }
  std::string line;
  std::size_t line_no = 1;
  std::vector<std::string> words;
  std::unordered_map<std::string, std::size_t> row_of;
  std::vector<std::vector<Cell>> rows;
  while (std::getline(in, line)) {
    ++line_no;
    auto view = StripLineEnd(line);
    if (view.empty()) continue;
    auto fields = SplitFields(view);
    if (fields.size() != 3) throw ParseError(path, line_no, "expected row<TAB>column<TAB>value");
    auto col = columns->find(fields[1]);
    if (!col) throw ParseError(path, line_no, "unknown column key " + std::string(fields[1]));
    double v = 0;
    try {
      std::size_t used = 0;
      v = std::stod(std::string(fields[2]), &used);
      if (used != fields[2].size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ParseError(path, line_no, "bad value " + std::string(fields[2]));
    }
    if (!(v > 0.0) || !std::isfinite(v)) throw ParseError(path, line_no, "value must be > 0");
    auto [it, added] = row_of.try_emplace(std::string(fields[0]), words.size());
    if (added) {
      words.emplace_back(fields[0]);
      rows.emplace_back();
    }
    rows[it->second].push_back({static_cast<std::uint32_t>(*col), v});
  }
  if (in.bad()) throw IoError("read failed: " + path);
  std::vector<std::size_t> offsets{0};
  std::vector<Cell> cells;
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(), [](const Cell& a, const Cell& b) { return a.col < b.col; });
    for (std::size_t c = 1; c < r.size(); ++c) {
      if (r[c - 1].col == r[c].col) throw ParseError(path, 0, "duplicate cell");
    }
    cells.insert(cells.end(), r.begin(), r.end());
    offsets.push_back(cells.size());
  }
  return CoocMatrix(std::move(words), columns, std::move(offsets), std::move(cells),
                    header.measure, header.normalized);
}

}  // namespace lexind
