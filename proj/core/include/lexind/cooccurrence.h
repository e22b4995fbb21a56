#ifndef LEXIND_COOCCURRENCE_H_
#define LEXIND_COOCCURRENCE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lexind/column_space.h"
#include "lexind/corpus.h"

namespace lexind {

struct Cell {
  std::uint32_t col;
  double value;

  bool operator==(const Cell&) const = default;
};

enum class Measure { kRawFrequency, kLogLikelihood };

const char* ToString(Measure measure);  // "raw" / "llr"
Measure ParseMeasure(const std::string& text);

// Sparse row-major (CSR) association matrix. Rows are candidate words,
// columns come from a shared ColumnSpace. Cells within a row are sorted by
// column and no stored cell is zero. Immutable; transforms return new
// matrices.
class CoocMatrix {
 public:
  // Throws ConfigError when the layout is inconsistent.
  CoocMatrix(std::vector<std::string> row_words, ColumnSpacePtr columns,
             std::vector<std::size_t> row_offsets, std::vector<Cell> cells, Measure measure,
             bool normalized);

  std::size_t rows() const { return row_words_.size(); }
  const std::vector<std::string>& row_words() const { return row_words_; }
  const std::string& row_word(std::size_t i) const { return row_words_[i]; }
  std::optional<std::size_t> row_index(const std::string& word) const;
  std::span<const Cell> row(std::size_t i) const {
    return {cells_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  // 0 when the cell is not stored.
  double value(std::size_t i, std::size_t col) const;

  const ColumnSpacePtr& columns() const { return columns_; }
  const ColumnSpace& space() const { return *columns_; }
  WindowMode mode() const { return columns_->mode(); }
  int window() const { return columns_->window(); }
  Measure measure() const { return measure_; }
  bool normalized() const { return normalized_; }
  std::size_t nnz() const { return cells_.size(); }

 private:
  std::vector<std::string> row_words_;
  ColumnSpacePtr columns_;
  std::vector<std::size_t> offsets_;
  std::vector<Cell> cells_;
  Measure measure_;
  bool normalized_;
  std::unordered_map<std::string, std::size_t> row_index_;
};

// Counts, for every row word and column, the token-position pairs within
// the same sentence at distance 1..k (ordered spaces keep the signed
// offset). Work is split by sentence; counts are merged by addition.
CoocMatrix BuildCooccurrence(const Corpus& corpus, const Vocabulary& rows,
                             const ColumnSpacePtr& columns, unsigned threads = 1);

CoocMatrix BuildUnordered(const Corpus& corpus, const Vocabulary& rows,
                          const std::vector<std::string>& seed_words, int window,
                          unsigned threads = 1);
CoocMatrix BuildOrdered(const Corpus& corpus, const Vocabulary& rows,
                        const std::vector<std::string>& seed_words, int window,
                        unsigned threads = 1);

// sum_ij K_ij ln(K_ij N / (C_i R_j)) over the 2x2 contingency table, where
// C and R are its row and column sums and N its total. Terms with K_ij = 0
// contribute 0; an all-zero table scores 0. Negative or non-finite input is
// a DomainError.
double LogLikelihoodCell(double k11, double k12, double k21, double k22);

struct LlrDiagnostics {
  std::size_t clipped_cells = 0;  // cells where some K had to be clipped to 0
};

// Replaces each raw count with its log-likelihood score, using
//   K11 = count, K12 = f(row) - K11, K21 = f(seed) - K11,
//   K22 = token_count - f(row) - f(seed).
// Negative K are clipped to 0 and counted in `diagnostics`. Cells scoring
// <= 0 are dropped. Throws StateError unless the input holds raw,
// unnormalized counts.
CoocMatrix ApplyLogLikelihood(const CoocMatrix& m, const FrequencyTable& frequencies,
                              std::uint64_t token_count, LlrDiagnostics* diagnostics = nullptr);

// Divides every non-empty row by its L1 sum. Already-normalized matrices
// are returned unchanged. Throws DataError when the matrix has no cells.
CoocMatrix NormalizeRows(const CoocMatrix& m);

// Removes rows without stored cells, keeping order. Throws DataError
// ("no candidate words") if nothing remains.
CoocMatrix PruneZeroRows(const CoocMatrix& m);

// TSV triples `row<TAB>col_key<TAB>value` under a header line
// `#mode=<unordered|ordered> k=<int> measure=<raw|llr> normalized=<0|1>`.
void WriteMatrix(const CoocMatrix& m, const std::string& path);

struct MatrixHeader {
  WindowMode mode;
  int window;
  Measure measure;
  bool normalized;
};

// Reads only the header line of a matrix file.
MatrixHeader ReadMatrixHeader(const std::string& path);

// Column keys are resolved against `columns`, whose mode and window must
// match the header. Empty rows cannot be represented and are absent.
CoocMatrix LoadMatrix(const std::string& path, const ColumnSpacePtr& columns);

// Keeps only the rows whose word satisfies `keep`.
template <class Pred>
CoocMatrix FilterRows(const CoocMatrix& m, Pred keep) {
  std::vector<std::string> words;
  std::vector<std::size_t> offsets{0};
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!keep(m.row_word(i))) continue;
    words.push_back(m.row_word(i));
    auto r = m.row(i);
    cells.insert(cells.end(), r.begin(), r.end());
    offsets.push_back(cells.size());
  }
  return CoocMatrix(std::move(words), m.columns(), std::move(offsets), std::move(cells),
                    m.measure(), m.normalized());
}

}  // namespace lexind

#endif  // LEXIND_COOCCURRENCE_H_
