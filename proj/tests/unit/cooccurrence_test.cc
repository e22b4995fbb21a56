#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "lexind/cooccurrence.h"
#include "lexind/error.h"
#include "support/naive_reference.h"
#include "support/synthetic.h"

namespace lexind {
namespace {

double Cell(const CoocMatrix& m, const std::string& row, const std::string& key) {
  auto r = m.row_index(row);
  auto c = m.space().find(key);
  if (!r || !c) return 0.0;
  return m.value(*r, *c);
}

CoocMatrix Matrix(std::vector<std::string> rows, const std::vector<std::string>& seeds,
                  const std::vector<std::vector<double>>& dense) {
  std::vector<std::size_t> offsets{0};
  std::vector<lexind::Cell> cells;
  for (const auto& row : dense) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0.0) cells.push_back({static_cast<std::uint32_t>(j), row[j]});
    }
    offsets.push_back(cells.size());
  }
  return CoocMatrix(std::move(rows), MakeSeedSpace(seeds, WindowMode::kUnordered, 1),
                    std::move(offsets), std::move(cells), Measure::kRawFrequency, false);
}

TEST(BuildUnorderedTest, WindowOfOne) {
  Corpus c = ParseCorpus("a b c\n", {}, "xx");
  auto m = BuildUnordered(c, BuildVocabulary(c, 1), {"b"}, 1);
  EXPECT_EQ(Cell(m, "a", "b"), 1.0);
  EXPECT_EQ(Cell(m, "c", "b"), 1.0);
  EXPECT_EQ(Cell(m, "b", "b"), 0.0);
  EXPECT_EQ(m.space().size(), 1u);
}

TEST(BuildUnorderedTest, WindowOfTwo) {
  Corpus c = ParseCorpus("a b c\n", {}, "xx");
  auto m = BuildUnordered(c, BuildVocabulary(c, 1), {"c"}, 2);
  EXPECT_EQ(Cell(m, "a", "c"), 1.0);
  EXPECT_EQ(Cell(m, "b", "c"), 1.0);
  EXPECT_EQ(BuildUnordered(c, BuildVocabulary(c, 1), {"c"}, 1).value(0, 0), 0.0);
}

TEST(BuildUnorderedTest, SentencesBoundWindows) {
  Corpus c = ParseCorpus("a\nb\n\nc\n", {}, "xx");
  auto m = BuildUnordered(c, BuildVocabulary(c, 1), {"b"}, 5);
  EXPECT_EQ(m.nnz(), 0u);
}

TEST(BuildUnorderedTest, EmptySeedListRejected) {
  Corpus c = ParseCorpus("a b\n", {}, "xx");
  EXPECT_THROW(BuildUnordered(c, BuildVocabulary(c, 1), {}, 1), ConfigError);
  EXPECT_THROW(BuildUnordered(c, BuildVocabulary(c, 1), {"a"}, 0), ConfigError);
}

TEST(BuildOrderedTest, SignedOffsets) {
  Corpus c = ParseCorpus("a b\n", {}, "xx");
  auto m = BuildOrdered(c, BuildVocabulary(c, 1), {"b"}, 1);
  EXPECT_EQ(Cell(m, "a", "b@+1"), 1.0);
  EXPECT_EQ(Cell(m, "a", "b@-1"), 0.0);
  EXPECT_EQ(Cell(m, "b", "b@-1"), 0.0);
}

TEST(BuildOrderedTest, RowLengthIsFourNForWindowTwo) {
  Corpus c = ParseCorpus("a b c d\n", {}, "xx");
  auto m = BuildOrdered(c, BuildVocabulary(c, 1), {"a", "b", "c"}, 2);
  EXPECT_EQ(m.space().size(), 4u * 3u);
}

TEST(BuildOrderedTest, MarginalizesToUnordered) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    testing::CorpusShape shape;
    shape.vocabulary = 15;
    shape.tokens = 150;
    Corpus c = ParseCorpus(testing::ZipfCorpusText(shape, rng), {}, "xx");
    auto vocab = BuildVocabulary(c, 1);
    std::vector<std::string> seeds(vocab.words().begin(),
                                   vocab.words().begin() + std::min<std::size_t>(6, vocab.size()));
    const int k = 1 + static_cast<int>(rng() % 3);
    auto un = BuildUnordered(c, vocab, seeds, k);
    auto ord = BuildOrdered(c, vocab, seeds, k, 2);
    for (std::size_t i = 0; i < vocab.size(); ++i) {
      std::vector<double> sums(seeds.size(), 0.0);
      for (const auto& cell : ord.row(i)) sums[ord.space().seed_of(cell.col)] += cell.value;
      for (std::size_t j = 0; j < seeds.size(); ++j) EXPECT_EQ(sums[j], un.value(i, j));
    }
  }
}

TEST(BuildUnorderedTest, SymmetricWhenWordsPlayBothRoles) {
  std::mt19937_64 rng(8);
  testing::CorpusShape shape;
  shape.vocabulary = 12;
  shape.tokens = 300;
  Corpus c = ParseCorpus(testing::ZipfCorpusText(shape, rng), {}, "xx");
  auto vocab = BuildVocabulary(c, 1);
  auto m = BuildUnordered(c, vocab, vocab.words(), 3);
  for (std::size_t i = 0; i < vocab.size(); ++i) {
    for (std::size_t j = 0; j < vocab.size(); ++j) EXPECT_EQ(m.value(i, j), m.value(j, i));
  }
}

TEST(BuildTest, ThreadCountDoesNotMatter) {
  std::mt19937_64 rng(9);
  testing::CorpusShape shape;
  Corpus c = ParseCorpus(testing::ZipfCorpusText(shape, rng), {}, "xx");
  auto vocab = BuildVocabulary(c, 1);
  std::vector<std::string> seeds(vocab.words().begin(), vocab.words().begin() + 10);
  auto one = BuildOrdered(c, vocab, seeds, 3, 1);
  auto four = BuildOrdered(c, vocab, seeds, 3, 4);
  ASSERT_EQ(one.nnz(), four.nnz());
  for (std::size_t i = 0; i < one.rows(); ++i) {
    auto a = one.row(i), b = four.row(i);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
}

TEST(LogLikelihoodTest, OracleValues) {
  EXPECT_EQ(LogLikelihoodCell(1, 1, 1, 1), 0.0);
  EXPECT_NEAR(LogLikelihoodCell(2, 2, 1, 13), 1.73505206974006012332, 1e-12);
  EXPECT_NEAR(LogLikelihoodCell(0, 3, 4, 10), 0.89933351728253203241, 1e-12);
  EXPECT_EQ(LogLikelihoodCell(0, 0, 0, 0), 0.0);
  EXPECT_THROW(LogLikelihoodCell(-1, 1, 1, 1), DomainError);
  EXPECT_THROW(LogLikelihoodCell(NAN, 1, 1, 1), DomainError);
}

TEST(LogLikelihoodTest, MonotoneInAssociationRegime) {
  // Marginals C1 = K11 + K12 and R1 = K11 + K21 held fixed while K11 grows.
  const double c1 = 40, r1 = 30, n = 1000;
  double previous = -1;
  for (double k11 = 0; k11 <= 30; k11 += 1) {
    const double k12 = c1 - k11, k21 = r1 - k11, k22 = n - c1 - r1 + k11;
    const double v = LogLikelihoodCell(k11, k12, k21, k22);
    if (k11 * n > c1 * r1) {
      EXPECT_GE(v, previous);
    }
    previous = v;
  }
}

TEST(ApplyLogLikelihoodTest, SingleCellMatchesOracle) {
  auto m = Matrix({"x"}, {"s"}, {{2}});
  FrequencyTable f{{"x", 4}, {"s", 3}};
  LlrDiagnostics diag;
  auto llr = ApplyLogLikelihood(m, f, 18, &diag);
  EXPECT_EQ(llr.measure(), Measure::kLogLikelihood);
  EXPECT_DOUBLE_EQ(llr.value(0, 0), LogLikelihoodCell(2, 2, 1, 11));
  EXPECT_EQ(diag.clipped_cells, 0u);
  EXPECT_THROW(ApplyLogLikelihood(llr, f, 18), StateError);
}

TEST(ApplyLogLikelihoodTest, SparsityAndClipping) {
  auto m = Matrix({"x", "y"}, {"s", "t"}, {{0, 5}, {1, 0}});
  FrequencyTable f{{"x", 5}, {"y", 1}, {"s", 1}, {"t", 8}};
  LlrDiagnostics diag;
  auto llr = ApplyLogLikelihood(m, f, 10, &diag);
  EXPECT_EQ(llr.value(0, 0), 0.0);
  EXPECT_EQ(diag.clipped_cells, 1u);  // K22 = 10 - 5 - 8 < 0
  for (std::size_t i = 0; i < llr.rows(); ++i) {
    for (const auto& c : llr.row(i)) EXPECT_GT(c.value, 0.0);
  }
}

TEST(NormalizeRowsTest, Examples) {
  auto m = NormalizeRows(Matrix({"a", "b", "c"}, {"s", "t"}, {{2, 2}, {1, 3}, {0, 0}}));
  EXPECT_TRUE(m.normalized());
  EXPECT_EQ(m.value(0, 0), 0.5);
  EXPECT_EQ(m.value(0, 1), 0.5);
  EXPECT_EQ(m.value(1, 0), 0.25);
  EXPECT_EQ(m.value(1, 1), 0.75);
  EXPECT_TRUE(m.row(2).empty());
  auto twice = NormalizeRows(m);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto a = m.row(i), b = twice.row(i);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  EXPECT_THROW(NormalizeRows(Matrix({"a"}, {"s"}, {{0}})), DataError);
}

TEST(NormalizeRowsTest, RowsSumToOne) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.0, 50.0);
  std::vector<std::vector<double>> dense(40, std::vector<double>(9));
  for (auto& row : dense)
    for (auto& v : row) v = rng() % 3 == 0 ? 0.0 : u(rng);
  std::vector<std::string> rows;
  for (int i = 0; i < 40; ++i) rows.push_back("r" + std::to_string(i));
  auto m = NormalizeRows(
      Matrix(rows, {"a", "b", "c", "d", "e", "f", "g", "h", "i"}, dense));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m.row(i).empty()) continue;
    double sum = 0;
    for (const auto& c : m.row(i)) sum += c.value;
    EXPECT_NEAR(sum, 1.0, 1e-9);
  }
}

TEST(PruneZeroRowsTest, Examples) {
  auto pruned = PruneZeroRows(Matrix({"a", "b", "c"}, {"s"}, {{1}, {0}, {2}}));
  EXPECT_EQ(pruned.row_words(), (std::vector<std::string>{"a", "c"}));
  auto full = Matrix({"a", "b"}, {"s"}, {{1}, {3}});
  EXPECT_EQ(PruneZeroRows(full).row_words(), full.row_words());
  EXPECT_THROW(PruneZeroRows(Matrix({"a"}, {"s"}, {{0}})), DataError);
}

TEST(MatrixFileTest, RoundTrip) {
  Corpus c = ParseCorpus("a b c a\nb a c\n", {}, "xx");
  SeedDictionary d("D", {{"a", "x"}, {"c", "y"}});
  auto dict = CombinedDictionary::FromSingle(d);
  auto space = MakeSourceSpace(dict, WindowMode::kOrdered, 2);
  auto m = NormalizeRows(BuildCooccurrence(c, BuildVocabulary(c, 1), space));
  auto path = testing::TempPath("matrix.tsv");
  WriteMatrix(m, path);
  auto header = ReadMatrixHeader(path);
  EXPECT_EQ(header.mode, WindowMode::kOrdered);
  EXPECT_EQ(header.window, 2);
  EXPECT_TRUE(header.normalized);
  auto back = LoadMatrix(path, space);
  EXPECT_EQ(back.normalized(), true);
  EXPECT_EQ(back.measure(), Measure::kRawFrequency);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = back.row_index(m.row_word(i));
    if (m.row(i).empty()) continue;
    ASSERT_TRUE(r);
    auto a = m.row(i), b = back.row(*r);
    EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin(), b.end()));
  }
  EXPECT_THROW(LoadMatrix(path, MakeSourceSpace(dict, WindowMode::kOrdered, 3)), ConfigError);
}

TEST(CooccurrenceTest, AgreesWithNaiveCounting) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    testing::CorpusShape shape;
    shape.vocabulary = 20;
    shape.tokens = 200;
    Corpus c = ParseCorpus(testing::ZipfCorpusText(shape, rng), {}, "xx");
    auto vocab = BuildVocabulary(c, 1);
    std::vector<SeedEntry> entries;
    for (std::size_t i = 0; i < 5 && i < vocab.size(); ++i) {
      entries.push_back({vocab.words()[i * 2 % vocab.size()], "t" + std::to_string(i)});
    }
    auto dict = CombinedDictionary::FromSingle(SeedDictionary("D", entries));
    for (auto mode : {WindowMode::kUnordered, WindowMode::kOrdered}) {
      auto m = BuildCooccurrence(c, vocab, MakeSourceSpace(dict, mode, 2));
      auto naive = testing::NaiveCount(c, testing::NaiveColumns(dict, true, mode, 2), 2);
      ASSERT_EQ(naive.rows, vocab.words());
      ASSERT_EQ(naive.columns.size(), m.space().size());
      for (std::size_t i = 0; i < naive.rows.size(); ++i) {
        for (std::size_t j = 0; j < naive.columns.size(); ++j) {
          EXPECT_EQ(m.value(i, j), naive.values[i][j]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace lexind
