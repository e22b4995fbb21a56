#include <gtest/gtest.h>

#include <random>
#include <set>

#include "lexind/dictionary.h"
#include "lexind/error.h"
#include "support/synthetic.h"

namespace lexind {
namespace {

using testing::WriteTempFile;

TEST(LoadDictionaryTest, FirstTranslationWins) {
  auto d = LoadDictionary(WriteTempFile("d1.tsv", "casa\thome\thouse\n"), "DicEx");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.entries()[0], (SeedEntry{"casa", "home"}));
  EXPECT_EQ(d.id(), "DicEx");
}

TEST(LoadDictionaryTest, LaterHeadwordLinesDropped) {
  auto d = LoadDictionary(WriteTempFile("d2.tsv", "x\ta\nx\tb\n"), "D");
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(*d.find("x"), "a");
}

TEST(LoadDictionaryTest, Errors) {
  EXPECT_THROW(LoadDictionary(WriteTempFile("d3.tsv", ""), "D"), DataError);
  try {
    LoadDictionary(WriteTempFile("d4.tsv", "a\tb\nbroken\n"), "D");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(TranslationTableTest, MaxProbabilityPerSource) {
  auto d = IngestTranslationTable(WriteTempFile("t1.tsv", "x\ta\t0.9\nx\tb\t0.4\n"), 10);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(*d.find("x"), "a");
  EXPECT_EQ(d.id(), "DicPa");
}

TEST(TranslationTableTest, TopN) {
  auto d = IngestTranslationTable(WriteTempFile("t2.tsv", "y\tb\t0.8\nx\ta\t0.9\n"), 1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.entries()[0], (SeedEntry{"x", "a"}));
}

TEST(TranslationTableTest, FirstOccurrenceWinsTies) {
  auto d = IngestTranslationTable(WriteTempFile("t3.tsv", "x\tb\t0.5\nx\ta\t0.5\n"), 5);
  EXPECT_EQ(*d.find("x"), "b");
}

TEST(TranslationTableTest, BadProbability) {
  for (const char* bad : {"1.5", "-0.1", "abc", "0.5x"}) {
    try {
      IngestTranslationTable(WriteTempFile("t4.tsv", std::string("a\tb\t0.3\nx\ta\t") + bad + "\n"),
                             5);
      FAIL() << bad;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), 2u);
    }
  }
}

TEST(CombineTest, SimplePriority) {
  SeedDictionary d1("D1", {{"x", "a"}});
  SeedDictionary d2("D2", {{"x", "b"}, {"y", "c"}});
  auto c = CombineSimple({d1, d2});
  EXPECT_EQ(c.mode(), CombinationMode::kSimple);
  EXPECT_EQ(c.entries(), (std::vector<CombinedEntry>{{"x", "a", "D1"}, {"y", "c", "D2"}}));
}

TEST(CombineTest, SimpleDisjoint) {
  SeedDictionary d1("D1", {{"x", "a"}, {"z", "q"}});
  SeedDictionary d2("D2", {{"y", "c"}});
  EXPECT_EQ(CombineSimple({d1, d2}).size(), 3u);
}

TEST(CombineTest, Independent) {
  SeedDictionary d1("D1", {{"x", "a"}});
  SeedDictionary d2("D2", {{"x", "b"}});
  auto c = CombineIndependent({d1, d2});
  EXPECT_EQ(c.entries(), (std::vector<CombinedEntry>{{"x", "a", "D1"}, {"x", "b", "D2"}}));
  EXPECT_EQ(c.member_ids(), (std::vector<std::string>{"D1", "D2"}));
}

TEST(CombineTest, Preconditions) {
  SeedDictionary d1("D1", {{"x", "a"}});
  SeedDictionary dup("D1", {{"y", "b"}});
  EXPECT_THROW(CombineSimple({d1}), ConfigError);
  EXPECT_THROW(CombineIndependent({d1}), ConfigError);
  EXPECT_THROW(CombineSimple({d1, dup}), ConfigError);
  EXPECT_THROW(CombineIndependent({d1, dup}), ConfigError);
}

TEST(CombineTest, RandomSetArithmetic) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n_dicts = 2 + static_cast<int>(rng() % 3);
    std::vector<SeedDictionary> dicts;
    for (int j = 0; j < n_dicts; ++j) {
      std::vector<SeedEntry> entries;
      const int size = static_cast<int>(rng() % 15);
      for (int e = 0; e < size; ++e) {
        entries.push_back({"s" + std::to_string(rng() % 20), "t" + std::to_string(rng() % 20)});
      }
      dicts.emplace_back("D" + std::to_string(j), entries);
    }
    std::set<std::string> sources;
    std::size_t total = 0;
    for (const auto& d : dicts) {
      total += d.size();
      for (const auto& e : d.entries()) sources.insert(e.source);
    }
    auto simple = CombineSimple(dicts);
    auto independent = CombineIndependent(dicts);
    EXPECT_EQ(simple.size(), sources.size());
    EXPECT_EQ(independent.size(), total);
    for (const auto& e : simple.entries()) {
      for (const auto& d : dicts) {
        if (const auto* t = d.find(e.source)) {
          EXPECT_EQ(e.origin, d.id());
          EXPECT_EQ(e.target, *t);
          break;
        }
      }
    }
  }
}

TEST(WeightsTest, ByAccuracy) {
  auto w = WeightsByAccuracy({{"DicEx", 0.70}, {"DicPi", 0.64}, {"DicPa", 0.59}});
  EXPECT_DOUBLE_EQ(w.at("DicEx"), 0.70);
  EXPECT_DOUBLE_EQ(w.at("DicPi"), 0.64);
  EXPECT_DOUBLE_EQ(w.at("DicPa"), 0.59);
  EXPECT_DOUBLE_EQ(WeightsByAccuracy({{"D", 1.0}}).at("D"), 1.0);
  EXPECT_THROW(WeightsByAccuracy({{"D", 0.0}}), DomainError);
  EXPECT_THROW(WeightsByAccuracy({{"D", 1.2}}), DomainError);
}

TEST(WeightsTest, ByAccuracyAndSize) {
  auto w = WeightsByAccuracyAndSize({{"DicEx", 0.70}, {"DicPi", 0.64}, {"DicPa", 0.59}},
                                    {{"DicEx", 13309}, {"DicPi", 40000}, {"DicPa", 40000}});
  EXPECT_NEAR(w.at("DicEx"), 2.1038395071004583, 1e-12);
  EXPECT_NEAR(w.at("DicEx"), 2.10, 0.005);
  EXPECT_NEAR(w.at("DicPi"), 0.64, 1e-15);
  EXPECT_NEAR(w.at("DicPa"), 0.59, 1e-15);

  auto equal = WeightsByAccuracyAndSize({{"A", 0.5}, {"B", 0.25}}, {{"A", 7}, {"B", 7}});
  EXPECT_DOUBLE_EQ(equal.at("A"), 0.5);
  EXPECT_DOUBLE_EQ(equal.at("B"), 0.25);
  EXPECT_DOUBLE_EQ(WeightsByAccuracyAndSize({{"A", 0.3}}, {{"A", 9}}).at("A"), 0.3);
  EXPECT_THROW(WeightsByAccuracyAndSize({}, {}), ConfigError);
}

TEST(CombinedFileTest, RoundTrip) {
  SeedDictionary d1("D1", {{"x", "a"}, {"y", "b"}});
  SeedDictionary d2("D2", {{"x", "c"}});
  for (auto c : {CombineSimple({d1, d2}), CombineIndependent({d1, d2})}) {
    auto path = testing::TempPath("combined.tsv");
    WriteCombined(c, path);
    auto back = LoadSeedColumns(path);
    EXPECT_EQ(back.mode(), c.mode());
    EXPECT_EQ(back.member_ids(), c.member_ids());
    EXPECT_EQ(back.entries(), c.entries());
  }
  auto plain = LoadSeedColumns(WriteTempFile("plain.tsv", "x\ta\n"), "DicEx");
  EXPECT_EQ(plain.entries(), (std::vector<CombinedEntry>{{"x", "a", "DicEx"}}));
}

}  // namespace
}  // namespace lexind
