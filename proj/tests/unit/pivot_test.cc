#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lexind/error.h"
#include "lexind/pivot.h"
#include "support/synthetic.h"

namespace lexind {
namespace {

using Raw = std::map<std::string, std::vector<std::string>>;

PivotDictionarySide Side(const Raw& raw) { return PivotDictionarySide(raw, {}); }

TEST(PivotIdfTest, Examples) {
  Raw pr, it;
  for (int i = 0; i < 10; ++i) {
    pr["p" + std::to_string(i)] = {"filler"};
    it["i" + std::to_string(i)] = {"filler"};
  }
  pr["p0"].push_back("rare");
  it["i0"].push_back("rare");
  auto src = Side(pr), tgt = Side(it);
  EXPECT_NEAR(PivotIdf(src, tgt, "rare"), 2.302585092994045684, 1e-15);
  EXPECT_DOUBLE_EQ(PivotIdf(src, tgt, "filler"), 0.0);
  EXPECT_THROW(PivotIdf(src, tgt, "unseen"), DomainError);

  EXPECT_DOUBLE_EQ(PivotIdf(Side({{"a", {"w"}}}), Side({{"b", {"w"}}}), "w"), 0.0);
}

TEST(PivotSideTest, CleansDescriptions) {
  PivotDictionarySide side({{"casa", {"the", "home,", "home", "42"}}, {"x", {"the"}}}, {"the"});
  ASSERT_EQ(side.size(), 1u);
  EXPECT_EQ(side.entries().at("casa"), (std::vector<std::string>{"home"}));
  EXPECT_EQ(side.document_frequency("home"), 1u);
}

TEST(PivotScoreTest, Examples) {
  IdfTable idf{{"a", 1.0}, {"b", 1.0}, {"c", 1.0}};
  EXPECT_DOUBLE_EQ(PivotScore({"a", "b"}, {"a", "b"}, idf), 1.0);
  EXPECT_DOUBLE_EQ(PivotScore({"a"}, {"c"}, idf), 0.0);
  EXPECT_DOUBLE_EQ(PivotScore({"a", "b"}, {"b", "c"}, idf), 0.5);
  IdfTable zero{{"a", 0.0}};
  EXPECT_DOUBLE_EQ(PivotScore({"a"}, {"a"}, zero), 0.0);
}

TEST(PivotScoreTest, RangeAndSymmetry) {
  std::mt19937_64 rng(3);
  IdfTable idf;
  for (int w = 0; w < 12; ++w) {
    idf["v" + std::to_string(w)] = std::uniform_real_distribution<double>(0.0, 3.0)(rng);
  }
  auto random_set = [&] {
    std::set<std::string> s;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) s.insert("v" + std::to_string(rng() % 12));
    return std::vector<std::string>(s.begin(), s.end());
  };
  for (int trial = 0; trial < 2000; ++trial) {
    auto a = random_set(), b = random_set();
    const double ab = PivotScore(a, b, idf);
    EXPECT_EQ(ab, PivotScore(b, a, idf));
    EXPECT_GE(ab, 0.0);
    EXPECT_LE(ab, 1.0 + 1e-15);
    if (a != b) {
      EXPECT_LT(ab, 1.0);
    }
  }
}

TEST(PivotBuildTest, SingleForcedMatch) {
  auto d = BuildPivotDictionary(Side({{"casa", {"home"}}}), Side({{"home_it", {"home"}}}), 5);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.entries()[0], (SeedEntry{"casa", "home_it"}));
  EXPECT_EQ(d.id(), "DicPi");
}

TEST(PivotBuildTest, TopNKeepsBest) {
  auto src = Side({{"s1", {"a", "b"}}, {"s2", {"c", "d"}}, {"s3", {"e", "f"}}});
  auto tgt = Side({{"t1", {"a", "b"}}, {"t2", {"c", "x"}}, {"t3", {"e", "y", "z"}}});
  auto ranked = RankPivotCandidates(src, tgt, 3);
  ASSERT_EQ(ranked.size(), 3u);
  auto d = BuildPivotDictionary(src, tgt, 1);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d.entries()[0], (SeedEntry{"s1", "t1"}));
}

TEST(PivotBuildTest, TieGoesToSmallerTarget) {
  auto src = Side({{"s", {"a"}}});
  auto tgt = Side({{"tb", {"a"}}, {"ta", {"a"}}});
  auto d = BuildPivotDictionary(src, tgt, 5);
  EXPECT_EQ(*d.find("s"), "ta");
}

TEST(PivotBuildTest, Errors) {
  auto src = Side({{"s", {"a"}}});
  EXPECT_THROW(BuildPivotDictionary(src, Side({{"t", {"b"}}}), 5), DataError);
  EXPECT_THROW(BuildPivotDictionary(src, Side({{"t", {"a"}}}), 0), ConfigError);
}

TEST(PivotLoadTest, Orientations) {
  auto head_first = LoadPivotSide(testing::WriteTempFile("pv1.tsv", "casa\thome house\ncasa\tdwelling\n"),
                                  {}, PivotOrientation::kHeadwordFirst);
  EXPECT_EQ(head_first.entries().at("casa"),
            (std::vector<std::string>{"dwelling", "home", "house"}));
  auto pivot_first = LoadPivotSide(testing::WriteTempFile("pv2.tsv", "home\tcasa_it abitazione\n"),
                                   {}, PivotOrientation::kPivotFirst);
  EXPECT_EQ(pivot_first.entries().at("abitazione"), (std::vector<std::string>{"home"}));
  EXPECT_EQ(pivot_first.size(), 2u);
}

TEST(PivotBuildTest, MatchesBruteForceAndIgnoresInputOrder) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 30; ++trial) {
    Raw pr, it;
    const int n = 5 + static_cast<int>(rng() % 60);
    auto desc = [&] {
      std::vector<std::string> d;
      const int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) d.push_back("p" + std::to_string(rng() % 40));
      return d;
    };
    for (int i = 0; i < n; ++i) pr["s" + std::to_string(rng() % 200)] = desc();
    for (int i = 0; i < n; ++i) it["t" + std::to_string(rng() % 200)] = desc();
    auto src = Side(pr), tgt = Side(it);
    const auto idf = ComputeIdf(src, tgt);

    std::vector<PivotCandidate> best;
    for (const auto& [s, sd] : src.entries()) {
      std::optional<PivotCandidate> pick;
      for (const auto& [t, td] : tgt.entries()) {
        bool shares = false;
        for (const auto& w : sd) shares |= std::binary_search(td.begin(), td.end(), w);
        if (!shares) continue;
        const double score = PivotScore(sd, td, idf);
        if (!pick || score > pick->score) pick = PivotCandidate{s, t, score};
      }
      if (pick) best.push_back(*pick);
    }
    if (best.empty()) continue;
    std::sort(best.begin(), best.end(), [](const auto& a, const auto& b) {
      return a.score != b.score ? a.score > b.score : a.source < b.source;
    });
    const std::size_t top_n = 1 + rng() % best.size();
    best.resize(top_n);

    for (unsigned threads : {1u, 3u}) {
      auto got = RankPivotCandidates(src, tgt, top_n, threads);
      ASSERT_EQ(got.size(), best.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        EXPECT_EQ(got[i].source, best[i].source);
        EXPECT_EQ(got[i].target, best[i].target);
        EXPECT_EQ(got[i].score, best[i].score);
      }
    }
  }
}

}  // namespace
}  // namespace lexind
