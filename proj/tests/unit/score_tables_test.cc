#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "morphdis/score_tables.h"
#include "morphdis/synthetic.h"
#include "support/oracles.h"

namespace morphdis {
namespace {

std::vector<ParseStats> Table(std::vector<std::pair<int64_t, int64_t>> inc_count) {
  std::vector<ParseStats> out;
  for (size_t i = 0; i < inc_count.size(); ++i) {
    out.push_back({inc_count[i].first, inc_count[i].second, "p" + std::to_string(i)});
  }
  return out;
}

TEST(ChooseScore, TwoParseExample) {
  // Parse A: seen 10 times, 4 of them in the context; parse B: 2 and 1.
  auto t = Table({{4, 10}, {1, 2}});
  EXPECT_DOUBLE_EQ(*ChooseScore(t, 0), -1.0);
  EXPECT_DOUBLE_EQ(*ChooseScore(t, 1), 0.2);
}

TEST(ChooseScore, UnseenParseHasNoScore) {
  auto t = Table({{0, 0}, {3, 5}});
  EXPECT_FALSE(ChooseScore(t, 0).has_value());
  // Without a usable competitor the score is the raw in-context count.
  EXPECT_DOUBLE_EQ(*ChooseScore(t, 1), 3.0);
}

TEST(ChooseScore, PmaxTieGoesToLargerCount) {
  auto t = Table({{5, 10}, {1, 2}, {2, 4}});
  ASSERT_TRUE(SelectPmax(t, 0));
  EXPECT_EQ(*SelectPmax(t, 0), 2u);
}

TEST(DeleteScore, LowNormalizedFrequencyIsVictim) {
  // 1 of 50 occurrences in context versus 5 of 10.
  auto t = Table({{1, 50}, {5, 10}});
  EXPECT_DOUBLE_EQ(NormalizedScore(t[0]), 0.02);
  EXPECT_DOUBLE_EQ(NormalizedScore(t[1]), 0.5);
  EXPECT_EQ(DeleteVictims(t, 0.2), std::vector<size_t>{0});
  EXPECT_TRUE(DeleteVictims(Table({{0, 5}, {0, 9}}), 0.2).empty());
}

TEST(ChooseScore, MatchesRationalOracleOnRandomTablesProperty) {
  std::mt19937_64 rng(99);
  for (int k = 0; k < 1500; ++k) {
    size_t n = 2 + rng() % 5;
    std::vector<int64_t> inc(n), cnt(n);
    std::vector<ParseStats> t(n);
    for (size_t i = 0; i < n; ++i) {
      cnt[i] = static_cast<int64_t>(rng() % 80);
      inc[i] = cnt[i] ? static_cast<int64_t>(rng() % (cnt[i] + 1)) : 0;
      t[i] = {inc[i], cnt[i], "k" + std::to_string(i)};
    }
    for (size_t i = 0; i < n; ++i) {
      auto got = ChooseScore(t, i);
      auto want = testing::BruteChooseScore(inc, cnt, i);
      ASSERT_EQ(got.has_value(), want.has_value());
      if (got) {
        double w = want->ToDouble();
        EXPECT_LE(std::fabs(*got - w), 1e-12 * std::max(1.0, std::fabs(w)));
      }
    }
    double f = 0.05 + 0.9 * static_cast<double>(rng() % 1000) / 1000.0;
    EXPECT_EQ(DeleteVictims(t, f), testing::BruteDeleteVictims(inc, cnt, f));
  }
}

TEST(ChooseScore, SignLawProperty) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 5000; ++k) {
    int64_t ca = 1 + rng() % 100, cb = 1 + rng() % 100;
    int64_t ia = rng() % (ca + 1), ib = rng() % (cb + 1);
    auto t = Table({{ia, ca}, {ib, cb}});
    bool nonneg = *ChooseScore(t, 0) >= 0.0;
    bool higher = ia * cb >= ib * ca;
    EXPECT_EQ(nonneg, higher) << ia << "/" << ca << " vs " << ib << "/" << cb;
  }
}

TEST(Shapes, GroupsAndSides) {
  EXPECT_EQ(ShapeGroup(Shape::kS1), 0);
  EXPECT_EQ(ShapeGroup(Shape::kS2R), 1);
  EXPECT_EQ(ShapeGroup(Shape::kS3), 2);
  EXPECT_EQ(ShapeGroup(Shape::kS4L), 3);
  EXPECT_EQ(ShapeSide(Shape::kS4L), Side::kLeft);
  EXPECT_EQ(ShapeSide(Shape::kS2R), Side::kRight);
  EXPECT_EQ(ShapeSide(Shape::kS3), Side::kBoth);
}

TEST(KeyViews, IgnoredAttributesAreDropped) {
  FeatureStructure p{{"cat", "noun"}, {"agr", "3SG"}, {"poss", "3SG"}, {"case", "acc"}};
  KeyOptions o;
  EXPECT_EQ(SlotView(p, kLc, o).ToString(), "[cat:noun,agr:'3SG',case:acc]");
  EXPECT_EQ(SlotView(p, kRc, o).ToString(), "[cat:noun,agr:'3SG',poss:'3SG']");
  EXPECT_EQ(TargetView(p, Side::kLeft, o).ToString(), "[cat:noun,agr:'3SG',poss:'3SG']");
  EXPECT_EQ(TargetView(p, Side::kBoth, o), p);
  EXPECT_EQ(TargetView(p, Side::kLeft, KeyOptions::Exact()), p);
}

// Every table entry the corpus can produce equals a full rescan.
TEST(ScoreTables, BuildMatchesBruteCountsProperty) {
  static const std::vector<Shape> kShapes(kAllShapes.begin(), kAllShapes.end());
  for (const KeyOptions& opts : {KeyOptions{}, KeyOptions::Exact()}) {
    for (uint64_t seed = 1; seed <= 15; ++seed) {
      RandomCorpusOptions ro;
      ro.seed = seed;
      ro.max_parses = 2;
      Corpus c = RandomCorpus(ro);
      ScoreTables t = ScoreTables::Build(c, opts);
      for (const Sentence& s : c.sentences) {
        for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
          for (const FeatureStructure& p : s.tokens[i].parses) {
            for (Side side : {Side::kLeft, Side::kRight, Side::kBoth}) {
              std::string k = TargetView(p, side, opts).ToString();
              EXPECT_EQ(t.Count(side, k), testing::BruteCount(c, side, k, opts));
            }
            for (const ContextKey& ctx : ContextsAt(s, i, opts, kShapes)) {
              std::string k = TargetView(p, ShapeSide(ctx.shape), opts).ToString();
              EXPECT_EQ(t.InContext(ctx.Key(), k), testing::BruteInContext(c, ctx, k, opts));
            }
          }
        }
      }
    }
  }
}

TEST(ScoreTables, RemovingAndReaddingACenterRestoresTables) {
  RandomCorpusOptions ro;
  ro.seed = 8;
  Corpus c = RandomCorpus(ro);
  ScoreTables t = ScoreTables::Build(c, KeyOptions{});
  const ScoreTables original = t;
  const Sentence& s = c.sentences[0];
  for (size_t i = s.body_begin(); i < s.body_end(); ++i) t.AddCenter(s, i, -1);
  EXPECT_FALSE(t == original);
  for (size_t i = s.body_begin(); i < s.body_end(); ++i) t.AddCenter(s, i, +1);
  EXPECT_TRUE(t == original);
}

TEST(ContextsAt, DerivedRightNeighborAddsStemContext) {
  Sentence s = Sentence::FromBody({
      AmbiguousToken{"x", {FeatureStructure{{"cat", "noun"}}, FeatureStructure{{"cat", "verb"}}}, 0},
      AmbiguousToken{"y", {FeatureStructure{{"cat", "verb"},
                                            {"stem", FeatureStructure{{"cat", "postp"}, {"root", "iCin"}}},
                                            {"suffix", "none"}}}, 0},
  });
  auto cs = ContextsAt(s, 1, KeyOptions{}, {Shape::kS4R});
  ASSERT_EQ(cs.size(), 2u);
  EXPECT_FALSE(cs[0].via_stem);
  EXPECT_TRUE(cs[1].via_stem);
  EXPECT_EQ(cs[1].slots[kRc]->ToString(), "[cat:postp,root:iCin]");
}

}  // namespace
}  // namespace morphdis
