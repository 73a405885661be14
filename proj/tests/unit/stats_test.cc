#include <gtest/gtest.h>

#include "morphdis/corpus_io.h"
#include "morphdis/projection.h"
#include "morphdis/stats.h"
#include "morphdis/synthetic.h"
#include "morphdis/term.h"
#include "support/oracles.h"

namespace morphdis {
namespace {

FeatureStructure Fs(const std::string& text) {
  return FeatureStructureFromTerm(TermReader::ParseSingle(text), nullptr);
}

AmbiguousToken Tok(const std::string& surface, std::vector<std::string> parses) {
  AmbiguousToken t;
  t.surface = surface;
  for (const auto& p : parses) t.parses.push_back(Fs(p));
  return t;
}

TEST(RootStats, RareRootIsPruned) {
  RootStatsTable table;
  table.Add("alan", "noun", 40, false);
  table.Add("ala", "noun", 1, true);
  Corpus c;
  c.sentences.push_back(Sentence::FromBody({Tok("alanI", {
      "[cat:noun,root:alan,agr:'3SG',poss:'NONE',case:acc]",
      "[cat:noun,agr:'3SG',poss:'2SG',case:acc,stem:[cat:adj,root:ala],suffix:none]"})}));
  EXPECT_EQ(RootStatsPrune(&c, table, 0.1), 1u);
  ASSERT_EQ(c.sentences[0].tokens[1].parses.size(), 1u);
  EXPECT_EQ(*c.sentences[0].tokens[1].parses[0].FindAtom("root"), "alan");
}

TEST(RootStats, CloseFrequenciesSurvive) {
  RootStatsTable table;
  table.Add("alan", "noun", 40, false);
  table.Add("ala", "noun", 4, true);
  Corpus c;
  c.sentences.push_back(Sentence::FromBody({Tok("alanI", {
      "[cat:noun,root:alan,case:acc]",
      "[cat:noun,case:acc,stem:[cat:adj,root:ala],suffix:none]"})}));
  EXPECT_EQ(RootStatsPrune(&c, table, 0.1), 0u);
}

TEST(RootStats, SameRootReadingsAreLeftAlone) {
  RootStatsTable table;
  table.Add("yaz", "noun", 40, false);
  table.Add("yaz", "verb", 1, false);
  Corpus c;
  c.sentences.push_back(Sentence::FromBody({Tok("yaz", {"[cat:noun,root:yaz]", "[cat:verb,root:yaz]"})}));
  EXPECT_EQ(RootStatsPrune(&c, table, 0.1), 0u);
}

TEST(RootStats, BuildCountsUnambiguousTokensOnly) {
  Corpus c;
  c.sentences.push_back(Sentence::FromBody({
      Tok("ev", {"[cat:noun,root:ev]"}), Tok("ev", {"[cat:noun,root:ev]"}),
      Tok("tuzlu", {"[cat:adj,stem:[cat:noun,root:tuz],suffix:li]"}),
      Tok("yaz", {"[cat:noun,root:yaz]", "[cat:verb,root:yaz]"})}));
  RootStatsTable t = RootStatsTable::Build(c);
  EXPECT_EQ(t.Frequency("ev", "noun"), 2);
  EXPECT_EQ(t.Frequency("tuz", "adj"), 1);
  EXPECT_TRUE(t.entries().at({"tuz", "adj"}).derived);
  EXPECT_EQ(t.Frequency("yaz", "noun"), 0);
}

TEST(RootStats, TextFormRoundTrips) {
  RootStatsTable t;
  t.Add("alan", "noun", 40, false);
  t.Add("tuz", "adj", 3, true);
  RootStatsTable back = RootStatsTable::Parse(t.ToString());
  EXPECT_EQ(back, t);
  EXPECT_THROW(RootStatsTable::Parse("alan\tnoun\tmany\n"), FormatError);
  EXPECT_THROW(RootStatsTable::Parse("alan\tnoun\n"), FormatError);
}

TEST(ContextStats, DropsReadingUnseenInItsContext) {
  // "yaz" after a determiner and before a verb: the noun reading is the
  // only one ever seen there unambiguously.
  Corpus c;
  for (int k = 0; k < 10; ++k) {
    c.sentences.push_back(Sentence::FromBody({
        Tok("bir", {"[cat:adj,root:bir,type:determiner]"}),
        Tok("ev", {"[cat:noun,root:ev,agr:'3SG',poss:'NONE',case:nom]"}),
        Tok("geldi", {"[cat:verb,root:gel,sense:pos,tam1:past,agr:'3SG']"})}));
  }
  c.sentences.push_back(Sentence::FromBody({
      Tok("bir", {"[cat:adj,root:bir,type:determiner]"}),
      Tok("yaz", {"[cat:noun,root:yaz,agr:'3SG',poss:'NONE',case:nom]",
                  "[cat:verb,root:yaz,sense:pos,tam1:imp,agr:'2SG']"}),
      Tok("geldi", {"[cat:verb,root:gel,sense:pos,tam1:past,agr:'3SG']"})}));
  c.sentences.push_back(Sentence::FromBody({
      Tok("yaz", {"[cat:verb,root:yaz,sense:pos,tam1:imp,agr:'2SG']"})}));
  size_t removed = RunContextStats(&c, ProjectionTemplate::Stage1(), ContextStatsConfig{});
  EXPECT_EQ(removed, 1u);
  const AmbiguousToken& t = c.sentences[10].tokens[2];
  ASSERT_EQ(t.parses.size(), 1u);
  EXPECT_EQ(*t.parses[0].FindAtom("cat"), "noun");
}

TEST(ContextStats, NeverEmptiesOrGrowsTokensProperty) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomCorpusOptions o;
    o.seed = seed;
    o.sentences = 30;
    Corpus c = RandomCorpus(o);
    Corpus before = c;
    RunContextStats(&c, ProjectionTemplate::Stage1(), ContextStatsConfig{});
    for (size_t s = 0; s < c.sentences.size(); ++s) {
      for (size_t i = 0; i < c.sentences[s].size(); ++i) {
        size_t a = before.sentences[s].tokens[i].parses.size();
        size_t b = c.sentences[s].tokens[i].parses.size();
        EXPECT_LE(b, a);
        EXPECT_GT(b, 0u);
      }
    }
  }
}

}  // namespace
}  // namespace morphdis
