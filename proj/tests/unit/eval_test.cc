#include <gtest/gtest.h>

#include "morphdis/corpus_io.h"
#include "morphdis/eval.h"
#include "morphdis/projection.h"
#include "morphdis/term.h"
#include "support/oracles.h"

namespace morphdis {
namespace {

FeatureStructure Fs(const std::string& text) {
  return FeatureStructureFromTerm(TermReader::ParseSingle(text), nullptr);
}

AmbiguousToken Tok(const std::string& surface, std::vector<std::string> parses,
                   uint32_t flags = kFlagNone) {
  AmbiguousToken t;
  t.surface = surface;
  for (const auto& p : parses) t.parses.push_back(Fs(p));
  t.flags = flags;
  return t;
}

const char* kN = "[cat:noun,root:ev]";
const char* kV = "[cat:verb,root:ev]";
const char* kA = "[cat:adj,root:ev]";

TEST(Evaluate, WorkedExampleCounts) {
  Corpus sys = ReadCorpusFile(testing::FixturePath("worked_system.corpus"));
  Corpus gold = ReadCorpusFile(testing::FixturePath("worked_gold.corpus"));
  EvalCounts c = Evaluate(sys, gold);
  EXPECT_EQ(c.tokens, 4);
  EXPECT_EQ(c.received_appropriate, 3);
  EXPECT_EQ(c.all_received, 5);
  EXPECT_EQ(c.intended, 4);
  EXPECT_EQ(c.precision(), 0.6);
  EXPECT_EQ(c.recall(), 0.75);
  std::string kv = FormatEvalKeyValues(c);
  EXPECT_NE(kv.find("recall: 75.00%"), std::string::npos);
  EXPECT_NE(kv.find("precision: 60.00%"), std::string::npos);
  EXPECT_EQ(kv.find("accuracy"), std::string::npos);
}

TEST(Evaluate, UnresolvedInputHasFullRecall) {
  Corpus sys = ReadCorpusFile(testing::FixturePath("worked_ambiguous.corpus"));
  Corpus gold = ReadCorpusFile(testing::FixturePath("worked_gold.corpus"));
  EvalCounts c = Evaluate(sys, gold);
  EXPECT_EQ(c.recall(), 1.0);
  EXPECT_EQ(c.received_appropriate, c.intended);
}

TEST(Evaluate, AccuracyShownWhenOneParseEach) {
  Corpus gold = ReadCorpusFile(testing::FixturePath("worked_gold.corpus"));
  EvalCounts c = Evaluate(gold, gold);
  EXPECT_NE(FormatEvalKeyValues(c).find("accuracy: 100.00%"), std::string::npos);
}

TEST(Evaluate, UnknownTokensAreIgnoredByDefault) {
  Corpus sys, gold;
  sys.sentences.push_back(Sentence::FromBody({Tok("a", {kN}), Tok("b", {kV}, kFlagUnknown)}));
  gold.sentences.push_back(Sentence::FromBody({Tok("a", {kN}), Tok("b", {kN})}));
  EXPECT_EQ(Evaluate(sys, gold).tokens, 1);
  EXPECT_EQ(Evaluate(sys, gold).recall(), 1.0);
  EvalOptions all;
  all.ignore_unknown = false;
  EXPECT_EQ(Evaluate(sys, gold, all).tokens, 2);
  EXPECT_EQ(Evaluate(sys, gold, all).recall(), 0.5);
}

TEST(Evaluate, ProjectedComparisonIgnoresDroppedAttributes) {
  Corpus sys, gold;
  sys.sentences.push_back(Sentence::FromBody({Tok("a", {"[cat:verb,root:gel,tam1:past]"})}));
  gold.sentences.push_back(Sentence::FromBody({Tok("a", {"[cat:verb,root:gel,tam1:narr]"})}));
  EXPECT_EQ(Evaluate(sys, gold).received_appropriate, 0);
  EvalOptions o;
  o.projection = &ProjectionTemplate::Stage1();
  EXPECT_EQ(Evaluate(sys, gold, o).received_appropriate, 1);
}

TEST(Evaluate, MisalignedCorporaNameTheToken) {
  Corpus a, b;
  a.sentences.push_back(Sentence::FromBody({Tok("ev", {kN})}));
  b.sentences.push_back(Sentence::FromBody({Tok("el", {kN})}));
  try {
    Evaluate(a, b);
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("ev"), std::string::npos);
  }
}

TEST(EvaluateSentences, CountsUnambiguousAndAmbiguousCorrect) {
  Corpus sys, gold;
  sys.sentences.push_back(Sentence::FromBody({Tok("a", {kN}), Tok("b", {kV})}));
  sys.sentences.push_back(Sentence::FromBody({Tok("a", {kN, kV}), Tok("b", {kV})}));
  gold.sentences.push_back(Sentence::FromBody({Tok("a", {kN}), Tok("b", {kV})}));
  gold.sentences.push_back(Sentence::FromBody({Tok("a", {kN}), Tok("b", {kV})}));
  SentenceCounts c = EvaluateSentences(sys, gold);
  EXPECT_EQ(c.sentences, 2);
  EXPECT_EQ(c.unambiguous_correct, 1);
  EXPECT_EQ(c.ambiguous_correct, 1);
  std::string r = FormatSentenceReport(c);
  EXPECT_NE(r.find("UA/C: 50.00%"), std::string::npos);
  EXPECT_NE(r.find("UA/C+A/C: 100.00%"), std::string::npos);
}

TEST(EvaluateSentences, HistogramOfWrongTokens) {
  Corpus sys, gold;
  std::vector<AmbiguousToken> wrong, right;
  for (int k = 0; k < 5; ++k) {
    wrong.push_back(Tok("x", {kA}));
    right.push_back(Tok("x", {kN}));
  }
  sys.sentences.push_back(Sentence::FromBody({wrong.begin(), wrong.begin() + 2}));
  gold.sentences.push_back(Sentence::FromBody({right.begin(), right.begin() + 2}));
  sys.sentences.push_back(Sentence::FromBody(wrong));
  gold.sentences.push_back(Sentence::FromBody(right));
  SentenceCounts c = EvaluateSentences(sys, gold);
  EXPECT_EQ(c.wrong_histogram[1], 1);
  EXPECT_EQ(c.wrong_histogram[3], 1);
}

TEST(EvaluateUnknown, GuessedAndCorrectShares) {
  // Ten unknown words: seven got guesses, five of them kept the right one.
  std::vector<AmbiguousToken> sys_body, gold_body;
  for (int k = 0; k < 10; ++k) {
    gold_body.push_back(Tok("w", {kN}));
    if (k < 5) {
      sys_body.push_back(Tok("w", {kN, kA}, kFlagUnknown | kFlagGuessed));
    } else if (k < 7) {
      sys_body.push_back(Tok("w", {kA}, kFlagUnknown | kFlagGuessed));
    } else {
      sys_body.push_back(Tok("w", {}, kFlagUnknown));
    }
  }
  Corpus sys, gold;
  sys.sentences.push_back(Sentence::FromBody(sys_body));
  gold.sentences.push_back(Sentence::FromBody(gold_body));
  UnknownCounts c = EvaluateUnknown(sys, gold);
  EXPECT_EQ(c.unknown, 10);
  EXPECT_EQ(c.parsed, 7);
  EXPECT_EQ(c.correct, 5);
  std::string r = FormatUnknownReport(c);
  EXPECT_NE(r.find("PU/U: 70.00%"), std::string::npos);
  EXPECT_NE(r.find("CD/U: 50.00%"), std::string::npos);
}

TEST(Percent, HandlesEmptyDenominator) {
  EXPECT_EQ(Percent(0, 0), "-");
  EXPECT_EQ(Percent(2, 3), "66.67%");
}

TEST(StageTable, ListsEveryStage) {
  std::vector<StageRow> rows = {{"BASE", 1.846, EvalCounts{4, 4, 4, 8}},
                                {"initial-choose", 1.25, std::nullopt}};
  std::string t = FormatStageTable(rows);
  EXPECT_NE(t.find("Stage"), std::string::npos);
  EXPECT_NE(t.find("1.846"), std::string::npos);
  EXPECT_NE(t.find("50.00%"), std::string::npos);
  EXPECT_NE(t.find("initial-choose"), std::string::npos);
}

}  // namespace
}  // namespace morphdis
