#include <gtest/gtest.h>

#include <random>

#include "morphdis/corpus_io.h"
#include "morphdis/synthetic.h"
#include "morphdis/term.h"
#include "support/oracles.h"

namespace morphdis {
namespace {

class FixtureRoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(FixtureRoundTrip, CorpusFileIsReproducedByteForByte) {
  std::string text = ReadTextFile(testing::FixturePath(GetParam()));
  std::vector<std::string> warnings;
  Corpus c = ParseCorpusText(text, &warnings);
  EXPECT_EQ(SerializeCorpus(c), text);
  EXPECT_TRUE(warnings.empty()) << warnings.front();
}

INSTANTIATE_TEST_SUITE_P(Corpora, FixtureRoundTrip,
                         ::testing::Values("sample_preprocessed.corpus",
                                           "sample_disambiguated.corpus",
                                           "worked_ambiguous.corpus", "worked_gold.corpus",
                                           "worked_system.corpus"));

TEST(CorpusIo, SampleCorpusShape) {
  Corpus c = ReadCorpusFile(testing::FixturePath("sample_preprocessed.corpus"));
  EXPECT_EQ(c.BodyTokenCount(), 175u);
  for (const Sentence& s : c.sentences) {
    EXPECT_TRUE(IsMarker(s.tokens.front()));
    EXPECT_TRUE(IsMarker(s.tokens.back()));
  }
}

TEST(CorpusIo, FlagsAndMetadataRoundTrip) {
  Corpus c;
  c.metadata.header_comments = {"made by hand"};
  c.metadata.analyzer_calls = 7;
  AmbiguousToken t;
  t.surface = "blork";
  t.parses = {FeatureStructure{{"cat", "noun"}, {"root", "blork"}}};
  t.flags = kFlagUnknown | kFlagGuessed;
  AmbiguousToken u;
  u.surface = "zzz";
  u.flags = kFlagUnknown;
  c.sentences.push_back(Sentence::FromBody({t, u}));
  std::string text = SerializeCorpus(c);
  Corpus back = ParseCorpusText(text);
  EXPECT_EQ(back.sentences, c.sentences);
  EXPECT_EQ(back.metadata.analyzer_calls, 7);
  EXPECT_EQ(SerializeCorpus(back), text);
}

TEST(CorpusIo, RandomCorporaRoundTripProperty) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    RandomCorpusOptions o;
    o.seed = seed;
    Corpus c = RandomCorpus(o);
    Corpus back = ParseCorpusText(SerializeCorpus(c));
    EXPECT_EQ(back.sentences, c.sentences) << seed;
  }
}

TEST(CorpusIo, UnknownAttributeWarnsButIsKept) {
  std::vector<std::string> w;
  Corpus c = ParseCorpusText("[[@,[[cat:beginning_of_sentence]]],[x,[[cat:noun,colour:red]]],[#,[[cat:end_of_sentence]]]].\n", &w);
  ASSERT_EQ(w.size(), 1u);
  EXPECT_NE(w[0].find("colour"), std::string::npos);
  EXPECT_EQ(*c.sentences[0].tokens[1].parses[0].FindAtom("colour"), "red");
}

TEST(CorpusIo, StructuralErrorsCarryPositions) {
  try {
    ParseCorpusText("[[@,[[cat:beginning_of_sentence]]],\n [x,[[cat:noun]]]].\n");
    FAIL() << "missing end marker accepted";
  } catch (const FormatError& e) {
    EXPECT_TRUE(e.has_pos());
    EXPECT_EQ(e.pos().line, 2);
  }
  EXPECT_THROW(ParseCorpusText("[[@,[[cat:beginning_of_sentence]]],[x,[[cat:noun]],[shiny]],"
                               "[#,[[cat:end_of_sentence]]]]."),
               FormatError);
  EXPECT_THROW(ParseCorpusText("[[@,[[cat:beginning_of_sentence]]],[x,[[cat:noun]]"),
               FormatError);
}

}  // namespace
}  // namespace morphdis
