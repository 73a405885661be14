#include <gtest/gtest.h>

#include "morphdis/corpus_io.h"
#include "morphdis/pipeline.h"
#include "morphdis/projection.h"
#include "morphdis/synthetic.h"
#include "morphdis/term.h"
#include "support/oracles.h"

namespace morphdis {
namespace {

PipelineConfig FullConfig() {
  PipelineConfig c;
  c.rule_files = {testing::FixturePath("handcrafted_choose.rules"),
                  testing::FixturePath("handcrafted_delete.rules")};
  c.learned_choose = testing::FixturePath("learned_choose.rules");
  c.learned_delete = testing::FixturePath("learned_delete.rules");
  return c;
}

std::vector<size_t> Counts(const Corpus& c) {
  std::vector<size_t> out;
  for (const Sentence& s : c.sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) out.push_back(s.tokens[i].parses.size());
  }
  return out;
}

TEST(PipelineConfig, ParsesKeys) {
  PipelineConfig c = PipelineConfig::Parse(
      "# comment\n"
      "stage.2.name: learned-choose\n"
      "stage.1.name: initial-choose\n"
      "stage.3.name: root-stats\n"
      "stage.3.enabled: false\n"
      "rules: a.rules, /abs/b.rules\n"
      "learned_choose: lc.rules\n"
      "context_stats.fractions: 0.5, 0.6, 0.7\n"
      "root_stats.ratio: 0.25\n"
      "learner.thresholds: 1, 2, 3, 4\n"
      "learner.damping: 0.5\n"
      "learner.delete_method: choose_scores\n"
      "learner.max_rules: 12\n",
      "/base");
  EXPECT_TRUE(c.stages_explicit);
  EXPECT_EQ(c.stages, (std::vector<Stage>{Stage::kInitialChoose, Stage::kLearnedChoose}));
  EXPECT_EQ(c.rule_files, (std::vector<std::string>{"/base/a.rules", "/abs/b.rules"}));
  EXPECT_EQ(c.learned_choose, "/base/lc.rules");
  EXPECT_EQ(c.context_stats.fractions[2], 0.7);
  EXPECT_EQ(c.root_ratio, 0.25);
  EXPECT_EQ(c.learner.thresholds[3], 4.0);
  EXPECT_EQ(c.learner.damping, 0.5);
  EXPECT_EQ(c.learner.delete_method, DeleteMethod::kChooseScores);
  EXPECT_EQ(c.learner.max_rules, 12u);
}

TEST(PipelineConfig, DefaultsRunEveryStage) {
  PipelineConfig c = PipelineConfig::Parse("");
  EXPECT_FALSE(c.stages_explicit);
  EXPECT_EQ(c.stages.size(), 6u);
  EXPECT_EQ(c.root_ratio, 0.1);
}

TEST(PipelineConfig, RejectsBadInput) {
  EXPECT_THROW(PipelineConfig::Parse("no colon here"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("mystery: 1"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("stage.x.name: initial-choose"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("stage.1.name: nonsense"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("stage.1.enabled: false"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("learner.damping: fast"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("learner.thresholds: 1, 2"), FormatError);
  EXPECT_THROW(PipelineConfig::Parse("learner.delete_method: maybe"), FormatError);
}

TEST(StageNames, RoundTrip) {
  for (Stage s : DefaultStageOrder()) EXPECT_EQ(StageFromName(StageName(s)), s);
  EXPECT_FALSE(StageFromName("bogus"));
}

TEST(LoadResources, MissingRuleFilesAreStageErrors) {
  PipelineConfig c;
  EXPECT_THROW(LoadResources(c), StageError);
  c = FullConfig();
  c.learned_delete.clear();
  EXPECT_THROW(LoadResources(c), StageError);
  c.stages = {Stage::kInitialChoose, Stage::kInitialDelete, Stage::kLearnedChoose};
  EXPECT_NO_THROW(LoadResources(c));
}

TEST(RunPipeline, DeterministicAndReportsEveryStage) {
  PipelineConfig cfg = FullConfig();
  PipelineResources res = LoadResources(cfg);
  Corpus gold = ReadCorpusFile(testing::FixturePath("sample_disambiguated.corpus"));
  Corpus a = ReadCorpusFile(testing::FixturePath("sample_preprocessed.corpus"));
  Corpus b = a;
  PipelineReport ra = RunPipeline(&a, cfg, res, &gold);
  RunPipeline(&b, cfg, res, &gold);
  EXPECT_EQ(SerializeCorpus(a), SerializeCorpus(b));
  ASSERT_EQ(ra.stages.size(), 7u);
  EXPECT_EQ(ra.stages[0].label, "BASE");
  for (const StageRow& r : ra.Rows()) EXPECT_TRUE(r.counts.has_value());
  EXPECT_LT(Ambiguity(a), ra.stages[0].row.ambiguity);
}

TEST(RunPipeline, StagesOnlyRemoveParsesProperty) {
  PipelineConfig cfg = FullConfig();
  PipelineResources res = LoadResources(cfg);
  // Duplicate parses are merged before any stage, so compare against the
  // merged input.
  Corpus base = ReadCorpusFile(testing::FixturePath("sample_preprocessed.corpus"));
  PipelineConfig none = cfg;
  none.stages.clear();
  RunPipeline(&base, none, res);
  std::vector<size_t> before = Counts(base);
  for (Stage s : DefaultStageOrder()) {
    PipelineConfig one = cfg;
    one.stages = {s};
    Corpus c = base;
    PipelineReport r = RunPipeline(&c, one, res);
    std::vector<size_t> after = Counts(c);
    ASSERT_EQ(after.size(), before.size());
    size_t removed = 0;
    for (size_t k = 0; k < after.size(); ++k) {
      EXPECT_LE(after[k], before[k]) << StageName(s);
      EXPECT_GT(after[k], 0u) << StageName(s);
      removed += before[k] - after[k];
    }
    EXPECT_EQ(r.stages.back().removed, removed) << StageName(s);
  }
}

TEST(RunPipeline, NoStagesOnlyMergesDuplicates) {
  PipelineConfig cfg = FullConfig();
  PipelineResources res = LoadResources(cfg);
  cfg.stages.clear();
  Corpus c = ReadCorpusFile(testing::FixturePath("sample_preprocessed.corpus"));
  Corpus expected = c;
  for (Sentence& s : expected.sentences) {
    for (AmbiguousToken& t : s.tokens) DedupeParses(&t.parses);
  }
  PipelineReport r = RunPipeline(&c, cfg, res);
  EXPECT_EQ(r.stages.size(), 1u);
  EXPECT_EQ(SerializeCorpus(c), SerializeCorpus(expected));
}

TEST(RunLearning, FindsPlantedRuleOnSyntheticCorpus) {
  PlantedCorpus pc = PlantedDeterminerCorpus({.min_tokens = 3000});
  PipelineConfig cfg;
  cfg.stages.clear();
  cfg.learner.max_rules = 1;
  LearnResult r = RunLearning(pc.corpus, cfg, LoadResources(cfg));
  ASSERT_EQ(r.choose.size(), 1u);
  EXPECT_TRUE(r.choose[0].SameContent(pc.planted)) << r.choose[0].ToString();
  for (const ConstraintRule& d : r.del) EXPECT_EQ(d.kind, RuleKind::kDelete);
  EXPECT_NE(FormatLearnReport(r).find("1"), std::string::npos);
}

}  // namespace
}  // namespace morphdis
