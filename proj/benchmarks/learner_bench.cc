#include <benchmark/benchmark.h>

#include "morphdis/learner.h"
#include "morphdis/projection.h"
#include "morphdis/score_tables.h"
#include "morphdis/synthetic.h"

namespace morphdis {
namespace {

void BM_BuildScoreTables(benchmark::State& state) {
  PlantedGrammarOptions po;
  po.min_tokens = static_cast<size_t>(state.range(0));
  Corpus projected = ProjectCorpus(PlantedDeterminerCorpus(po).corpus, ProjectionTemplate::Stage1());
  for (auto _ : state) {
    ScoreTables t = ScoreTables::Build(projected, KeyOptions{});
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * projected.BodyTokenCount()));
}
BENCHMARK(BM_BuildScoreTables)->Arg(2000)->Arg(20000);

void BM_ChooseScore(benchmark::State& state) {
  std::vector<ParseStats> parses = {{10, 40, "a"}, {3, 7, "b"}, {0, 2, "c"}, {9, 90, "d"}};
  for (auto _ : state) {
    for (size_t i = 0; i < parses.size(); ++i) benchmark::DoNotOptimize(ChooseScore(parses, i));
  }
}
BENCHMARK(BM_ChooseScore);

void BM_LearnerFirstRule(benchmark::State& state) {
  PlantedGrammarOptions po;
  po.min_tokens = static_cast<size_t>(state.range(0));
  Corpus projected = ProjectCorpus(PlantedDeterminerCorpus(po).corpus, ProjectionTemplate::Stage1());
  LearnerConfig cfg;
  cfg.max_rules = 1;
  for (auto _ : state) {
    std::vector<ConstraintRule> rules = LearnChoose(projected, cfg);
    benchmark::DoNotOptimize(rules);
  }
}
BENCHMARK(BM_LearnerFirstRule)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_LearnChooseToCompletion(benchmark::State& state) {
  RandomCorpusOptions o;
  o.sentences = static_cast<size_t>(state.range(0));
  o.seed = 3;
  Corpus projected = ProjectCorpus(RandomCorpus(o), ProjectionTemplate::Stage1());
  LearnerConfig cfg;
  cfg.thresholds = {2, 2, 2, 2};
  cfg.lower_limit = 1;
  cfg.damping = 0.7;
  for (auto _ : state) {
    std::vector<ConstraintRule> rules = LearnChoose(projected, cfg);
    benchmark::DoNotOptimize(rules);
  }
}
BENCHMARK(BM_LearnChooseToCompletion)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace morphdis
