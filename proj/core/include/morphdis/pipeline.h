// Stage orchestration for disambiguation and rule learning, and the flat
// key:value configuration that drives it.

#ifndef MORPHDIS_PIPELINE_H_
#define MORPHDIS_PIPELINE_H_

#include <optional>
#include <utility>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/eval.h"
#include "morphdis/learner.h"
#include "morphdis/projection.h"
#include "morphdis/rule.h"
#include "morphdis/stats.h"

namespace morphdis {

enum class Stage {
  kInitialChoose,
  kInitialDelete,
  kContextStats,
  kRootStats,
  kLearnedChoose,
  kLearnedDelete,
};

std::string_view StageName(Stage stage);
std::optional<Stage> StageFromName(std::string_view name);
std::vector<Stage> DefaultStageOrder();

// Raised when an enabled stage cannot run (missing input, bad rule file).
class StageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PipelineConfig {
  std::vector<Stage> stages = DefaultStageOrder();
  bool stages_explicit = false;  // set when the config named stages
  // Hand-crafted rule files; choose rules feed initial-choose and delete
  // rules feed initial-delete, whatever file they come from.
  std::vector<std::string> rule_files;
  std::string learned_choose;
  std::string learned_delete;
  std::string root_stats;  // prebuilt table; built from the text when empty
  std::string collocations;
  std::string suffixes;
  std::string lexicon;
  std::string template_stage1;  // context statistics and choose learning
  std::string template_stage2;  // delete learning
  ContextStatsConfig context_stats;
  double root_ratio = 0.1;
  LearnerConfig learner;

  // Keys: `stage.N.name` (N orders the stages; `stage.N.enabled: false`
  // skips one), `rules` (repeatable), `learned_choose`, `learned_delete`,
  // `root_stats`, `collocations`, `suffixes`, `lexicon`, `template.stage1`,
  // `template.stage2`, `context_stats.weights`, `context_stats.fractions`,
  // `root_stats.ratio`, `learner.thresholds`, `learner.damping`,
  // `learner.lower_limit`, `learner.delete_fraction`,
  // `learner.delete_method` (fraction|choose_scores), `learner.max_rules`.
  // Relative paths are resolved against `base_dir`.
  static PipelineConfig Parse(std::string_view text, const std::string& base_dir = "");
  static PipelineConfig Load(const std::string& path);
};

// Files named by a config, read once.
struct PipelineResources {
  RuleSet hand;
  std::optional<RuleSet> learned_choose;
  std::optional<RuleSet> learned_delete;
  std::optional<RootStatsTable> root_stats;
  ProjectionTemplate stage1 = ProjectionTemplate::Stage1();
  ProjectionTemplate stage2 = ProjectionTemplate::Stage2();
};

// Throws StageError when an enabled stage lacks its rule file.
PipelineResources LoadResources(const PipelineConfig& config);

struct StageResult {
  std::string label;
  size_t removed = 0;  // parses removed by the stage
  size_t sweeps = 0;   // rule stages only
  // Rule stages: each rule that changed something, with its change count.
  std::vector<std::pair<ConstraintRule, size_t>> fired;
  // Rule stages: rules whose context and target matched somewhere.
  std::vector<std::pair<ConstraintRule, size_t>> matched;
  StageRow row;
};

struct PipelineReport {
  std::vector<StageResult> stages;  // BASE first
  std::vector<StageRow> Rows() const;
};

double Ambiguity(const Corpus& corpus);

// Removes duplicate parses, then applies the configured stages in order.
// With a gold corpus, every row carries recall and precision.
PipelineReport RunPipeline(Corpus* corpus, const PipelineConfig& config,
                           const PipelineResources& resources,
                           const Corpus* gold = nullptr);

struct LearnResult {
  std::vector<ConstraintRule> choose;
  std::vector<ConstraintRule> del;
};

// Applies the hand-crafted rules, learns choose rules on the stage-1
// projection, applies them, then learns delete rules on the stage-2
// projection.
LearnResult RunLearning(const Corpus& corpus, const PipelineConfig& config,
                        const PipelineResources& resources);

// Two-column count table: choose rules, delete rules.
std::string FormatLearnReport(const LearnResult& result);

}  // namespace morphdis

#endif  // MORPHDIS_PIPELINE_H_
