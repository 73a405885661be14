// Unsupervised learning of choose and delete rules from unambiguous
// contexts of a projected corpus.

#ifndef MORPHDIS_LEARNER_H_
#define MORPHDIS_LEARNER_H_

#include <array>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/rule.h"
#include "morphdis/score_tables.h"

namespace morphdis {

enum class DeleteMethod {
  kFraction,      // normalized score below a fraction of the best parse
  kChooseScores,  // negated choose scores; generates far more rules
};

struct LearnerConfig {
  // Score thresholds per specificity group (S1, S2, S3, S4).
  std::array<double, kNumGroups> thresholds = {7.0, 10.0, 14.0, 20.0};
  double damping = 0.9;
  // Learning stops once the S1 threshold drops below this.
  double lower_limit = 7.0;
  double delete_fraction = 0.2;
  DeleteMethod delete_method = DeleteMethod::kFraction;
  std::vector<Shape> delete_shapes = {Shape::kS2L, Shape::kS2R, Shape::kS3,
                                      Shape::kS4L, Shape::kS4R};
  KeyOptions choose_keys;
  KeyOptions delete_keys = KeyOptions::Exact();
  // Safety cap on learned choose rules; 0 means none.
  size_t max_rules = 0;
};

struct CandidateRule {
  ContextKey context;
  FeatureStructure target;
  double score = 0.0;

  std::string Key() const;
  ConstraintRule ToRule(RuleKind kind) const;
};

// Ordering inside a group: higher score, then more constrained context,
// then key order.
bool CandidateBefore(const CandidateRule& a, const CandidateRule& b);

// Best candidate of the most specific group whose best score reaches the
// group threshold.
std::optional<CandidateRule> SelectRule(const std::vector<CandidateRule>& candidates,
                                        const std::array<double, kNumGroups>& thresholds);

class ChooseLearner {
 public:
  ChooseLearner(Corpus projected, LearnerConfig config);

  // Every candidate with its score (maximum over the places it occurs).
  std::vector<CandidateRule> Candidates() const;

  // One iteration: apply the selected rule, or damp the thresholds.
  // Returns false once learning has finished.
  bool Step();
  void Run();

  bool finished() const;
  const Corpus& corpus() const { return corpus_; }
  const ScoreTables& tables() const { return tables_; }
  const std::vector<ConstraintRule>& rules() const { return rules_; }
  const std::array<double, kNumGroups>& thresholds() const { return thresholds_; }
  // Positions changed by the last applied rule, as (sentence, token).
  const std::vector<std::pair<size_t, size_t>>& last_changes() const {
    return last_changes_;
  }

 private:
  struct Site {
    ContextKey context;
    std::string context_key;
    Side side = Side::kBoth;
    std::vector<FeatureStructure> targets;
    std::vector<std::string> target_keys;
    std::vector<bool> useful;  // choosing it would change the token
  };

  std::vector<std::string> SitesOf(size_t sentence);
  void RefreshSites(size_t sentence);

  Corpus corpus_;
  LearnerConfig config_;
  ScoreTables tables_;
  std::array<double, kNumGroups> thresholds_;
  std::vector<ConstraintRule> rules_;
  std::set<std::string> banned_;
  std::vector<std::vector<std::string>> sentence_sites_;
  std::unordered_map<std::string, std::pair<Site, int>> sites_;
  std::vector<std::pair<size_t, size_t>> last_changes_;
};

std::vector<ConstraintRule> LearnChoose(const Corpus& projected,
                                        const LearnerConfig& config);

// Delete rules from a corpus projected with the finer template and already
// reduced by the earlier rule sets. Duplicate rules are emitted once.
std::vector<ConstraintRule> LearnDelete(const Corpus& projected,
                                        const LearnerConfig& config);

}  // namespace morphdis

#endif  // MORPHDIS_LEARNER_H_
