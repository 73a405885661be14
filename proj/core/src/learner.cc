#include "morphdis/learner.h"

#include <algorithm>
#include <map>

#include "morphdis/constraint.h"
#include "morphdis/rule_engine.h"

namespace morphdis {

namespace {

size_t ConstrainedSlots(const ContextKey& c) {
  size_t n = 0;
  for (const auto& s : c.slots) n += s.has_value();
  return n;
}

size_t ContextSize(const ContextKey& c) {
  size_t n = 0;
  for (const auto& s : c.slots) {
    if (s) n += s->TotalSize();
  }
  return n;
}

// Distinct target views of the token's parses.
void TargetsOf(const AmbiguousToken& tok, Side side, const KeyOptions& opts,
               std::vector<FeatureStructure>* targets,
               std::vector<std::string>* keys) {
  for (const FeatureStructure& p : tok.parses) {
    FeatureStructure v = TargetView(p, side, opts);
    std::string k = v.ToString();
    if (std::find(keys->begin(), keys->end(), k) != keys->end()) continue;
    keys->push_back(std::move(k));
    targets->push_back(std::move(v));
  }
}

bool SubsumesAll(const FeatureStructure& pattern, const AmbiguousToken& tok) {
  for (const FeatureStructure& p : tok.parses) {
    if (!PatternSubsumes(pattern, p)) return false;
  }
  return true;
}

std::vector<ParseStats> StatsFor(const ScoreTables& t, const std::string& ctx,
                                 Side side, const std::vector<std::string>& keys) {
  std::vector<ParseStats> out;
  out.reserve(keys.size());
  for (const std::string& k : keys) {
    out.push_back({t.InContext(ctx, k), t.Count(side, k), k});
  }
  return out;
}

}  // namespace

std::string CandidateRule::Key() const {
  return context.Key() + "=>" + target.ToString();
}

ConstraintRule CandidateRule::ToRule(RuleKind kind) const {
  return context.MakeRule(kind, target);
}

bool CandidateBefore(const CandidateRule& a, const CandidateRule& b) {
  if (a.score != b.score) return a.score > b.score;
  size_t sa = ConstrainedSlots(a.context), sb = ConstrainedSlots(b.context);
  if (sa != sb) return sa > sb;
  size_t za = ContextSize(a.context), zb = ContextSize(b.context);
  if (za != zb) return za > zb;
  return a.Key() < b.Key();
}

std::optional<CandidateRule> SelectRule(
    const std::vector<CandidateRule>& candidates,
    const std::array<double, kNumGroups>& thresholds) {
  std::array<const CandidateRule*, kNumGroups> best{};
  for (const CandidateRule& c : candidates) {
    int g = ShapeGroup(c.context.shape);
    if (best[g] == nullptr || CandidateBefore(c, *best[g])) best[g] = &c;
  }
  for (int g = 0; g < kNumGroups; ++g) {
    if (best[g] != nullptr && best[g]->score >= thresholds[g]) return *best[g];
  }
  return std::nullopt;
}

ChooseLearner::ChooseLearner(Corpus projected, LearnerConfig config)
    : corpus_(std::move(projected)),
      config_(std::move(config)),
      tables_(ScoreTables::Build(corpus_, config_.choose_keys)),
      thresholds_(config_.thresholds) {
  sentence_sites_.resize(corpus_.sentences.size());
  for (size_t s = 0; s < corpus_.sentences.size(); ++s) RefreshSites(s);
}

std::vector<std::string> ChooseLearner::SitesOf(size_t si) {
  const Sentence& s = corpus_.sentences[si];
  static const std::vector<Shape> kShapes(kAllShapes.begin(), kAllShapes.end());
  std::vector<std::string> keys;
  for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
    const AmbiguousToken& tok = s.tokens[i];
    if (!tok.ambiguous()) continue;
    for (ContextKey& c : ContextsAt(s, i, config_.choose_keys, kShapes)) {
      Site site;
      site.side = ShapeSide(c.shape);
      TargetsOf(tok, site.side, config_.choose_keys, &site.targets, &site.target_keys);
      if (site.targets.size() < 2) continue;
      bool any = false;
      for (const FeatureStructure& t : site.targets) {
        bool useful = !SubsumesAll(t, tok);
        site.useful.push_back(useful);
        any = any || useful;
      }
      if (!any) continue;
      site.context_key = c.Key();
      site.context = std::move(c);
      std::string key = site.context_key;
      for (const std::string& k : site.target_keys) key += "#" + k;
      for (bool u : site.useful) key += u ? "+" : "-";
      auto [it, inserted] = sites_.try_emplace(key, std::move(site), 0);
      ++it->second.second;
      keys.push_back(std::move(key));
    }
  }
  return keys;
}

void ChooseLearner::RefreshSites(size_t si) {
  for (const std::string& key : sentence_sites_[si]) {
    auto it = sites_.find(key);
    if (--it->second.second == 0) sites_.erase(it);
  }
  sentence_sites_[si] = SitesOf(si);
}

std::vector<CandidateRule> ChooseLearner::Candidates() const {
  std::map<std::string, CandidateRule> best;
  for (const auto& [key, entry] : sites_) {
    const Site& site = entry.first;
    std::vector<ParseStats> stats =
        StatsFor(tables_, site.context_key, site.side, site.target_keys);
    for (size_t i = 0; i < stats.size(); ++i) {
      if (!site.useful[i]) continue;
      std::optional<double> score = ChooseScore(stats, i);
      if (!score) continue;
      CandidateRule c{site.context, site.targets[i], *score};
      std::string ck = c.Key();
      auto it = best.find(ck);
      if (it == best.end()) {
        best.emplace(std::move(ck), std::move(c));
      } else if (c.score > it->second.score) {
        it->second.score = c.score;
      }
    }
  }
  std::vector<CandidateRule> out;
  out.reserve(best.size());
  for (auto& [k, c] : best) out.push_back(std::move(c));
  return out;
}

bool ChooseLearner::finished() const {
  return thresholds_[0] < config_.lower_limit ||
         (config_.max_rules > 0 && rules_.size() >= config_.max_rules);
}

bool ChooseLearner::Step() {
  last_changes_.clear();
  if (finished()) return false;
  std::vector<CandidateRule> cands = Candidates();
  cands.erase(std::remove_if(cands.begin(), cands.end(),
                             [&](const CandidateRule& c) {
                               return banned_.count(c.Key()) > 0;
                             }),
              cands.end());
  std::optional<CandidateRule> pick = SelectRule(cands, thresholds_);
  if (!pick) {
    for (double& t : thresholds_) t *= config_.damping;
    return !finished();
  }
  ConstraintRule rule = pick->ToRule(RuleKind::kChoose);
  std::vector<ConstraintRule> one = {rule};
  for (size_t si = 0; si < corpus_.sentences.size(); ++si) {
    Sentence& s = corpus_.sentences[si];
    Sentence before = s;
    if (ApplyRuleset(one, &s, ApplicationMode::kStrict).changes == 0) continue;
    std::vector<bool> affected(s.size(), false);
    for (size_t p = 0; p < s.size(); ++p) {
      if (s.tokens[p].parses == before.tokens[p].parses) continue;
      last_changes_.emplace_back(si, p);
      for (long c = static_cast<long>(p) - 2; c <= static_cast<long>(p) + 2; ++c) {
        if (c >= 0 && c < static_cast<long>(s.size())) affected[c] = true;
      }
    }
    for (size_t c = 0; c < s.size(); ++c) {
      if (affected[c]) tables_.AddCenter(before, c, -1);
    }
    for (size_t c = 0; c < s.size(); ++c) {
      if (affected[c]) tables_.AddCenter(s, c, +1);
    }
    RefreshSites(si);
  }
  if (last_changes_.empty()) {
    banned_.insert(pick->Key());
    return true;
  }
  rule.score = pick->score;
  rule.iteration = static_cast<int>(rules_.size()) + 1;
  rule.trailing_comment = LearnedRuleComment(*rule.score, *rule.iteration);
  rules_.push_back(std::move(rule));
  return !finished();
}

void ChooseLearner::Run() {
  while (Step()) {
  }
}

std::vector<ConstraintRule> LearnChoose(const Corpus& projected,
                                        const LearnerConfig& config) {
  ChooseLearner learner(projected, config);
  learner.Run();
  return learner.rules();
}

std::vector<ConstraintRule> LearnDelete(const Corpus& projected,
                                        const LearnerConfig& config) {
  const KeyOptions& keys = config.delete_method == DeleteMethod::kFraction
                               ? config.delete_keys
                               : config.choose_keys;
  ScoreTables tables = ScoreTables::Build(projected, keys);
  std::vector<ConstraintRule> out;
  std::vector<std::string> seen;
  auto emit = [&](const ContextKey& c, const FeatureStructure& target, double score) {
    ConstraintRule r = c.MakeRule(RuleKind::kDelete, target);
    std::string text = r.ToString();
    if (std::find(seen.begin(), seen.end(), text) != seen.end()) return;
    seen.push_back(std::move(text));
    r.score = score;
    r.iteration = static_cast<int>(out.size()) + 1;
    r.trailing_comment = LearnedRuleComment(score, *r.iteration);
    out.push_back(std::move(r));
  };
  for (const Sentence& s : projected.sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
      const AmbiguousToken& tok = s.tokens[i];
      if (!tok.ambiguous()) continue;
      for (const ContextKey& c : ContextsAt(s, i, keys, config.delete_shapes)) {
        Side side = ShapeSide(c.shape);
        std::vector<FeatureStructure> targets;
        std::vector<std::string> target_keys;
        TargetsOf(tok, side, keys, &targets, &target_keys);
        if (targets.size() < 2) continue;
        std::vector<ParseStats> stats = StatsFor(tables, c.Key(), side, target_keys);
        if (config.delete_method == DeleteMethod::kFraction) {
          for (size_t v : DeleteVictims(stats, config.delete_fraction)) {
            if (!SubsumesAll(targets[v], tok)) {
              emit(c, targets[v], NormalizedScore(stats[v]));
            }
          }
        } else {
          double limit = config.thresholds[ShapeGroup(c.shape)];
          for (size_t v = 0; v < stats.size(); ++v) {
            std::optional<double> score = ChooseScore(stats, v);
            if (score && -*score >= limit && !SubsumesAll(targets[v], tok)) {
              emit(c, targets[v], *score);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace morphdis
