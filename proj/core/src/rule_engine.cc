#include "morphdis/rule_engine.h"

#include <algorithm>

namespace morphdis {

namespace {

bool SlotAccepts(const Constraint& c, const AmbiguousToken& tok,
                 const FeatureStructure& parse, int slot, ApplicationMode mode) {
  if (Subsumes(c, parse, tok.surface)) return true;
  if (mode == ApplicationMode::kStrict && slot == kRc) {
    const FeatureStructure* stem = parse.FindNested("stem");
    return stem != nullptr && Subsumes(c, *stem, tok.surface);
  }
  return false;
}

std::vector<size_t> MatchingParses(const Constraint& c, const AmbiguousToken& tok) {
  std::vector<size_t> out;
  for (size_t k = 0; k < tok.parses.size(); ++k) {
    if (Subsumes(c, tok.parses[k], tok.surface)) out.push_back(k);
  }
  return out;
}

void KeepOnly(AmbiguousToken* tok, const std::vector<size_t>& keep) {
  std::vector<FeatureStructure> parses;
  parses.reserve(keep.size());
  for (size_t k : keep) parses.push_back(std::move(tok->parses[k]));
  tok->parses = std::move(parses);
}

}  // namespace

std::optional<ContextBinding> MatchContext(const ConstraintRule& rule,
                                           const Sentence& sentence, size_t i,
                                           ApplicationMode mode) {
  ContextBinding binding;
  for (int slot = 0; slot < kNumSlots; ++slot) {
    const std::optional<Constraint>& c = rule.context[slot];
    if (!c) continue;
    long pos = static_cast<long>(i) + kSlotOffset[slot];
    if (pos < 0 || pos >= static_cast<long>(sentence.size())) return std::nullopt;
    const AmbiguousToken& tok = sentence.tokens[pos];
    if (mode == ApplicationMode::kStrict && !tok.unambiguous()) return std::nullopt;
    for (size_t k = 0; k < tok.parses.size(); ++k) {
      if (SlotAccepts(*c, tok, tok.parses[k], slot, mode)) {
        binding.matches[slot].push_back(k);
      }
    }
    if (binding.matches[slot].empty()) return std::nullopt;
  }
  return binding;
}

bool ApplyChoose(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 const ContextBinding& binding, ApplicationMode mode) {
  AmbiguousToken& tok = sentence->tokens[i];
  std::vector<size_t> chosen = MatchingParses(rule.target, tok);
  if (chosen.empty() || chosen.size() == tok.parses.size()) return false;
  KeepOnly(&tok, chosen);
  if (mode == ApplicationMode::kHandCrafted) {
    for (int slot = 0; slot < kNumSlots; ++slot) {
      if (!rule.context[slot]) continue;
      AmbiguousToken& n = sentence->tokens[i + kSlotOffset[slot]];
      const std::vector<size_t>& m = binding.matches[slot];
      if (m.size() < n.parses.size()) KeepOnly(&n, m);
    }
  }
  return true;
}

bool ApplyDelete(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 const ContextBinding& /*binding*/) {
  AmbiguousToken& tok = sentence->tokens[i];
  std::vector<size_t> doomed = MatchingParses(rule.target, tok);
  if (doomed.empty() || doomed.size() == tok.parses.size()) return false;
  std::vector<size_t> keep;
  for (size_t k = 0; k < tok.parses.size(); ++k) {
    if (!std::binary_search(doomed.begin(), doomed.end(), k)) keep.push_back(k);
  }
  KeepOnly(&tok, keep);
  return true;
}

bool ApplyRuleAt(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 ApplicationMode mode) {
  if (!sentence->tokens[i].ambiguous()) return false;
  std::optional<ContextBinding> b = MatchContext(rule, *sentence, i, mode);
  if (!b) return false;
  return rule.kind == RuleKind::kChoose ? ApplyChoose(rule, sentence, i, *b, mode)
                                        : ApplyDelete(rule, sentence, i, *b);
}

ApplyReport ApplyRuleset(const std::vector<ConstraintRule>& rules,
                         Sentence* sentence, ApplicationMode mode) {
  ApplyReport report;
  report.fired.assign(rules.size(), 0);
  report.matched.assign(rules.size(), 0);
  if (rules.empty()) return report;
  bool changed = true;
  while (changed) {
    changed = false;
    ++report.sweeps;
    for (size_t r = 0; r < rules.size(); ++r) {
      const ConstraintRule& rule = rules[r];
      for (size_t i = sentence->body_begin(); i < sentence->body_end(); ++i) {
        if (!sentence->tokens[i].ambiguous()) continue;
        std::optional<ContextBinding> b = MatchContext(rule, *sentence, i, mode);
        if (!b) continue;
        if (report.sweeps == 1 && !MatchingParses(rule.target, sentence->tokens[i]).empty()) {
          ++report.matched[r];
        }
        bool hit = rule.kind == RuleKind::kChoose
                       ? ApplyChoose(rule, sentence, i, *b, mode)
                       : ApplyDelete(rule, sentence, i, *b);
        if (hit) {
          ++report.changes;
          ++report.fired[r];
          changed = true;
        }
      }
    }
  }
  return report;
}

ApplyReport ApplyRuleset(const std::vector<ConstraintRule>& rules, Corpus* corpus,
                         ApplicationMode mode) {
  ApplyReport total;
  total.fired.assign(rules.size(), 0);
  total.matched.assign(rules.size(), 0);
  for (Sentence& s : corpus->sentences) {
    ApplyReport r = ApplyRuleset(rules, &s, mode);
    total.changes += r.changes;
    total.sweeps = std::max(total.sweeps, r.sweeps);
    for (size_t k = 0; k < rules.size(); ++k) {
      total.fired[k] += r.fired[k];
      total.matched[k] += r.matched[k];
    }
  }
  return total;
}

}  // namespace morphdis
