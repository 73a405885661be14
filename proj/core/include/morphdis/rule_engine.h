// Application of choose/delete rules to sentences.
//
// Hand-crafted mode lets a context slot match an ambiguous neighbor through
// any of its parses; a firing choose rule then also reduces such neighbors
// to their matching parses. Strict mode (learned rules) requires every
// constrained neighbor to be unambiguous; a derived right neighbor also
// matches through its stem.

#ifndef MORPHDIS_RULE_ENGINE_H_
#define MORPHDIS_RULE_ENGINE_H_

#include <array>
#include <optional>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/rule.h"

namespace morphdis {

enum class ApplicationMode { kHandCrafted, kStrict };

// Indices of the neighbor parses that satisfied each present slot.
struct ContextBinding {
  std::array<std::vector<size_t>, kNumSlots> matches;
};

std::optional<ContextBinding> MatchContext(const ConstraintRule& rule,
                                           const Sentence& sentence, size_t i,
                                           ApplicationMode mode);

// Both return true when some parse list changed. Neither ever empties a
// parse list.
bool ApplyChoose(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 const ContextBinding& binding, ApplicationMode mode);
bool ApplyDelete(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 const ContextBinding& binding);

// Match and apply at one position.
bool ApplyRuleAt(const ConstraintRule& rule, Sentence* sentence, size_t i,
                 ApplicationMode mode);

struct ApplyReport {
  size_t changes = 0;
  size_t sweeps = 0;  // largest sweep count over sentences, final quiet sweep included
  std::vector<size_t> fired;  // changes per rule
  // Per rule, positions in the first sweep where the context matched an
  // ambiguous token and the target selected at least one of its parses,
  // whether or not that removed anything.
  std::vector<size_t> matched;
};

// Sweeps rules in order, positions left to right, until a sweep changes
// nothing. Sentences are independent, so each runs to its own fixed point.
ApplyReport ApplyRuleset(const std::vector<ConstraintRule>& rules,
                         Sentence* sentence, ApplicationMode mode);
ApplyReport ApplyRuleset(const std::vector<ConstraintRule>& rules,
                         Corpus* corpus, ApplicationMode mode);

}  // namespace morphdis

#endif  // MORPHDIS_RULE_ENGINE_H_
