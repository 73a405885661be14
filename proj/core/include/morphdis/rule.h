// Choose/delete constraint rules and their text form:
//   [llc:[...],lc:[...],choose:[...],rc:[...],rrc:[...],token:w].
// Each context slot is `[]` (unconstrained) or `[[pattern]]`.

#ifndef MORPHDIS_RULE_H_
#define MORPHDIS_RULE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/constraint.h"

namespace morphdis {

enum class RuleKind { kChoose, kDelete };

// Context slots by offset from the target: -2, -1, +1, +2.
enum Slot : int { kLlc = 0, kLc = 1, kRc = 2, kRrc = 3 };
inline constexpr int kNumSlots = 4;
inline constexpr std::array<int, kNumSlots> kSlotOffset = {-2, -1, 1, 2};
inline constexpr std::array<std::string_view, kNumSlots> kSlotName = {
    "llc", "lc", "rc", "rrc"};

std::string_view RuleKindName(RuleKind kind);

struct ConstraintRule {
  RuleKind kind = RuleKind::kChoose;
  std::array<std::optional<Constraint>, kNumSlots> context;
  // Target pattern; its token condition restricts the target surface.
  Constraint target;

  // Bookkeeping carried through files.
  std::vector<std::string> comments;
  bool blank_line_before = false;
  std::string trailing_comment;
  std::optional<double> score;
  std::optional<int> iteration;

  bool context_free() const;
  int ConstrainedSlotCount() const;

  // Canonical single-line text without the terminating '.'.
  std::string ToString() const;

  // Equality on rule content (kind, context, target), ignoring bookkeeping.
  bool SameContent(const ConstraintRule& other) const;
};

struct RuleSet {
  std::vector<ConstraintRule> rules;
  std::vector<std::string> tail_comments;

  std::vector<ConstraintRule> OfKind(RuleKind kind) const;
};

ConstraintRule ParseRule(std::string_view text,
                         std::vector<std::string>* warnings = nullptr);
RuleSet ParseRules(std::string_view text,
                   std::vector<std::string>* warnings = nullptr);
std::string SerializeRules(const RuleSet& rules);

RuleSet ReadRuleFile(const std::string& path,
                     std::vector<std::string>* warnings = nullptr);
void WriteRuleFile(const std::string& path, const RuleSet& rules);

// Formats the score/iteration comment attached to learned rules.
std::string LearnedRuleComment(double score, int iteration);

}  // namespace morphdis

#endif  // MORPHDIS_RULE_H_
