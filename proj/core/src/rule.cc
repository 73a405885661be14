#include "morphdis/rule.h"

#include <cstdio>
#include <regex>

#include "morphdis/corpus_io.h"

namespace morphdis {

namespace {

std::string SlotText(const std::optional<Constraint>& c) {
  return c ? "[" + c->ToString() + "]" : "[]";
}

void ParseLearnedComment(ConstraintRule* rule) {
  static const std::regex kPattern(
      R"(^score=([-+0-9.eE]+) iteration=([0-9]+)$)");
  std::smatch m;
  if (std::regex_match(rule->trailing_comment, m, kPattern)) {
    rule->score = std::stod(m[1].str());
    rule->iteration = std::stoi(m[2].str());
  }
}

ConstraintRule RuleFromTerm(const Term& term,
                            std::vector<std::string>* warnings) {
  if (!term.is_list()) throw FormatError("rule must be a list", term.pos);
  ConstraintRule rule;
  bool seen_slot[kNumSlots] = {false, false, false, false};
  bool have_target = false;
  std::optional<std::string> outer_token;
  for (const Term& item : term.items) {
    if (!item.is_pair()) throw FormatError("expected key:value", item.pos);
    const std::string& key = item.text;
    int slot = -1;
    for (int s = 0; s < kNumSlots; ++s) {
      if (key == kSlotName[s]) slot = s;
    }
    if (slot >= 0) {
      if (seen_slot[slot]) throw FormatError("duplicate slot " + key, item.pos);
      seen_slot[slot] = true;
      const Term& v = item.value();
      if (!v.is_list()) throw FormatError("slot must be a list", v.pos);
      if (v.items.size() > 1) {
        throw FormatError("slot holds at most one constraint", v.pos);
      }
      if (v.items.size() == 1) {
        rule.context[slot] = ConstraintFromTerm(v.items[0], warnings);
      }
    } else if (key == "choose" || key == "delete") {
      if (have_target) throw FormatError("rule has two targets", item.pos);
      have_target = true;
      rule.kind = key == "choose" ? RuleKind::kChoose : RuleKind::kDelete;
      rule.target = ConstraintFromTerm(item.value(), warnings);
    } else if (key == "token") {
      if (!item.value().is_atom() || outer_token) {
        throw FormatError("bad token condition", item.pos);
      }
      outer_token = item.value().text;
    } else {
      throw FormatError("unknown rule key '" + key + "'", item.pos);
    }
  }
  if (!have_target) throw FormatError("rule lacks choose/delete", term.pos);
  if (outer_token) {
    if (rule.target.token && *rule.target.token != *outer_token) {
      throw FormatError("conflicting token conditions", term.pos);
    }
    rule.target.token = outer_token;
  }
  return rule;
}

}  // namespace

std::string_view RuleKindName(RuleKind kind) {
  return kind == RuleKind::kChoose ? "choose" : "delete";
}

bool ConstraintRule::context_free() const {
  for (const auto& c : context) {
    if (c) return false;
  }
  return true;
}

int ConstraintRule::ConstrainedSlotCount() const {
  int n = 0;
  for (const auto& c : context) n += c ? 1 : 0;
  return n;
}

std::string ConstraintRule::ToString() const {
  Constraint bare = target;
  bare.token.reset();
  std::string kind_text(RuleKindName(kind));
  std::string out = "[";
  if (context_free()) {
    out += kind_text + ":" + bare.ToString();
  } else {
    out += "llc:" + SlotText(context[kLlc]) + ",lc:" + SlotText(context[kLc]) +
           "," + kind_text + ":" + bare.ToString() +
           ",rc:" + SlotText(context[kRc]) + ",rrc:" + SlotText(context[kRrc]);
  }
  if (target.token) out += ",token:" + QuoteAtom(*target.token);
  out += "]";
  return out;
}

bool ConstraintRule::SameContent(const ConstraintRule& other) const {
  return kind == other.kind && context == other.context &&
         target == other.target;
}

std::vector<ConstraintRule> RuleSet::OfKind(RuleKind kind) const {
  std::vector<ConstraintRule> out;
  for (const ConstraintRule& r : rules) {
    if (r.kind == kind) out.push_back(r);
  }
  return out;
}

ConstraintRule ParseRule(std::string_view text,
                         std::vector<std::string>* warnings) {
  return RuleFromTerm(TermReader::ParseSingle(text), warnings);
}

RuleSet ParseRules(std::string_view text, std::vector<std::string>* warnings) {
  RuleSet set;
  TermReader reader(text);
  Clause clause;
  while (reader.Next(&clause)) {
    ConstraintRule rule = RuleFromTerm(clause.term, warnings);
    rule.comments = std::move(clause.leading_comments);
    rule.blank_line_before = clause.blank_line_before;
    rule.trailing_comment = std::move(clause.trailing_comment);
    ParseLearnedComment(&rule);
    set.rules.push_back(std::move(rule));
  }
  set.tail_comments = reader.tail_comments();
  return set;
}

std::string SerializeRules(const RuleSet& set) {
  std::string out;
  for (const ConstraintRule& r : set.rules) {
    if (r.blank_line_before && !out.empty()) out += "\n";
    for (const std::string& c : r.comments) {
      out += c.empty() ? "%\n" : "% " + c + "\n";
    }
    out += r.ToString() + ".";
    if (!r.trailing_comment.empty()) out += " % " + r.trailing_comment;
    out += "\n";
  }
  for (const std::string& c : set.tail_comments) {
    out += c.empty() ? "%\n" : "% " + c + "\n";
  }
  return out;
}

RuleSet ReadRuleFile(const std::string& path,
                     std::vector<std::string>* warnings) {
  std::string text = ReadTextFile(path);
  try {
    return ParseRules(text, warnings);
  } catch (const FormatError& e) {
    throw FormatError(path + ":" + e.what());
  }
}

void WriteRuleFile(const std::string& path, const RuleSet& rules) {
  WriteTextFile(path, SerializeRules(rules));
}

std::string LearnedRuleComment(double score, int iteration) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "score=%.6g iteration=%d", score, iteration);
  return buf;
}

}  // namespace morphdis
