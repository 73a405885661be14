#include "morphdis/constraint.h"

#include "morphdis/corpus_io.h"

namespace morphdis {

std::string Constraint::ToString() const {
  std::string text = pattern.ToString();
  if (token) {
    text.pop_back();
    if (!pattern.empty()) text.push_back(',');
    text += "token:" + QuoteAtom(*token) + "]";
  }
  return text;
}

bool PatternSubsumes(const FeatureStructure& pattern,
                     const FeatureStructure& parse) {
  for (const FeatureStructure::Feature& f : pattern.features()) {
    const FeatureValue* have = parse.Find(f.name);
    if (f.name == "stem" && f.value.is_atom() && f.value.atom() == kNoStem) {
      if (parse.FindNested("stem") != nullptr) return false;
      continue;
    }
    if (have == nullptr) return false;
    if (f.value.is_nested()) {
      if (!have->is_nested()) return false;
      if (!PatternSubsumes(f.value.nested(), have->nested())) return false;
    } else {
      if (!have->is_atom() || have->atom() != f.value.atom()) return false;
    }
  }
  return true;
}

std::string AsciiLower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool SurfaceEquals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    char x = a[i], y = b[i];
    if (x >= 'A' && x <= 'Z') x = static_cast<char>(x - 'A' + 'a');
    if (y >= 'A' && y <= 'Z') y = static_cast<char>(y - 'A' + 'a');
    if (x != y) return false;
  }
  return true;
}

bool Subsumes(const Constraint& c, const FeatureStructure& parse,
              std::string_view surface) {
  if (c.token && !SurfaceEquals(*c.token, surface)) return false;
  return PatternSubsumes(c.pattern, parse);
}

Constraint ConstraintFromTerm(const Term& term,
                              std::vector<std::string>* warnings) {
  if (!term.is_list()) {
    throw FormatError("constraint must be a bracketed list", term.pos);
  }
  Constraint c;
  Term rest = term;
  rest.items.clear();
  for (const Term& item : term.items) {
    if (item.is_pair() && item.text == "token") {
      if (!item.value().is_atom()) {
        throw FormatError("token value must be an atom", item.pos);
      }
      if (c.token) throw FormatError("duplicate token condition", item.pos);
      c.token = item.value().text;
      continue;
    }
    rest.items.push_back(item);
  }
  c.pattern = FeatureStructureFromTerm(rest, warnings);
  return c;
}

}  // namespace morphdis
