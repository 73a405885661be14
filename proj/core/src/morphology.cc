#include "morphdis/morphology.h"

#include <algorithm>
#include <sstream>

#include "morphdis/corpus_io.h"
#include "morphdis/embedded_data.h"
#include "morphdis/term.h"

namespace morphdis {

namespace {

bool IsBackVowel(char c) { return c == 'a' || c == 'I' || c == 'o' || c == 'u'; }
bool IsRoundVowel(char c) { return c == 'o' || c == 'u' || c == 'O' || c == 'U'; }
bool IsVoiceless(char c) {
  return c == 'f' || c == 's' || c == 't' || c == 'k' || c == 'C' ||
         c == 'S' || c == 'h' || c == 'p';
}

char LastVowel(std::string_view s) {
  for (size_t i = s.size(); i > 0; --i) {
    if (IsVowel(s[i - 1])) return s[i - 1];
  }
  return 0;
}

uint32_t ParseConditions(std::string_view text, int line) {
  uint32_t out = 0;
  if (text == "-") return out;
  std::string item;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, item, ',')) {
    if (item == "V") out |= kAfterVowel;
    else if (item == "C") out |= kAfterConsonant;
    else if (item == "P3") out |= kAfterPoss3;
    else if (item == "nP3") out |= kNotAfterPoss3;
    else if (item == "PL") out |= kPlural;
    else if (item == "SG") out |= kSingular;
    else if (item == "LG") out |= kAfterLocGen;
    else throw FormatError("unknown suffix condition '" + item + "'", {line, 1});
  }
  return out;
}

// All realizations of `form` after `stem`; `permissive` accepts every
// harmony variant.
void Realize(std::string_view form, size_t i, std::string* stem_plus,
             size_t stem_len, bool permissive, std::vector<std::string>* out) {
  if (i == form.size()) {
    out->push_back(stem_plus->substr(stem_len));
    return;
  }
  char f = form[i];
  std::string options;
  char prev = stem_plus->empty() ? 0 : stem_plus->back();
  char v = LastVowel(*stem_plus);
  if (f == 'A') {
    options = permissive || v == 0 ? "ae" : (IsBackVowel(v) ? "a" : "e");
  } else if (f == 'I') {
    if (permissive || v == 0) {
      options = "IiuU";
    } else if (IsBackVowel(v)) {
      options = IsRoundVowel(v) ? "u" : "I";
    } else {
      options = IsRoundVowel(v) ? "U" : "i";
    }
  } else if (f == 'D') {
    options = permissive || prev == 0 ? "dt" : (IsVoiceless(prev) ? "t" : "d");
  } else {
    options = std::string(1, f);
  }
  for (char o : options) {
    stem_plus->push_back(o);
    Realize(form, i + 1, stem_plus, stem_len, permissive, out);
    stem_plus->pop_back();
  }
}

struct SearchState {
  std::string stem;
  int next_slot = 0;
  bool stem_unknown = false;
  bool after_poss3 = false;
  bool after_locgen = false;
  NominalAnalysis analysis;
};

void Search(const SuffixInventory& inv, HarmonyMode mode, std::string_view tail,
            const SearchState& st, std::vector<NominalAnalysis>* out) {
  if (tail.empty()) {
    out->push_back(st.analysis);
    return;
  }
  char last = st.stem.empty() ? 0 : st.stem.back();
  for (const SuffixEntry& e : inv.entries()) {
    int slot = static_cast<int>(e.slot);
    if (slot < st.next_slot) continue;
    uint32_t c = e.conditions;
    bool vowel_final = last != 0 && IsVowel(last);
    if ((c & kAfterVowel) && !st.stem_unknown && !vowel_final) continue;
    if ((c & kAfterConsonant) && !st.stem_unknown && vowel_final) continue;
    if ((c & kAfterPoss3) && !st.after_poss3) continue;
    if ((c & kNotAfterPoss3) && st.after_poss3) continue;
    bool plural = st.analysis.agr == "3PL";
    if ((c & kPlural) && !plural) continue;
    if ((c & kSingular) && plural) continue;
    if ((c & kAfterLocGen) && !st.after_locgen) continue;
    if (e.slot == SuffixSlot::kRel && !st.after_locgen) continue;

    bool permissive = mode == HarmonyMode::kPermissive ||
                      (mode == HarmonyMode::kUnknownStem && st.stem_unknown);
    std::vector<std::string> variants;
    std::string buf = st.stem;
    Realize(e.form, 0, &buf, st.stem.size(), permissive, &variants);
    std::sort(variants.begin(), variants.end());
    variants.erase(std::unique(variants.begin(), variants.end()), variants.end());
    for (const std::string& v : variants) {
      if (!tail.starts_with(v)) continue;
      SearchState next = st;
      next.stem += v;
      next.next_slot = slot + 1;
      next.stem_unknown = false;
      next.after_poss3 = false;
      next.after_locgen = false;
      switch (e.slot) {
        case SuffixSlot::kAgr:
          next.analysis.agr = e.value;
          break;
        case SuffixSlot::kPoss:
          next.analysis.poss = e.value;
          next.after_poss3 = e.value == "3SG" || e.value == "3PL";
          break;
        case SuffixSlot::kCase:
          next.analysis.case_ = e.value;
          next.after_locgen = e.value == "LOC" || e.value == "GEN";
          break;
        case SuffixSlot::kRel:
          next.analysis.rel = true;
          break;
      }
      Search(inv, mode, tail.substr(v.size()), next, out);
    }
  }
}

void AppendUnique(std::vector<LinearParse>* out, const LinearParse& p) {
  if (std::find(out->begin(), out->end(), p) == out->end()) out->push_back(p);
}

void AppendNominalTail(const NominalAnalysis& a, LinearParse* p) {
  p->items.push_back({"agr", a.agr, ""});
  p->items.push_back({"poss", a.poss, ""});
  p->items.push_back({"case", a.case_, ""});
}

std::vector<LinearParse> WithRelative(const LinearParse& base, bool rel) {
  if (!rel) return {base};
  LinearParse adj = base;
  adj.items.push_back({"conv", "ADJ", "REL"});
  LinearParse noun = adj;
  noun.items.push_back({"conv", "NOUN", "NONE"});
  AppendNominalTail(NominalAnalysis{}, &noun);
  return {adj, noun};
}

}  // namespace

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'I' || c == 'i' || c == 'o' ||
         c == 'O' || c == 'u' || c == 'U';
}

SuffixInventory SuffixInventory::Parse(std::string_view text) {
  SuffixInventory inv;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, '\t')) cols.push_back(col);
    if (cols.size() != 4) {
      throw FormatError("expected slot, form, conditions, value", {line_no, 1});
    }
    SuffixEntry e;
    if (cols[0] == "agr") e.slot = SuffixSlot::kAgr;
    else if (cols[0] == "poss") e.slot = SuffixSlot::kPoss;
    else if (cols[0] == "case") e.slot = SuffixSlot::kCase;
    else if (cols[0] == "rel") e.slot = SuffixSlot::kRel;
    else throw FormatError("unknown suffix slot '" + cols[0] + "'", {line_no, 1});
    if (cols[1].empty()) throw FormatError("empty suffix form", {line_no, 1});
    e.form = cols[1];
    e.conditions = ParseConditions(cols[2], line_no);
    e.value = cols[3];
    if (e.value.empty()) throw FormatError("empty suffix value", {line_no, 1});
    inv.entries_.push_back(std::move(e));
  }
  return inv;
}

SuffixInventory SuffixInventory::Load(const std::string& path) {
  return Parse(ReadTextFile(path));
}

const SuffixInventory& SuffixInventory::Default() {
  static const SuffixInventory kDefault = Parse(DefaultDataFile("suffixes.tsv"));
  return kDefault;
}

std::string RealizeSuffix(std::string_view stem, std::string_view form) {
  std::vector<std::string> out;
  std::string buf(stem);
  Realize(form, 0, &buf, stem.size(), false, &out);
  return out.empty() ? std::string() : out.front();
}

std::vector<NominalAnalysis> AnalyzeSuffixes(std::string_view stem,
                                             std::string_view tail,
                                             const SuffixInventory& inventory,
                                             HarmonyMode mode) {
  SearchState st;
  st.stem = std::string(stem);
  st.stem_unknown = mode == HarmonyMode::kUnknownStem;
  st.analysis.root = std::string(stem);
  std::vector<NominalAnalysis> out;
  Search(inventory, mode, tail, st, &out);
  std::vector<NominalAnalysis> unique;
  for (const NominalAnalysis& a : out) {
    if (std::find(unique.begin(), unique.end(), a) == unique.end()) {
      unique.push_back(a);
    }
  }
  return unique;
}

std::vector<LinearParse> NominalParses(const NominalAnalysis& a) {
  LinearParse base;
  base.items.push_back({"cat", "NOUN", ""});
  base.items.push_back({"root", a.root, ""});
  if (a.proper) base.items.push_back({"type", "PROPER", ""});
  AppendNominalTail(a, &base);
  return WithRelative(base, a.rel);
}

std::vector<LinearParse> GuessUnknown(std::string_view surface,
                                      const SuffixInventory& inventory) {
  std::vector<NominalAnalysis> analyses;
  size_t apostrophe = surface.find('\'');
  if (apostrophe != std::string_view::npos && apostrophe > 0) {
    std::string_view root = surface.substr(0, apostrophe);
    std::string_view tail = surface.substr(apostrophe + 1);
    for (HarmonyMode mode : {HarmonyMode::kStrict, HarmonyMode::kPermissive}) {
      analyses = AnalyzeSuffixes(root, tail, inventory, mode);
      if (!analyses.empty()) break;
    }
    if (analyses.empty()) {
      NominalAnalysis bare;
      bare.root = std::string(root);
      analyses.push_back(bare);
    }
    for (NominalAnalysis& a : analyses) a.proper = true;
  } else {
    for (HarmonyMode mode : {HarmonyMode::kStrict, HarmonyMode::kPermissive}) {
      analyses.clear();
      for (size_t k = surface.size(); k >= 1; --k) {
        std::vector<NominalAnalysis> part = AnalyzeSuffixes(
            surface.substr(0, k), surface.substr(k), inventory, mode);
        analyses.insert(analyses.end(), part.begin(), part.end());
      }
      if (analyses.size() > 1) break;
    }
    if (analyses.empty()) {
      NominalAnalysis bare;
      bare.root = std::string(surface);
      analyses.push_back(bare);
    }
  }
  std::vector<LinearParse> out;
  for (const NominalAnalysis& a : analyses) {
    for (const LinearParse& p : NominalParses(a)) AppendUnique(&out, p);
  }
  return out;
}

std::vector<LinearParse> AnalyzeNumeric(std::string_view token,
                                        const SuffixInventory& inventory,
                                        bool* unknown) {
  if (unknown != nullptr) *unknown = false;
  NumericMatch m = MatchNumeric(token);
  if (m.type == NumericType::kNone || m.length != token.size()) return {};
  std::string type(NumericTypeName(m.type));
  std::transform(type.begin(), type.end(), type.begin(), ::toupper);
  LinearParse base;
  base.items.push_back({"cat", "ADJ", ""});
  base.items.push_back({"type", type, ""});
  base.items.push_back({"root", m.body + (m.apostrophe ? "'" : ""), ""});
  std::vector<LinearParse> out;
  if (m.suffix.empty()) {
    out.push_back(base);
    if (m.type == NumericType::kOrdinal) {
      LinearParse noun = base;
      noun.items.push_back({"conv", "NOUN", "NONE"});
      AppendNominalTail(NominalAnalysis{}, &noun);
      out.push_back(noun);
    }
    return out;
  }
  std::vector<NominalAnalysis> analyses =
      AnalyzeSuffixes(m.body, m.suffix, inventory, HarmonyMode::kUnknownStem);
  if (analyses.empty()) {
    if (unknown != nullptr) *unknown = true;
    return {base};
  }
  for (const NominalAnalysis& a : analyses) {
    LinearParse noun = base;
    noun.items.push_back({"conv", "NOUN", "NONE"});
    AppendNominalTail(a, &noun);
    for (const LinearParse& p : WithRelative(noun, a.rel)) AppendUnique(&out, p);
  }
  return out;
}

}  // namespace morphdis
