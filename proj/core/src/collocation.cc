#include "morphdis/collocation.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>

#include "morphdis/constraint.h"
#include "morphdis/corpus.h"
#include "morphdis/corpus_io.h"
#include "morphdis/embedded_data.h"
#include "morphdis/term.h"

namespace morphdis {

namespace {

enum class Section { kNone, kNonLexicalized, kFixed, kInflectable };

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitWords(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(s)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

std::string Join(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool IsVariable(std::string_view v) { return v.size() > 1 && v[0] == '_'; }

// Pattern line: a run of [NAME=VALUE] items; ROOT and WORD items open a new
// token.
std::vector<TokenSpec> ParsePattern(const std::string& line, int line_no) {
  std::string joined = "[" + line + "]";
  LinearParse lp;
  try {
    lp = ParseLinear(joined);
  } catch (const FormatError& e) {
    throw FormatError(std::string("collocation pattern: ") + e.what(), {line_no, 1});
  }
  std::vector<TokenSpec> tokens;
  for (LinearItem& item : lp.items) {
    if (item.name == "root" || item.name == "word") {
      tokens.emplace_back();
    } else if (tokens.empty()) {
      throw FormatError("collocation pattern must start with ROOT or WORD",
                        {line_no, 1});
    }
    tokens.back().items.push_back(std::move(item));
  }
  if (tokens.size() < 2) {
    throw FormatError("collocation pattern needs at least two tokens", {line_no, 1});
  }
  return tokens;
}

LinearParse ParseOutput(std::string_view text, int line_no) {
  try {
    return ParseLinear(text);
  } catch (const FormatError& e) {
    throw FormatError(std::string("collocation output: ") + e.what(), {line_no, 1});
  }
}

std::string PatternToString(const std::vector<TokenSpec>& tokens) {
  std::string out;
  for (const TokenSpec& t : tokens) {
    for (const LinearItem& item : t.items) {
      if (!out.empty()) out += ' ';
      out += LinearItemToString(item);
    }
  }
  return out;
}

void AppendComments(const std::vector<std::string>& comments, std::string* out) {
  for (const std::string& c : comments) *out += c + "\n";
}

// --- recognition ---------------------------------------------------------

struct Candidate {
  size_t length = 0;
  bool lexical = false;
  AnalyzedToken token;
};

std::string Substitute(const std::string& v, const std::string& surface) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == '%' && i + 1 < v.size() && v[i + 1] == 's') {
      out += surface;
      ++i;
    } else {
      out.push_back(v[i]);
    }
  }
  return out;
}

LinearParse Instantiate(const LinearParse& tpl, const std::string& surface) {
  LinearParse out = tpl;
  for (LinearItem& item : out.items) {
    item.value = Substitute(item.value, surface);
    item.suffix = Substitute(item.suffix, surface);
  }
  return out;
}

std::string SurfaceOf(const AnalyzedSentence& s, size_t begin, size_t end) {
  std::string out;
  for (size_t i = begin; i < end; ++i) {
    if (i > begin) out += ' ';
    out += s[i].surface;
  }
  return out;
}

std::string StripApostrophe(std::string_view v) {
  if (!v.empty() && v.back() == '\'') v.remove_suffix(1);
  return std::string(v);
}

bool ItemMatches(const LinearItem& want, const LinearParse& p) {
  for (const LinearItem& have : p.items) {
    if (!EqualsIgnoreCase(have.name, want.name)) continue;
    if (!EqualsIgnoreCase(have.value, want.value)) continue;
    if (want.is_conv() && !EqualsIgnoreCase(have.suffix, want.suffix)) continue;
    return true;
  }
  return false;
}

using Bindings = std::map<std::string, std::string>;

bool Bind(Bindings* b, const std::string& var, const std::string& value) {
  auto it = b->find(var);
  if (it == b->end()) {
    (*b)[var] = value;
    return true;
  }
  return it->second == value;
}

bool SpecMatches(const TokenSpec& spec, const AnalyzedToken& tok,
                 const LinearParse& p, Bindings* b) {
  for (const LinearItem& item : spec.items) {
    if (item.name == "word") {
      if (IsVariable(item.value)) {
        if (!Bind(b, item.value, tok.surface)) return false;
      } else if (!SurfaceEquals(tok.surface, item.value)) {
        return false;
      }
    } else if (item.name == "root") {
      const std::string* root = p.root();
      if (root == nullptr) return false;
      if (IsVariable(item.value)) {
        if (!Bind(b, item.value, *root)) return false;
      } else if (*root != item.value) {
        return false;
      }
    } else if (!ItemMatches(item, p)) {
      return false;
    }
  }
  return true;
}

bool MatchFrom(const std::vector<TokenSpec>& specs, size_t k,
               const AnalyzedSentence& s, size_t start, const Bindings& b) {
  if (k == specs.size()) return true;
  const AnalyzedToken& tok = s[start + k];
  for (const LinearParse& p : tok.parses) {
    Bindings next = b;
    if (SpecMatches(specs[k], tok, p, &next) &&
        MatchFrom(specs, k + 1, s, start, next)) {
      return true;
    }
  }
  return false;
}

bool WordsMatch(const AnalyzedSentence& s, size_t start,
                const std::vector<std::string>& words, size_t count) {
  for (size_t k = 0; k < count; ++k) {
    if (!SurfaceEquals(s[start + k].surface, words[k])) return false;
  }
  return true;
}

std::optional<AnalyzedToken> MatchInflectable(const AnalyzedSentence& s,
                                              size_t start,
                                              const InflectableEntry& e,
                                              const SuffixInventory& inv) {
  size_t n = e.words.size();
  if (start + n > s.size() || !WordsMatch(s, start, e.words, n - 1)) {
    return std::nullopt;
  }
  std::vector<std::string> prefix(e.words.begin(), e.words.end() - 1);
  std::string last = e.words.back();
  bool stem_only = !last.empty() && last.back() == '$';
  if (stem_only) last.pop_back();
  const AnalyzedToken& tok = s[start + n - 1];
  std::string new_root = Join(prefix) + " " + last;

  AnalyzedToken out;
  out.surface = SurfaceOf(s, start, start + n);
  out.flags = kFlagCollocation;
  for (const LinearParse& p : tok.parses) {
    const std::string* root = p.root();
    if (root == nullptr || StripApostrophe(*root) != last) continue;
    LinearParse q = p;
    for (LinearItem& item : q.items) {
      if (item.name == "root") {
        item.value = new_root;
        break;
      }
    }
    if (std::find(out.parses.begin(), out.parses.end(), q) == out.parses.end()) {
      out.parses.push_back(std::move(q));
    }
  }
  if (!out.parses.empty()) return out;
  if (stem_only) return std::nullopt;

  // A name the analyzer does not know: read the suffix tail ourselves.
  std::string_view surface = tok.surface;
  std::vector<NominalAnalysis> analyses;
  if (SurfaceEquals(surface, last)) {
    analyses.push_back(NominalAnalysis{});
  } else if (surface.size() > last.size() + 1 &&
             SurfaceEquals(surface.substr(0, last.size()), last) &&
             surface[last.size()] == '\'') {
    std::string_view tail = surface.substr(last.size() + 1);
    for (HarmonyMode mode : {HarmonyMode::kStrict, HarmonyMode::kPermissive}) {
      analyses = AnalyzeSuffixes(last, tail, inv, mode);
      if (!analyses.empty()) break;
    }
  }
  if (analyses.empty()) return std::nullopt;
  for (NominalAnalysis& a : analyses) {
    a.root = new_root;
    a.proper = true;
    for (const LinearParse& p : NominalParses(a)) {
      if (std::find(out.parses.begin(), out.parses.end(), p) == out.parses.end()) {
        out.parses.push_back(p);
      }
    }
  }
  return out;
}

bool IsPlainCardinal(std::string_view surface, int max_digits) {
  NumericMatch m = MatchNumeric(surface);
  return m.type == NumericType::kCardinal && m.length == surface.size() &&
         !m.apostrophe && m.suffix.empty() &&
         static_cast<int>(m.body.size()) <= max_digits;
}

bool IsMonth(const CollocationDb& db, std::string_view surface) {
  for (const std::string& m : db.months) {
    if (EqualsIgnoreCase(m, surface)) return true;
  }
  return false;
}

// Year: three or four digits with an optional apostrophe and suffix tail.
bool IsYear(std::string_view surface, NumericMatch* match) {
  NumericMatch m = MatchNumeric(surface);
  if (m.type != NumericType::kCardinal || m.length != surface.size()) return false;
  if (m.body.size() < 3 || m.body.size() > 4) return false;
  *match = m;
  return true;
}

std::optional<Candidate> MatchDate(const AnalyzedSentence& s, size_t start,
                                   const CollocationDb& db,
                                   const SuffixInventory& inv) {
  auto day_at = [&](size_t i) {
    if (i >= s.size() || !IsPlainCardinal(s[i].surface, 2)) return false;
    int d = std::stoi(s[i].surface);
    return d >= 1 && d <= 31;
  };
  auto month_at = [&](size_t i) { return i < s.size() && IsMonth(db, s[i].surface); };
  NumericMatch year;
  auto year_at = [&](size_t i) { return i < s.size() && IsYear(s[i].surface, &year); };

  size_t end = start;
  if (day_at(start) && month_at(start + 1)) {
    end = year_at(start + 2) ? start + 3 : start + 2;
  } else if (month_at(start) && year_at(start + 1)) {
    end = start + 2;
  } else {
    return std::nullopt;
  }

  std::vector<NominalAnalysis> analyses;
  std::string root = SurfaceOf(s, start, end - 1);
  const std::string& last = s[end - 1].surface;
  if (end - start == 3 || month_at(start)) {
    root += " " + year.body + (year.apostrophe ? "'" : "");
    if (!year.suffix.empty()) {
      analyses = AnalyzeSuffixes(year.body, year.suffix, inv,
                                 HarmonyMode::kUnknownStem);
      if (analyses.empty()) return std::nullopt;
    }
  } else {
    root += " " + last;
  }
  if (analyses.empty()) analyses.push_back(NominalAnalysis{});

  Candidate c;
  c.length = end - start;
  c.lexical = true;
  c.token.surface = SurfaceOf(s, start, end);
  c.token.flags = kFlagCollocation;
  for (const NominalAnalysis& a : analyses) {
    if (a.rel) continue;
    LinearParse p;
    p.items = {{"cat", "DATE", ""},   {"root", root, ""},
               {"type", "TEMP1", ""}, {"agr", a.agr, ""},
               {"poss", a.poss, ""},  {"case", a.case_, ""}};
    if (std::find(c.token.parses.begin(), c.token.parses.end(), p) ==
        c.token.parses.end()) {
      c.token.parses.push_back(std::move(p));
    }
  }
  if (c.token.parses.empty()) return std::nullopt;
  return c;
}

bool IsNumeric(std::string_view surface) {
  NumericMatch m = MatchNumeric(surface);
  return m.type != NumericType::kNone && m.length == surface.size();
}

std::optional<Candidate> MatchPercentage(const AnalyzedSentence& s, size_t start) {
  if (start + 1 >= s.size() || !SurfaceEquals(s[start].surface, "yUzde")) {
    return std::nullopt;
  }
  const AnalyzedToken& num = s[start + 1];
  if (!IsNumeric(num.surface) || num.parses.empty()) return std::nullopt;
  Candidate c;
  c.length = 2;
  c.lexical = true;
  c.token.surface = SurfaceOf(s, start, start + 2);
  c.token.flags = kFlagCollocation;
  for (LinearParse p : num.parses) {
    for (LinearItem& item : p.items) {
      if (item.name == "root") item.value = "yUzde " + item.value;
      if (item.name == "type") item.value = "PERCENTAGE";
    }
    c.token.parses.push_back(std::move(p));
  }
  return c;
}

std::optional<Candidate> MatchRange(const AnalyzedSentence& s, size_t start) {
  if (start + 2 >= s.size()) return std::nullopt;
  const std::string& a = s[start].surface;
  const std::string& b = s[start + 2].surface;
  NumericMatch ma = MatchNumeric(a);
  NumericMatch mb = MatchNumeric(b);
  if (s[start + 1].surface != "-" || !IsNumeric(a) || !IsNumeric(b) ||
      !ma.suffix.empty() || ma.apostrophe || !mb.suffix.empty() || mb.apostrophe) {
    return std::nullopt;
  }
  Candidate c;
  c.length = 3;
  c.lexical = true;
  c.token.surface = SurfaceOf(s, start, start + 3);
  c.token.flags = kFlagCollocation;
  LinearParse p;
  p.items = {{"cat", "ADJ", ""}, {"root", a + "-" + b, ""}, {"type", "RANGE", ""}};
  c.token.parses.push_back(std::move(p));
  return c;
}

void Offer(std::optional<Candidate> c, std::optional<Candidate>* best) {
  if (!c || c->length < 2) return;
  if (!*best || c->length > (*best)->length ||
      (c->length == (*best)->length && c->lexical && !(*best)->lexical)) {
    *best = std::move(c);
  }
}

}  // namespace

CollocationDb CollocationDb::Parse(std::string_view text) {
  CollocationDb db;
  Section section = Section::kNone;
  std::vector<std::string> pending;
  std::optional<NonLexicalizedEntry> open_entry;
  int open_line = 0;
  std::stringstream ss{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto flush_open = [&] {
    if (open_entry) {
      throw FormatError("pattern without an output line", {open_line, 1});
    }
  };
  while (std::getline(ss, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = Trim(raw);
    if (line.empty()) {
      flush_open();
      continue;
    }
    if (line[0] == '%') {
      flush_open();
      if (section == Section::kNone) {
        db.header_comments.push_back(line);
      } else {
        pending.push_back(line);
      }
      continue;
    }
    if (line[0] == '@') {
      flush_open();
      if (!pending.empty()) {
        throw FormatError("comment not attached to an entry", {line_no, 1});
      }
      if (line == "@non-lexicalized") section = Section::kNonLexicalized;
      else if (line == "@fixed") section = Section::kFixed;
      else if (line == "@inflectable") section = Section::kInflectable;
      else throw FormatError("unknown section '" + line + "'", {line_no, 1});
      continue;
    }
    switch (section) {
      case Section::kNone:
        throw FormatError("entry before any section header", {line_no, 1});
      case Section::kNonLexicalized:
        if (!open_entry) {
          open_entry.emplace();
          open_entry->comments = std::move(pending);
          pending.clear();
          open_entry->tokens = ParsePattern(line, line_no);
          open_line = line_no;
        } else {
          open_entry->output = ParseOutput(line, line_no);
          db.non_lexicalized.push_back(std::move(*open_entry));
          open_entry.reset();
        }
        break;
      case Section::kFixed: {
        size_t arrow = line.find("=>");
        if (arrow == std::string::npos) {
          throw FormatError("fixed entry needs 'words => output'", {line_no, 1});
        }
        FixedEntry e;
        e.comments = std::move(pending);
        pending.clear();
        e.words = SplitWords(std::string_view(line).substr(0, arrow));
        if (e.words.size() < 2) {
          throw FormatError("fixed entry needs at least two words", {line_no, 1});
        }
        e.output = ParseOutput(Trim(std::string_view(line).substr(arrow + 2)), line_no);
        db.fixed.push_back(std::move(e));
        break;
      }
      case Section::kInflectable: {
        InflectableEntry e;
        e.comments = std::move(pending);
        pending.clear();
        e.words = SplitWords(line);
        if (e.words.size() < 2) {
          throw FormatError("inflectable entry needs at least two words", {line_no, 1});
        }
        db.inflectable.push_back(std::move(e));
        break;
      }
    }
  }
  flush_open();
  if (!pending.empty()) {
    throw FormatError("trailing comment not attached to an entry", {line_no, 1});
  }
  return db;
}

CollocationDb CollocationDb::Load(const std::string& path) {
  return Parse(ReadTextFile(path));
}

const CollocationDb& CollocationDb::Default() {
  static const CollocationDb kDefault = Parse(DefaultDataFile("collocations.db"));
  return kDefault;
}

std::string CollocationDb::ToString() const {
  std::string out;
  AppendComments(header_comments, &out);
  if (!header_comments.empty()) out += "\n";
  out += "@non-lexicalized\n";
  for (size_t i = 0; i < non_lexicalized.size(); ++i) {
    const NonLexicalizedEntry& e = non_lexicalized[i];
    if (i > 0) out += "\n";
    AppendComments(e.comments, &out);
    out += PatternToString(e.tokens) + "\n";
    out += e.output.ToString() + "\n";
  }
  out += "\n@fixed\n";
  for (const FixedEntry& e : fixed) {
    AppendComments(e.comments, &out);
    out += Join(e.words) + " => " + e.output.ToString() + "\n";
  }
  out += "\n@inflectable\n";
  for (const InflectableEntry& e : inflectable) {
    AppendComments(e.comments, &out);
    out += Join(e.words) + "\n";
  }
  return out;
}

AnalyzedSentence RecognizeCollocations(const AnalyzedSentence& sentence,
                                       const CollocationDb& db,
                                       const SuffixInventory& inventory) {
  AnalyzedSentence out;
  size_t i = 0;
  while (i < sentence.size()) {
    std::optional<Candidate> best;
    for (const FixedEntry& e : db.fixed) {
      size_t n = e.words.size();
      if (i + n > sentence.size() || !WordsMatch(sentence, i, e.words, n)) continue;
      Candidate c;
      c.length = n;
      c.lexical = true;
      c.token.surface = SurfaceOf(sentence, i, i + n);
      c.token.flags = kFlagCollocation;
      c.token.parses.push_back(Instantiate(e.output, c.token.surface));
      Offer(std::move(c), &best);
    }
    for (const InflectableEntry& e : db.inflectable) {
      std::optional<AnalyzedToken> tok = MatchInflectable(sentence, i, e, inventory);
      if (!tok) continue;
      Candidate c;
      c.length = e.words.size();
      c.lexical = true;
      c.token = std::move(*tok);
      Offer(std::move(c), &best);
    }
    Offer(MatchDate(sentence, i, db, inventory), &best);
    Offer(MatchPercentage(sentence, i), &best);
    Offer(MatchRange(sentence, i), &best);
    for (const NonLexicalizedEntry& e : db.non_lexicalized) {
      size_t n = e.tokens.size();
      if (i + n > sentence.size() || !MatchFrom(e.tokens, 0, sentence, i, {})) {
        continue;
      }
      Candidate c;
      c.length = n;
      c.token.surface = SurfaceOf(sentence, i, i + n);
      c.token.flags = kFlagCollocation;
      c.token.parses.push_back(Instantiate(e.output, c.token.surface));
      Offer(std::move(c), &best);
    }
    if (best) {
      out.push_back(std::move(best->token));
      i += best->length;
    } else {
      out.push_back(sentence[i]);
      ++i;
    }
  }
  return out;
}

}  // namespace morphdis
