#include "morphdis/linear_parse.h"

#include <cctype>
#include <set>

#include "morphdis/term.h"

namespace morphdis {

namespace {

std::string Lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

bool IsSpace(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

std::string Escape(std::string_view v) {
  std::string out;
  for (char c : v) {
    if (c == '[' || c == ']' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

LinearItem ItemFromParts(const std::vector<std::string>& parts, size_t index) {
  if (parts.size() < 2 || parts[0].empty()) {
    throw FormatError("pair " + std::to_string(index) + ": expected NAME=VALUE");
  }
  LinearItem item;
  item.name = Lower(parts[0]);
  item.value = parts[1];
  if (item.is_conv()) {
    if (parts.size() != 3 || parts[1].empty() || parts[2].empty()) {
      throw FormatError("pair " + std::to_string(index) +
                        ": conversion needs a category and a suffix");
    }
    item.suffix = parts[2];
  } else if (parts.size() != 2) {
    throw FormatError("pair " + std::to_string(index) +
                      ": only conv takes a suffix");
  }
  return item;
}

// Splits the inside of one bracket item.
std::vector<std::string> SplitItem(const std::string& body, bool is_conv_hint) {
  std::vector<std::string> parts;
  size_t eq = body.find('=');
  if (eq != std::string::npos) {
    parts.push_back(body.substr(0, eq));
    std::string rest = body.substr(eq + 1);
    if (is_conv_hint) {
      size_t eq2 = rest.find('=');
      if (eq2 != std::string::npos) {
        parts.push_back(rest.substr(0, eq2));
        parts.push_back(rest.substr(eq2 + 1));
        return parts;
      }
    }
    parts.push_back(rest);
    return parts;
  }
  std::string cur;
  for (char c : body) {
    if (IsSpace(c)) {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return parts;
}

LinearParse ParseBracketForm(std::string_view text) {
  LinearParse lp;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && IsSpace(text[i])) ++i;
  };
  skip();
  if (i >= text.size() || text[i] != '[') {
    throw FormatError("linear parse must start with '['");
  }
  ++i;
  while (true) {
    skip();
    if (i >= text.size()) throw FormatError("unterminated linear parse");
    if (text[i] == ']') {
      ++i;
      break;
    }
    if (text[i] != '[') throw FormatError("expected '[' before an item");
    ++i;
    std::string body;
    bool closed = false;
    while (i < text.size()) {
      char c = text[i++];
      if (c == '\\' && i < text.size()) {
        body.push_back(text[i++]);
      } else if (c == ']') {
        closed = true;
        break;
      } else {
        body.push_back(c);
      }
    }
    if (!closed) throw FormatError("unterminated item");
    size_t start = 0;
    while (start < body.size() && IsSpace(body[start])) ++start;
    size_t end = body.size();
    while (end > start && IsSpace(body[end - 1])) --end;
    body = body.substr(start, end - start);
    bool conv = Lower(body.substr(0, 4)) == "conv";
    lp.items.push_back(ItemFromParts(SplitItem(body, conv), lp.items.size()));
  }
  skip();
  if (i < text.size() && text[i] == '.') ++i;
  skip();
  if (i != text.size()) throw FormatError("trailing text after linear parse");
  return lp;
}

LinearParse ParseListForm(std::string_view text) {
  Term t = TermReader::ParseSingle(text);
  if (!t.is_list()) throw FormatError("linear parse must be a list");
  LinearParse lp;
  for (const Term& item : t.items) {
    if (!item.is_list()) {
      throw FormatError("pair " + std::to_string(lp.items.size()) +
                        ": expected [name,value]");
    }
    std::vector<std::string> parts;
    for (const Term& a : item.items) {
      if (!a.is_atom()) {
        throw FormatError("pair " + std::to_string(lp.items.size()) +
                          ": values must be atoms");
      }
      parts.push_back(a.text);
    }
    lp.items.push_back(ItemFromParts(parts, lp.items.size()));
  }
  return lp;
}

bool IsCaseAtom(std::string_view v) {
  static const std::set<std::string, std::less<>> kCases = {
      "nom", "acc", "dat", "loc", "abl", "gen", "ins", "equ"};
  return kCases.count(v) > 0;
}

void SetChecked(FeatureStructure* fs, const LinearItem& item, size_t index) {
  if (fs->Has(item.name)) {
    throw FormatError("pair " + std::to_string(index) + ": duplicate '" +
                      item.name + "' in one derivation segment");
  }
  fs->Set(item.name, NormalizeValue(item.name, item.value));
}

void AppendLinear(const FeatureStructure& fs, LinearParse* out) {
  const std::string* cat = fs.FindAtom("cat");
  if (cat == nullptr) throw FormatError("structure without cat: " + fs.ToString());
  const FeatureStructure* stem = fs.FindNested("stem");
  if (fs.Has("stem") && stem == nullptr) {
    throw FormatError("stem must be nested: " + fs.ToString());
  }
  if (stem != nullptr) {
    const std::string* suffix = fs.FindAtom("suffix");
    if (suffix == nullptr) {
      throw FormatError("derived structure without suffix: " + fs.ToString());
    }
    AppendLinear(*stem, out);
    out->items.push_back({"conv", *cat, *suffix});
  } else {
    out->items.push_back({"cat", *cat, ""});
  }
  for (const auto& f : fs.features()) {
    if (f.name == "cat" || f.name == "stem") continue;
    if (stem != nullptr && f.name == "suffix") continue;
    if (!f.value.is_atom()) {
      throw FormatError("only stem may be nested: " + fs.ToString());
    }
    out->items.push_back({f.name, f.value.atom(), ""});
  }
}

}  // namespace

const std::string* LinearParse::Find(std::string_view name) const {
  for (const LinearItem& item : items) {
    if (item.name == name) return &item.value;
  }
  return nullptr;
}

std::string LinearItemToString(const LinearItem& item) {
  std::string out = "[" + Upper(item.name) + "=" + Escape(item.value);
  if (item.is_conv()) out += "=" + Escape(item.suffix);
  return out + "]";
}

std::string LinearParse::ToString() const {
  std::string out = "[";
  for (const LinearItem& item : items) out += LinearItemToString(item);
  return out + "]";
}

LinearParse ParseLinear(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && IsSpace(text[i])) ++i;
  if (i < text.size() && text[i] == '[') ++i;
  while (i < text.size() && IsSpace(text[i])) ++i;
  if (i < text.size() && text[i] == '[') {
    for (size_t j = i + 1; j < text.size(); ++j) {
      char c = text[j];
      if (c == ',') return ParseListForm(text);
      if (c == '=' || c == ']' || IsSpace(c)) break;
    }
  }
  return ParseBracketForm(text);
}

std::string NormalizeValue(std::string_view name, std::string_view value) {
  if (name == "root") return std::string(value);
  if (name == "agr" || name == "poss") return Upper(value);
  std::string v = Lower(value);
  if (name == "case" && !IsCaseAtom(v)) {
    for (std::string_view tail : {"_y", "y"}) {
      if (v.size() > tail.size() && v.ends_with(tail) &&
          IsCaseAtom(std::string_view(v).substr(0, v.size() - tail.size()))) {
        return v.substr(0, v.size() - tail.size());
      }
    }
  }
  return v;
}

FeatureStructure ToHierarchical(const LinearParse& parse) {
  if (parse.items.empty()) throw FormatError("empty linear parse");
  if (parse.items[0].name != "cat") {
    throw FormatError("pair 0: a linear parse starts with cat");
  }
  FeatureStructure level;
  for (size_t i = 0; i < parse.items.size(); ++i) {
    const LinearItem& item = parse.items[i];
    if (item.is_conv()) {
      FeatureStructure next;
      next.Set("cat", Lower(item.value));
      next.Set("stem", std::move(level));
      next.Set("suffix", Lower(item.suffix));
      level = std::move(next);
    } else {
      if (item.name == "stem" || item.name == "suffix") {
        throw FormatError("pair " + std::to_string(i) + ": '" + item.name +
                          "' is reserved for conversions");
      }
      SetChecked(&level, item, i);
    }
  }
  return level;
}

LinearParse ToLinear(const FeatureStructure& fs) {
  LinearParse out;
  AppendLinear(fs, &out);
  return out;
}

}  // namespace morphdis
