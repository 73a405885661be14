#include "morphdis/tokenizer.h"

#include <array>
#include <regex>

namespace morphdis {

namespace {

bool IsAsciiLetter(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}
bool IsLetter(char c) {
  return IsAsciiLetter(c) || static_cast<unsigned char>(c) >= 0x80;
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }
bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool IsLower(char c) { return c >= 'a' && c <= 'z'; }

// Capitals that stand for Turkish letters cannot start an abbreviation,
// otherwise sentence-final words such as "Once." would be swallowed.
bool IsAbbreviationCapital(char c) {
  return c >= 'A' && c <= 'Z' && c != 'C' && c != 'G' && c != 'I' &&
         c != 'O' && c != 'S' && c != 'U';
}

struct CodeMap {
  char32_t code;
  const char* ascii;
};

constexpr CodeMap kTransliteration[] = {
    {U'ç', "C"}, {U'Ç', "C"}, {U'ğ', "G"}, {U'Ğ', "G"}, {U'ı', "I"},
    {U'İ', "i"}, {U'ö', "O"}, {U'Ö', "O"}, {U'ş', "S"}, {U'Ş', "S"},
    {U'ü', "U"}, {U'Ü', "U"}, {U'â', "a"}, {U'Â', "a"}, {U'î', "i"},
    {U'Î', "i"}, {U'û', "u"}, {U'Û', "u"}, {U'‘', "'"},
    {U'’', "'"}, {U'“', "\""}, {U'”', "\""},
    {U'–', "-"}, {U'—', "-"}, {U'…', "..."},
    {U'\u00A0', " "},
};

// Decodes one UTF-8 sequence at `s[i]`; returns its length, 0 if invalid.
size_t DecodeUtf8(std::string_view s, size_t i, char32_t* out) {
  unsigned char c = static_cast<unsigned char>(s[i]);
  size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                            : (c >> 3) == 0x1E ? 4 : 0;
  if (len == 0 || i + len > s.size()) return 0;
  char32_t cp = len == 1 ? c : len == 2 ? (c & 0x1F) : len == 3 ? (c & 0x0F) : (c & 0x07);
  for (size_t k = 1; k < len; ++k) {
    unsigned char cc = static_cast<unsigned char>(s[i + k]);
    if ((cc >> 6) != 0x2) return 0;
    cp = (cp << 6) | (cc & 0x3F);
  }
  *out = cp;
  return len;
}

size_t WordLength(std::string_view s, size_t p) {
  size_t q = p;
  while (q < s.size()) {
    if (IsLetter(s[q])) {
      ++q;
    } else if ((s[q] == '\'' || s[q] == '-') && q + 1 < s.size() &&
               IsLetter(s[q + 1]) && q > p) {
      ++q;
    } else {
      break;
    }
  }
  return q - p;
}

// Abbreviation at `p`, or 0.
size_t AbbreviationLength(std::string_view s, size_t p) {
  // Letter-period runs: T.B.M.M., m.O.
  size_t q = p;
  int groups = 0;
  while (q + 1 < s.size() && IsAsciiLetter(s[q]) && s[q + 1] == '.') {
    q += 2;
    ++groups;
  }
  if (groups >= 2 && (q == s.size() || !IsLetter(s[q]))) return q - p;
  // Capital followed by small letters: Dr. Prof.
  if (IsAbbreviationCapital(s[p])) {
    q = p + 1;
    while (q < s.size() && IsLower(s[q])) ++q;
    if (q > p + 1 && q < s.size() && s[q] == '.') return q + 1 - p;
  }
  // One or two small letters: cm. m. vb.
  q = p;
  while (q < s.size() && IsLower(s[q]) && q - p < 3) ++q;
  if (q > p && q - p <= 2 && q < s.size() && s[q] == '.' &&
      (q + 1 == s.size() || !IsLetter(s[q + 1]))) {
    return q + 1 - p;
  }
  return 0;
}

}  // namespace

std::string Transliterate(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = 0;
    size_t len = DecodeUtf8(utf8, i, &cp);
    if (len <= 1) {
      out.push_back(utf8[i]);
      ++i;
      continue;
    }
    const char* mapped = nullptr;
    for (const CodeMap& m : kTransliteration) {
      if (m.code == cp) mapped = m.ascii;
    }
    if (mapped != nullptr) {
      out += mapped;
    } else {
      out.append(utf8.substr(i, len));
    }
    i += len;
  }
  return out;
}

std::string_view NumericTypeName(NumericType type) {
  switch (type) {
    case NumericType::kCardinal: return "cardinal";
    case NumericType::kOrdinal: return "ordinal";
    case NumericType::kReal: return "real";
    case NumericType::kPercentage: return "percentage";
    case NumericType::kTime: return "time";
    case NumericType::kRatio: return "ratio";
    case NumericType::kNone: break;
  }
  return "none";
}

NumericMatch MatchNumeric(std::string_view text) {
  struct Pattern {
    NumericType type;
    std::regex re;
  };
  // Earlier entries win ties on length.
  static const std::array<Pattern, 7> kPatterns = {{
      {NumericType::kPercentage, std::regex(R"(%(\d+(?:[.,]\d+)?))")},
      {NumericType::kTime, std::regex(R"((\d{1,2}:\d\d)(?!\d))")},
      {NumericType::kRatio, std::regex(R"((\d+[:/]\d+))")},
      {NumericType::kCardinal,
       std::regex(R"((\d{1,3}(?:\.\d{3})+|\d{1,3}(?:,\d{3})+)(?![\d]))")},
      {NumericType::kReal, std::regex(R"((\d+[.,]\d+))")},
      {NumericType::kOrdinal, std::regex(R"((\d+\.)(?!\d))")},
      {NumericType::kCardinal, std::regex(R"((\d+))")},
  }};
  NumericMatch best;
  std::string s(text);
  for (const Pattern& p : kPatterns) {
    std::smatch m;
    if (!std::regex_search(s, m, p.re, std::regex_constants::match_continuous)) {
      continue;
    }
    size_t len = static_cast<size_t>(m.length(0));
    if (len > best.length) {
      best.type = p.type;
      best.body = m[1].str();
      best.length = len;
    }
  }
  if (best.type == NumericType::kNone) return best;
  size_t q = best.length;
  if (q + 1 < s.size() && s[q] == '\'' && IsLetter(s[q + 1])) {
    best.apostrophe = true;
    ++q;
  }
  size_t start = q;
  while (q < s.size() && IsLetter(s[q])) ++q;
  if (q > start) {
    best.suffix = s.substr(start, q - start);
    best.length = q;
  }
  return best;
}

std::vector<RawToken> Tokenize(std::string_view text) {
  std::vector<RawToken> out;
  size_t p = 0;
  while (p < text.size()) {
    char c = text[p];
    if (IsSpace(c)) {
      ++p;
      continue;
    }
    if (IsDigit(c) || (c == '%' && p + 1 < text.size() && IsDigit(text[p + 1]))) {
      NumericMatch m = MatchNumeric(text.substr(p));
      if (m.type != NumericType::kNone) {
        out.push_back({std::string(text.substr(p, m.length)), TokenKind::kNumeric});
        p += m.length;
        continue;
      }
    }
    if (IsLetter(c)) {
      if (size_t n = AbbreviationLength(text, p); n > 0) {
        out.push_back({std::string(text.substr(p, n)), TokenKind::kAbbreviation});
        p += n;
        continue;
      }
      size_t n = WordLength(text, p);
      out.push_back({std::string(text.substr(p, n)), TokenKind::kWord});
      p += n;
      continue;
    }
    if (text.substr(p, 3) == "...") {
      out.push_back({"...", TokenKind::kPunctuation});
      p += 3;
      continue;
    }
    out.push_back({std::string(1, c), TokenKind::kPunctuation});
    ++p;
  }
  return out;
}

std::vector<std::vector<RawToken>> SplitSentences(
    const std::vector<RawToken>& tokens) {
  std::vector<std::vector<RawToken>> out;
  std::vector<RawToken> cur;
  for (const RawToken& t : tokens) {
    cur.push_back(t);
    if (t.kind == TokenKind::kPunctuation &&
        (t.text == "." || t.text == "?" || t.text == "!" || t.text == "...")) {
      out.push_back(std::move(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace morphdis
