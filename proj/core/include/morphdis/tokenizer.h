// Raw-text handling: transliteration of UTF-8 Turkish into the ASCII
// encoding used throughout (C=ç, G=ğ, I=ı, O=ö, S=ş, U=ü), tokenization and
// sentence splitting.

#ifndef MORPHDIS_TOKENIZER_H_
#define MORPHDIS_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace morphdis {

enum class TokenKind {
  kWord,
  kNumeric,
  kAbbreviation,
  kPunctuation,
};

struct RawToken {
  std::string text;
  TokenKind kind = TokenKind::kWord;

  friend bool operator==(const RawToken& a, const RawToken& b) {
    return a.text == b.text && a.kind == b.kind;
  }
};

// Maps Turkish letters to their uppercase ASCII codes, dotted capital I to
// `i`, typographic quotes to ASCII quotes; other characters pass through.
std::string Transliterate(std::string_view utf8);

// Kind of numeric token, with the numeric body and any apostrophe tail.
enum class NumericType {
  kNone,
  kCardinal,
  kOrdinal,
  kReal,
  kPercentage,
  kTime,
  kRatio,
};

struct NumericMatch {
  NumericType type = NumericType::kNone;
  std::string body;    // e.g. "32.542.432", "3785.", "7" for %7
  bool apostrophe = false;
  std::string suffix;  // letters after the number (without apostrophe)
  size_t length = 0;   // characters consumed from the input
};

// Longest numeric prefix of `text`, or type kNone.
NumericMatch MatchNumeric(std::string_view text);
std::string_view NumericTypeName(NumericType type);

std::vector<RawToken> Tokenize(std::string_view text);

// Splits a token stream after sentence-final punctuation (. ? ! ...).
std::vector<std::vector<RawToken>> SplitSentences(
    const std::vector<RawToken>& tokens);

}  // namespace morphdis

#endif  // MORPHDIS_TOKENIZER_H_
