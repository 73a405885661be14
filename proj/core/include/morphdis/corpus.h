// Tokens, sentences and corpora of ambiguous hierarchical parses.

#ifndef MORPHDIS_CORPUS_H_
#define MORPHDIS_CORPUS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/feature_structure.h"

namespace morphdis {

enum TokenFlag : uint32_t {
  kFlagNone = 0,
  // The morphological analyzer produced nothing for this token.
  kFlagUnknown = 1u << 0,
  // Parses were produced by the unknown-word guesser.
  kFlagGuessed = 1u << 1,
  // Token is a packed multi-word unit.
  kFlagCollocation = 1u << 2,
};

inline constexpr std::string_view kBeginSurface = "@";
inline constexpr std::string_view kEndSurface = "#";
inline constexpr std::string_view kBeginCat = "beginning_of_sentence";
inline constexpr std::string_view kEndCat = "end_of_sentence";

struct AmbiguousToken {
  std::string surface;
  std::vector<FeatureStructure> parses;
  uint32_t flags = kFlagNone;

  bool ambiguous() const { return parses.size() > 1; }
  bool unambiguous() const { return parses.size() == 1; }
  bool has_flag(TokenFlag f) const { return (flags & f) != 0; }

  friend bool operator==(const AmbiguousToken& a, const AmbiguousToken& b) {
    return a.surface == b.surface && a.parses == b.parses &&
           a.flags == b.flags;
  }
};

AmbiguousToken BeginMarker();
AmbiguousToken EndMarker();
bool IsMarker(const AmbiguousToken& token);

// Token list including the two sentence markers at the ends.
struct Sentence {
  std::vector<AmbiguousToken> tokens;

  static Sentence FromBody(std::vector<AmbiguousToken> body);

  size_t size() const { return tokens.size(); }
  // Body positions are [1, size()-1).
  size_t body_begin() const { return 1; }
  size_t body_end() const { return tokens.empty() ? 0 : tokens.size() - 1; }

  friend bool operator==(const Sentence& a, const Sentence& b) {
    return a.tokens == b.tokens;
  }
};

struct CorpusMetadata {
  // Free-form header comment lines kept for round-tripping.
  std::vector<std::string> header_comments;
  int64_t analyzer_calls = 0;
};

struct Corpus {
  std::vector<Sentence> sentences;
  CorpusMetadata metadata;

  size_t BodyTokenCount() const;
  size_t BodyParseCount() const;
};

}  // namespace morphdis

#endif  // MORPHDIS_CORPUS_H_
