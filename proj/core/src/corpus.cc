#include "morphdis/corpus.h"

namespace morphdis {

AmbiguousToken BeginMarker() {
  AmbiguousToken t;
  t.surface = std::string(kBeginSurface);
  t.parses.push_back(FeatureStructure{{"cat", std::string(kBeginCat)}});
  return t;
}

AmbiguousToken EndMarker() {
  AmbiguousToken t;
  t.surface = std::string(kEndSurface);
  t.parses.push_back(FeatureStructure{{"cat", std::string(kEndCat)}});
  return t;
}

bool IsMarker(const AmbiguousToken& token) {
  if (token.parses.size() != 1) return false;
  const std::string* cat = token.parses[0].FindAtom("cat");
  return cat != nullptr && (*cat == kBeginCat || *cat == kEndCat);
}

Sentence Sentence::FromBody(std::vector<AmbiguousToken> body) {
  Sentence s;
  s.tokens.reserve(body.size() + 2);
  s.tokens.push_back(BeginMarker());
  for (AmbiguousToken& t : body) s.tokens.push_back(std::move(t));
  s.tokens.push_back(EndMarker());
  return s;
}

size_t Corpus::BodyTokenCount() const {
  size_t n = 0;
  for (const Sentence& s : sentences) n += s.body_end() - s.body_begin();
  return n;
}

size_t Corpus::BodyParseCount() const {
  size_t n = 0;
  for (const Sentence& s : sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
      n += s.tokens[i].parses.size();
    }
  }
  return n;
}

}  // namespace morphdis
