// Multiword collocation database and recognizer. Three entry kinds:
//   non-lexicalized  token patterns with shared root (_R) or word (_W)
//                    variables and an output parse template (%s = surface)
//   fixed            exact word sequences with an output parse template
//   inflectable      word sequences whose last word may carry inflection;
//                    the group takes the last token's parses
// Dates, "yUzde <number>" and numeric ranges are recognized built in.
//
// File layout: `@non-lexicalized`, `@fixed` and `@inflectable` section
// headers; `%` comment lines; non-lexicalized entries are a pattern line
// followed by an output line; fixed entries are `words => output`.

#ifndef MORPHDIS_COLLOCATION_H_
#define MORPHDIS_COLLOCATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "morphdis/linear_parse.h"
#include "morphdis/morphology.h"

namespace morphdis {

// Items constraining one token of a non-lexicalized pattern.
struct TokenSpec {
  std::vector<LinearItem> items;
  friend bool operator==(const TokenSpec&, const TokenSpec&) = default;
};

struct NonLexicalizedEntry {
  std::vector<std::string> comments;
  std::vector<TokenSpec> tokens;
  LinearParse output;
};

struct FixedEntry {
  std::vector<std::string> comments;
  std::vector<std::string> words;
  LinearParse output;
};

struct InflectableEntry {
  std::vector<std::string> comments;
  std::vector<std::string> words;
};

class CollocationDb {
 public:
  static CollocationDb Parse(std::string_view text);
  static CollocationDb Load(const std::string& path);
  // The database compiled from data/collocations.db.
  static const CollocationDb& Default();

  std::string ToString() const;

  std::vector<std::string> header_comments;
  std::vector<NonLexicalizedEntry> non_lexicalized;
  std::vector<FixedEntry> fixed;
  std::vector<InflectableEntry> inflectable;
  // Month names for date recognition (compared ignoring ASCII case).
  std::vector<std::string> months = {"ocak",   "Subat", "mart",    "nisan",
                                     "mayIs",  "haziran", "temmuz", "aGustos",
                                     "eylUl",  "ekim",  "kasIm",   "aralIk"};
};

// Packs collocations left to right, preferring the longest match; on equal
// length lexicalized entries (and the built-in date, percentage and range
// groups) win over non-lexicalized patterns. Packed tokens carry the
// collocation flag.
AnalyzedSentence RecognizeCollocations(const AnalyzedSentence& sentence,
                                       const CollocationDb& db,
                                       const SuffixInventory& inventory);

}  // namespace morphdis

#endif  // MORPHDIS_COLLOCATION_H_
