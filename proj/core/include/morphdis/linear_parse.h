// Analyzer-style linear parses: a flat sequence of attribute/value pairs in
// which `conv` markers separate derivation segments, e.g.
//   [[CAT=VERB][ROOT=gel][SENSE=POS][CONV=NOUN=YIS][AGR=3SG][POSS=2SG]]
// and their conversion to nested feature structures.

#ifndef MORPHDIS_LINEAR_PARSE_H_
#define MORPHDIS_LINEAR_PARSE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/feature_structure.h"

namespace morphdis {

struct LinearItem {
  std::string name;    // lowercase attribute name
  std::string value;   // value as written (case preserved)
  std::string suffix;  // conversion suffix; only for `conv`

  bool is_conv() const { return name == "conv"; }
  friend bool operator==(const LinearItem& a, const LinearItem& b) {
    return a.name == b.name && a.value == b.value && a.suffix == b.suffix;
  }
};

struct LinearParse {
  std::vector<LinearItem> items;

  // Value of the first item named `name`, or nullptr.
  const std::string* Find(std::string_view name) const;
  // Root of the parse (first `root` item), or nullptr.
  const std::string* root() const { return Find("root"); }

  // Bracket form: [[CAT=VERB][ROOT=gel][CONV=NOUN=YIS]].
  std::string ToString() const;

  friend bool operator==(const LinearParse& a, const LinearParse& b) {
    return a.items == b.items;
  }
};

// One item in bracket form: [NAME=VALUE] or [CONV=CAT=SUFFIX].
std::string LinearItemToString(const LinearItem& item);

// A token with its analyzer parses, before format conversion.
struct AnalyzedToken {
  std::string surface;
  std::vector<LinearParse> parses;
  uint32_t flags = 0;  // TokenFlag bits

  friend bool operator==(const AnalyzedToken& a, const AnalyzedToken& b) {
    return a.surface == b.surface && a.parses == b.parses && a.flags == b.flags;
  }
};
using AnalyzedSentence = std::vector<AnalyzedToken>;

// Accepts the bracket form (with `=` or blanks between the parts of an item)
// and the list form [[cat,noun],[root,'ben'],[conv,verb,none]].
LinearParse ParseLinear(std::string_view text);

// Normalizes an atom value the way hierarchical parses store it: `root` is
// kept verbatim, agr/poss are uppercased, case drops buffer-consonant
// variants (ACCy, abl_y -> acc, abl), everything else is lowercased.
std::string NormalizeValue(std::string_view name, std::string_view value);

// The segment after the last conversion becomes the top level; earlier
// segments nest under `stem` with the conversion suffix beside them.
FeatureStructure ToHierarchical(const LinearParse& parse);

// Inverse of ToHierarchical up to attribute order within a segment.
LinearParse ToLinear(const FeatureStructure& fs);

}  // namespace morphdis

#endif  // MORPHDIS_LINEAR_PARSE_H_
