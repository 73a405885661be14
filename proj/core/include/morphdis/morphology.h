// Nominal suffix inventory with vowel harmony, the unknown-word guesser and
// analysis of numeric tokens with suffix tails.

#ifndef MORPHDIS_MORPHOLOGY_H_
#define MORPHDIS_MORPHOLOGY_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/linear_parse.h"
#include "morphdis/tokenizer.h"

namespace morphdis {

enum class SuffixSlot { kAgr = 0, kPoss = 1, kCase = 2, kRel = 3 };

enum SuffixCondition : uint32_t {
  kAfterVowel = 1u << 0,
  kAfterConsonant = 1u << 1,
  kAfterPoss3 = 1u << 2,
  kNotAfterPoss3 = 1u << 3,
  kPlural = 1u << 4,
  kSingular = 1u << 5,
  kAfterLocGen = 1u << 6,
};

struct SuffixEntry {
  SuffixSlot slot = SuffixSlot::kCase;
  std::string form;  // with archiphonemes A, I, D
  uint32_t conditions = 0;
  std::string value;  // e.g. 3PL, 1SG, ACC, REL
};

class SuffixInventory {
 public:
  // Tab-separated lines: slot, form, conditions (`-` for none), value.
  static SuffixInventory Parse(std::string_view text);
  static SuffixInventory Load(const std::string& path);
  // The inventory compiled from data/suffixes.tsv.
  static const SuffixInventory& Default();

  const std::vector<SuffixEntry>& entries() const { return entries_; }

 private:
  std::vector<SuffixEntry> entries_;
};

enum class HarmonyMode {
  kStrict,      // archiphonemes resolved from the stem
  kPermissive,  // any variant accepted
  kUnknownStem  // stem pronunciation unknown (numerals): permissive, and
                // both vowel- and consonant-final conditions hold for it
};

struct NominalAnalysis {
  std::string root;
  bool proper = false;
  std::string agr = "3SG";
  std::string poss = "NONE";
  std::string case_ = "NOM";
  bool rel = false;

  friend bool operator==(const NominalAnalysis& a, const NominalAnalysis& b) {
    return a.root == b.root && a.proper == b.proper && a.agr == b.agr &&
           a.poss == b.poss && a.case_ == b.case_ && a.rel == b.rel;
  }
};

// Every way `tail` can be read as agr/poss/case/rel suffixes on `stem`.
std::vector<NominalAnalysis> AnalyzeSuffixes(std::string_view stem,
                                             std::string_view tail,
                                             const SuffixInventory& inventory,
                                             HarmonyMode mode);

// Realizes `form` after `stem` under strict harmony (first variant).
std::string RealizeSuffix(std::string_view stem, std::string_view form);

bool IsVowel(char c);

// Noun parse(s) for one analysis; a relative `ki` yields the adjective and
// its zero-derived noun.
std::vector<LinearParse> NominalParses(const NominalAnalysis& analysis);

// Nominal guesses for a word the analyzer does not know. Without an
// apostrophe every split point is tried and the bare word as a NOM root is
// always included; an apostrophe fixes the root boundary and marks the root
// proper. Harmony is strict, falling back to permissive when strict yields
// nothing beyond the bare-root reading.
std::vector<LinearParse> GuessUnknown(std::string_view surface,
                                      const SuffixInventory& inventory);

// Parses of a numeric token. Sets *unknown when a suffix tail cannot be
// analyzed (the bare numeral parse is returned then).
std::vector<LinearParse> AnalyzeNumeric(std::string_view token,
                                        const SuffixInventory& inventory,
                                        bool* unknown);

}  // namespace morphdis

#endif  // MORPHDIS_MORPHOLOGY_H_
