// Partial feature patterns used by rules, and the subsumption test.

#ifndef MORPHDIS_CONSTRAINT_H_
#define MORPHDIS_CONSTRAINT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/feature_structure.h"
#include "morphdis/term.h"

namespace morphdis {

// `stem:no` inside a pattern demands that the parse has no stem.
inline constexpr std::string_view kNoStem = "no";

struct Constraint {
  FeatureStructure pattern;
  // Required surface, compared after ASCII lowercasing of both sides.
  std::optional<std::string> token;

  // Pattern text with the token condition appended as `token:x`.
  std::string ToString() const;

  friend bool operator==(const Constraint& a, const Constraint& b) {
    return a.pattern == b.pattern && a.token == b.token;
  }
};

// Pattern-only subsumption (recursive through `stem`).
bool PatternSubsumes(const FeatureStructure& pattern,
                     const FeatureStructure& parse);

// Full test including the token condition.
bool Subsumes(const Constraint& c, const FeatureStructure& parse,
              std::string_view surface);

std::string AsciiLower(std::string_view s);
bool SurfaceEquals(std::string_view a, std::string_view b);

// Builds a constraint from a bracketed pattern term. A `token:` entry at
// the top level becomes the token condition.
Constraint ConstraintFromTerm(const Term& term,
                              std::vector<std::string>* warnings);

}  // namespace morphdis

#endif  // MORPHDIS_CONSTRAINT_H_
