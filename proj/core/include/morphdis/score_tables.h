// Context shapes, the incontext/count tables built over unambiguous
// contexts, and the candidate scoring formulas.

#ifndef MORPHDIS_SCORE_TABLES_H_
#define MORPHDIS_SCORE_TABLES_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/rule.h"

namespace morphdis {

// Listed from most to least specific.
enum class Shape { kS1 = 0, kS2L, kS2R, kS3, kS4L, kS4R };
inline constexpr int kNumShapes = 6;
inline constexpr std::array<Shape, kNumShapes> kAllShapes = {
    Shape::kS1, Shape::kS2L, Shape::kS2R, Shape::kS3, Shape::kS4L, Shape::kS4R};
inline constexpr int kNumGroups = 4;

std::string_view ShapeName(Shape shape);
// 0: S1, 1: S2L/S2R, 2: S3, 3: S4L/S4R.
int ShapeGroup(Shape shape);
bool ShapeHasSlot(Shape shape, int slot);

// Which neighbors a shape looks at; decides how the target is keyed.
enum class Side { kLeft = 0, kRight = 1, kBoth = 2 };
Side ShapeSide(Shape shape);

struct KeyOptions {
  // Attributes dropped from left (llc, lc) and right (rc, rrc) slot parses.
  std::vector<std::string> ignore_left = {"poss"};
  std::vector<std::string> ignore_right = {"case"};
  // Targets of left-only shapes drop the right ignore list; targets of
  // right-only shapes drop the left one.
  bool strip_targets = true;

  // No ignoring and no stripping (delete learning, context statistics).
  static KeyOptions Exact();
};

struct ContextKey {
  Shape shape = Shape::kS1;
  std::array<std::optional<FeatureStructure>, kNumSlots> slots;
  bool via_stem = false;  // rc entered through the stem of a derived form

  std::string Key() const;
  // Rule with this context and `target`.
  ConstraintRule MakeRule(RuleKind kind, const FeatureStructure& target) const;
};

FeatureStructure SlotView(const FeatureStructure& parse, int slot,
                          const KeyOptions& opts);
FeatureStructure TargetView(const FeatureStructure& parse, Side side,
                            const KeyOptions& opts);

// Every context around body position `i` whose constrained neighbors are
// unambiguous, restricted to `shapes`. A derived rc in a shape without rrc
// yields a second context keyed on its stem.
std::vector<ContextKey> ContextsAt(const Sentence& sentence, size_t i,
                                   const KeyOptions& opts,
                                   const std::vector<Shape>& shapes);

class ScoreTables {
 public:
  ScoreTables() = default;
  explicit ScoreTables(KeyOptions opts) : opts_(std::move(opts)) {}

  static ScoreTables Build(const Corpus& corpus, const KeyOptions& opts);

  // Adds (sign = +1) or removes (sign = -1) what the token at `i` contributes
  // as a center: its count entries and the contexts around it.
  void AddCenter(const Sentence& sentence, size_t i, int sign);

  int64_t Count(Side side, const std::string& parse_key) const;
  int64_t InContext(const std::string& context_key,
                    const std::string& parse_key) const;

  const KeyOptions& options() const { return opts_; }
  size_t context_count() const { return incontext_.size(); }

  friend bool operator==(const ScoreTables& a, const ScoreTables& b) {
    return a.count_ == b.count_ && a.incontext_ == b.incontext_;
  }

 private:
  void Bump(std::unordered_map<std::string, int64_t>* m, const std::string& k,
            int sign);

  KeyOptions opts_;
  std::array<std::unordered_map<std::string, int64_t>, 3> count_;
  std::unordered_map<std::string, std::unordered_map<std::string, int64_t>>
      incontext_;
};

// incontext(C, P_j) and count(P_j) for the competing parses of one token.
struct ParseStats {
  int64_t incontext = 0;
  int64_t count = 0;
  std::string key;  // tie-break order
};

// argmax over j != i with count(P_j) > 0 of count(P_i)/count(P_j) *
// incontext(C, P_j); ties go to the larger count, then the smaller key.
std::optional<size_t> SelectPmax(const std::vector<ParseStats>& parses, size_t i);

// incontext(C,P_i) - count(P_i)/count(P_max) * incontext(C,P_max). Absent
// when count(P_i) = 0; equals incontext(C,P_i) without a usable competitor.
std::optional<double> ChooseScore(const std::vector<ParseStats>& parses, size_t i);

// incontext(C,P_i)/count(P_i), 0 for an unseen parse.
double NormalizedScore(const ParseStats& p);

// Indices whose normalized score is strictly below `fraction` times the best
// one (nothing when the best is 0).
std::vector<size_t> DeleteVictims(const std::vector<ParseStats>& parses,
                                  double fraction);

}  // namespace morphdis

#endif  // MORPHDIS_SCORE_TABLES_H_
