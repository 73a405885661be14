#include "morphdis/score_tables.h"

#include <algorithm>

namespace morphdis {

namespace {

constexpr std::array<std::array<bool, kNumSlots>, kNumShapes> kShapeSlots = {{
    {true, true, true, true},    // S1
    {true, true, false, false},  // S2L
    {false, false, true, true},  // S2R
    {false, true, true, false},  // S3
    {false, true, false, false}, // S4L
    {false, false, true, false}, // S4R
}};

FeatureStructure Without(const FeatureStructure& fs,
                         const std::vector<std::string>& names) {
  FeatureStructure out = fs;
  for (const std::string& n : names) out.Erase(n);
  return out;
}

}  // namespace

std::string_view ShapeName(Shape shape) {
  static constexpr std::array<std::string_view, kNumShapes> kNames = {
      "S1", "S2L", "S2R", "S3", "S4L", "S4R"};
  return kNames[static_cast<int>(shape)];
}

int ShapeGroup(Shape shape) {
  switch (shape) {
    case Shape::kS1: return 0;
    case Shape::kS2L:
    case Shape::kS2R: return 1;
    case Shape::kS3: return 2;
    case Shape::kS4L:
    case Shape::kS4R: return 3;
  }
  return 3;
}

bool ShapeHasSlot(Shape shape, int slot) {
  return kShapeSlots[static_cast<int>(shape)][slot];
}

Side ShapeSide(Shape shape) {
  bool left = ShapeHasSlot(shape, kLc) || ShapeHasSlot(shape, kLlc);
  bool right = ShapeHasSlot(shape, kRc) || ShapeHasSlot(shape, kRrc);
  if (left && right) return Side::kBoth;
  return left ? Side::kLeft : Side::kRight;
}

KeyOptions KeyOptions::Exact() {
  KeyOptions o;
  o.ignore_left.clear();
  o.ignore_right.clear();
  o.strip_targets = false;
  return o;
}

std::string ContextKey::Key() const {
  std::string out(ShapeName(shape));
  for (const std::optional<FeatureStructure>& s : slots) {
    out += '|';
    out += s ? s->ToString() : "-";
  }
  return out;
}

ConstraintRule ContextKey::MakeRule(RuleKind kind,
                                    const FeatureStructure& target) const {
  ConstraintRule r;
  r.kind = kind;
  for (int k = 0; k < kNumSlots; ++k) {
    if (slots[k]) r.context[k] = Constraint{*slots[k], std::nullopt};
  }
  r.target = Constraint{target, std::nullopt};
  return r;
}

FeatureStructure SlotView(const FeatureStructure& parse, int slot,
                          const KeyOptions& opts) {
  return Without(parse, slot == kLlc || slot == kLc ? opts.ignore_left
                                                    : opts.ignore_right);
}

FeatureStructure TargetView(const FeatureStructure& parse, Side side,
                            const KeyOptions& opts) {
  if (!opts.strip_targets || side == Side::kBoth) return parse;
  return Without(parse, side == Side::kLeft ? opts.ignore_right : opts.ignore_left);
}

std::vector<ContextKey> ContextsAt(const Sentence& sentence, size_t i,
                                   const KeyOptions& opts,
                                   const std::vector<Shape>& shapes) {
  std::vector<ContextKey> out;
  std::vector<std::string> seen;
  auto add = [&](ContextKey c) {
    std::string k = c.Key();
    if (std::find(seen.begin(), seen.end(), k) != seen.end()) return;
    seen.push_back(std::move(k));
    out.push_back(std::move(c));
  };
  for (Shape shape : shapes) {
    ContextKey c;
    c.shape = shape;
    bool ok = true;
    for (int slot = 0; slot < kNumSlots && ok; ++slot) {
      if (!ShapeHasSlot(shape, slot)) continue;
      long pos = static_cast<long>(i) + kSlotOffset[slot];
      if (pos < 0 || pos >= static_cast<long>(sentence.size()) ||
          !sentence.tokens[pos].unambiguous()) {
        ok = false;
        break;
      }
      c.slots[slot] = SlotView(sentence.tokens[pos].parses[0], slot, opts);
    }
    if (!ok) continue;
    add(c);
    if (ShapeHasSlot(shape, kRc) && !ShapeHasSlot(shape, kRrc)) {
      const FeatureStructure* stem =
          sentence.tokens[i + 1].parses[0].FindNested("stem");
      if (stem != nullptr) {
        ContextKey d = c;
        d.slots[kRc] = SlotView(*stem, kRc, opts);
        d.via_stem = true;
        add(std::move(d));
      }
    }
  }
  return out;
}

ScoreTables ScoreTables::Build(const Corpus& corpus, const KeyOptions& opts) {
  ScoreTables t(opts);
  for (const Sentence& s : corpus.sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) t.AddCenter(s, i, +1);
  }
  return t;
}

void ScoreTables::Bump(std::unordered_map<std::string, int64_t>* m,
                       const std::string& k, int sign) {
  int64_t& v = (*m)[k];
  v += sign;
  if (v == 0) m->erase(k);
}

void ScoreTables::AddCenter(const Sentence& sentence, size_t i, int sign) {
  if (i < sentence.body_begin() || i >= sentence.body_end()) return;
  const AmbiguousToken& tok = sentence.tokens[i];
  if (!tok.unambiguous()) return;
  const FeatureStructure& p = tok.parses[0];
  const FeatureStructure* stem = p.FindNested("stem");
  for (Side side : {Side::kLeft, Side::kRight, Side::kBoth}) {
    auto& table = count_[static_cast<int>(side)];
    Bump(&table, TargetView(p, side, opts_).ToString(), sign);
    if (stem != nullptr) Bump(&table, TargetView(*stem, side, opts_).ToString(), sign);
  }
  static const std::vector<Shape> kShapes(kAllShapes.begin(), kAllShapes.end());
  for (const ContextKey& c : ContextsAt(sentence, i, opts_, kShapes)) {
    std::string ck = c.Key();
    auto& row = incontext_[ck];
    Bump(&row, TargetView(p, ShapeSide(c.shape), opts_).ToString(), sign);
    if (row.empty()) incontext_.erase(ck);
  }
}

int64_t ScoreTables::Count(Side side, const std::string& parse_key) const {
  const auto& table = count_[static_cast<int>(side)];
  auto it = table.find(parse_key);
  return it == table.end() ? 0 : it->second;
}

int64_t ScoreTables::InContext(const std::string& context_key,
                               const std::string& parse_key) const {
  auto row = incontext_.find(context_key);
  if (row == incontext_.end()) return 0;
  auto it = row->second.find(parse_key);
  return it == row->second.end() ? 0 : it->second;
}

std::optional<size_t> SelectPmax(const std::vector<ParseStats>& parses, size_t i) {
  std::optional<size_t> best;
  for (size_t j = 0; j < parses.size(); ++j) {
    if (j == i || parses[j].count <= 0) continue;
    if (!best) {
      best = j;
      continue;
    }
    const ParseStats& a = parses[j];
    const ParseStats& b = parses[*best];
    // Compare incontext/count without division; counts stay far below 2^31.
    int64_t lhs = a.incontext * b.count;
    int64_t rhs = b.incontext * a.count;
    if (lhs > rhs || (lhs == rhs && (a.count > b.count ||
                                     (a.count == b.count && a.key < b.key)))) {
      best = j;
    }
  }
  return best;
}

std::optional<double> ChooseScore(const std::vector<ParseStats>& parses, size_t i) {
  const ParseStats& p = parses[i];
  if (p.count <= 0) return std::nullopt;
  std::optional<size_t> m = SelectPmax(parses, i);
  double inc = static_cast<double>(p.incontext);
  if (!m) return inc;
  const ParseStats& q = parses[*m];
  return inc - static_cast<double>(p.count) * static_cast<double>(q.incontext) /
                   static_cast<double>(q.count);
}

double NormalizedScore(const ParseStats& p) {
  if (p.count <= 0) return 0.0;
  return static_cast<double>(p.incontext) / static_cast<double>(p.count);
}

std::vector<size_t> DeleteVictims(const std::vector<ParseStats>& parses,
                                  double fraction) {
  double best = 0.0;
  for (const ParseStats& p : parses) best = std::max(best, NormalizedScore(p));
  std::vector<size_t> out;
  if (best <= 0.0) return out;
  for (size_t i = 0; i < parses.size(); ++i) {
    if (NormalizedScore(parses[i]) < fraction * best) out.push_back(i);
  }
  return out;
}

}  // namespace morphdis
