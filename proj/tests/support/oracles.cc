#include "support/oracles.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#ifndef MORPHDIS_FIXTURE_DIR
#error "MORPHDIS_FIXTURE_DIR must be defined"
#endif
#ifndef MORPHDIS_DATA_DIR_PATH
#error "MORPHDIS_DATA_DIR_PATH must be defined"
#endif

namespace morphdis::testing {

std::string FixturePath(const std::string& name) {
  return std::string(MORPHDIS_FIXTURE_DIR) + "/" + name;
}

std::string DataPath(const std::string& name) {
  return std::string(MORPHDIS_DATA_DIR_PATH) + "/" + name;
}

Rational Rational::Of(int64_t n, int64_t d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g == 0) g = 1;
  return {n / g, d / g};
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::Of(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::optional<Rational> BruteChooseScore(const std::vector<int64_t>& incontext,
                                         const std::vector<int64_t>& count, size_t i) {
  if (count[i] <= 0) return std::nullopt;
  std::optional<Rational> worst;
  for (size_t j = 0; j < count.size(); ++j) {
    if (j == i || count[j] <= 0) continue;
    Rational r = Rational::Of(count[i] * incontext[j], count[j]);
    if (!worst || *worst < r) worst = r;
  }
  Rational own = Rational::Of(incontext[i], 1);
  return worst ? own - *worst : own;
}

Rational BruteNormalized(int64_t incontext, int64_t count) {
  return count <= 0 ? Rational{} : Rational::Of(incontext, count);
}

std::vector<size_t> BruteDeleteVictims(const std::vector<int64_t>& incontext,
                                       const std::vector<int64_t>& count,
                                       double fraction) {
  Rational best;
  for (size_t i = 0; i < count.size(); ++i) {
    Rational r = BruteNormalized(incontext[i], count[i]);
    if (best < r) best = r;
  }
  std::vector<size_t> out;
  if (best.num == 0) return out;
  long double limit = static_cast<long double>(fraction) * best.num / best.den;
  for (size_t i = 0; i < count.size(); ++i) {
    Rational r = BruteNormalized(incontext[i], count[i]);
    if (static_cast<long double>(r.num) / r.den < limit) out.push_back(i);
  }
  return out;
}

namespace {

// Slots of each shape in llc, lc, rc, rrc order.
constexpr bool kSlots[kNumShapes][kNumSlots] = {
    {true, true, true, true},    // both sides, two tokens each
    {true, true, false, false},  // two on the left
    {false, false, true, true},  // two on the right
    {false, true, true, false},  // one each side
    {false, true, false, false},  // left neighbor
    {false, false, true, false},  // right neighbor
};
constexpr int kGroup[kNumShapes] = {0, 1, 1, 2, 3, 3};
constexpr int kOffset[kNumSlots] = {-2, -1, 1, 2};

bool HasLeft(int shape) { return kSlots[shape][0] || kSlots[shape][1]; }
bool HasRight(int shape) { return kSlots[shape][2] || kSlots[shape][3]; }

Side SideOf(int shape) {
  if (HasLeft(shape) && HasRight(shape)) return Side::kBoth;
  return HasLeft(shape) ? Side::kLeft : Side::kRight;
}

FeatureStructure Drop(FeatureStructure fs, const std::vector<std::string>& names) {
  for (const std::string& n : names) fs.Erase(n);
  return fs;
}

FeatureStructure Neighbor(const FeatureStructure& p, int slot, const KeyOptions& o) {
  return Drop(p, slot < 2 ? o.ignore_left : o.ignore_right);
}

FeatureStructure Center(const FeatureStructure& p, Side side, const KeyOptions& o) {
  if (!o.strip_targets || side == Side::kBoth) return p;
  return Drop(p, side == Side::kLeft ? o.ignore_right : o.ignore_left);
}

// Every attribute of the pattern occurs in the parse with an equal value,
// nested values compared the same way.
bool Covers(const FeatureStructure& pattern, const FeatureStructure& parse) {
  for (const auto& f : pattern.features()) {
    const FeatureValue* v = parse.Find(f.name);
    if (v == nullptr) return false;
    if (f.value.is_nested()) {
      if (!v->is_nested() || !Covers(f.value.nested(), v->nested())) return false;
    } else if (!v->is_atom() || v->atom() != f.value.atom()) {
      return false;
    }
  }
  return true;
}

// rc may be matched through the stem when the shape has rc but no rrc.
bool StemAlternative(int shape) { return kSlots[shape][2] && !kSlots[shape][3]; }

struct Context {
  int shape = 0;
  std::array<std::optional<std::string>, kNumSlots> views;
  std::array<std::optional<FeatureStructure>, kNumSlots> patterns;
  std::string Id() const {
    std::string out = std::to_string(shape);
    for (const auto& v : views) out += "|" + (v ? *v : std::string("-"));
    return out;
  }
};

bool MatchesAt(const Context& c, const Sentence& s, size_t j, const KeyOptions& o) {
  for (int k = 0; k < kNumSlots; ++k) {
    if (!c.views[k]) continue;
    long pos = static_cast<long>(j) + kOffset[k];
    if (pos < 0 || pos >= static_cast<long>(s.size())) return false;
    const AmbiguousToken& n = s.tokens[pos];
    if (n.parses.size() != 1) return false;
    if (Neighbor(n.parses[0], k, o).ToString() == *c.views[k]) continue;
    const FeatureStructure* stem = n.parses[0].FindNested("stem");
    if (k == 2 && StemAlternative(c.shape) && stem != nullptr &&
        Neighbor(*stem, k, o).ToString() == *c.views[k]) {
      continue;
    }
    return false;
  }
  return true;
}

int64_t InContextOf(const Corpus& corpus, const Context& c, const std::string& key,
                    const KeyOptions& o) {
  int64_t n = 0;
  Side side = SideOf(c.shape);
  for (const Sentence& s : corpus.sentences) {
    for (size_t j = s.body_begin(); j < s.body_end(); ++j) {
      const AmbiguousToken& t = s.tokens[j];
      if (t.parses.size() != 1) continue;
      if (Center(t.parses[0], side, o).ToString() != key) continue;
      if (MatchesAt(c, s, j, o)) ++n;
    }
  }
  return n;
}

}  // namespace

int64_t BruteCount(const Corpus& corpus, Side side, const std::string& parse_key,
                   const KeyOptions& opts) {
  int64_t n = 0;
  for (const Sentence& s : corpus.sentences) {
    for (size_t j = s.body_begin(); j < s.body_end(); ++j) {
      const AmbiguousToken& t = s.tokens[j];
      if (t.parses.size() != 1) continue;
      if (Center(t.parses[0], side, opts).ToString() == parse_key) ++n;
      const FeatureStructure* stem = t.parses[0].FindNested("stem");
      if (stem != nullptr && Center(*stem, side, opts).ToString() == parse_key) ++n;
    }
  }
  return n;
}

int64_t BruteInContext(const Corpus& corpus, const ContextKey& context,
                       const std::string& parse_key, const KeyOptions& opts) {
  Context c;
  c.shape = static_cast<int>(context.shape);
  for (int k = 0; k < kNumSlots; ++k) {
    if (context.slots[k]) c.views[k] = context.slots[k]->ToString();
  }
  return InContextOf(corpus, c, parse_key, opts);
}

std::vector<BruteCandidate> EnumerateChooseCandidates(const Corpus& projected,
                                                      const KeyOptions& opts) {
  std::map<std::string, int64_t> inc_memo;
  std::map<std::string, int64_t> count_memo;
  std::map<std::string, BruteCandidate> best;
  for (const Sentence& s : projected.sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
      const AmbiguousToken& tok = s.tokens[i];
      if (tok.parses.size() < 2) continue;
      for (int shape = 0; shape < kNumShapes; ++shape) {
        Context base;
        base.shape = shape;
        bool ok = true;
        for (int k = 0; k < kNumSlots && ok; ++k) {
          if (!kSlots[shape][k]) continue;
          long pos = static_cast<long>(i) + kOffset[k];
          ok = pos >= 0 && pos < static_cast<long>(s.size()) &&
               s.tokens[pos].parses.size() == 1;
          if (!ok) break;
          base.patterns[k] = Neighbor(s.tokens[pos].parses[0], k, opts);
          base.views[k] = base.patterns[k]->ToString();
        }
        if (!ok) continue;
        std::vector<Context> contexts = {base};
        const FeatureStructure* stem =
            StemAlternative(shape) ? s.tokens[i + 1].parses[0].FindNested("stem") : nullptr;
        if (stem != nullptr) {
          Context alt = base;
          alt.patterns[2] = Neighbor(*stem, 2, opts);
          alt.views[2] = alt.patterns[2]->ToString();
          if (alt.Id() != base.Id()) contexts.push_back(alt);
        }
        Side side = SideOf(shape);
        std::vector<FeatureStructure> targets;
        std::vector<std::string> keys;
        for (const FeatureStructure& p : tok.parses) {
          FeatureStructure v = Center(p, side, opts);
          std::string k = v.ToString();
          if (std::find(keys.begin(), keys.end(), k) != keys.end()) continue;
          keys.push_back(k);
          targets.push_back(v);
        }
        if (targets.size() < 2) continue;
        for (const Context& c : contexts) {
          std::vector<int64_t> inc, cnt;
          for (const std::string& k : keys) {
            std::string im = c.Id() + "#" + k;
            auto it = inc_memo.find(im);
            if (it == inc_memo.end()) {
              it = inc_memo.emplace(im, InContextOf(projected, c, k, opts)).first;
            }
            inc.push_back(it->second);
            std::string cm = std::to_string(static_cast<int>(side)) + "#" + k;
            auto jt = count_memo.find(cm);
            if (jt == count_memo.end()) {
              jt = count_memo.emplace(cm, BruteCount(projected, side, k, opts)).first;
            }
            cnt.push_back(jt->second);
          }
          for (size_t t = 0; t < targets.size(); ++t) {
            bool all = std::all_of(tok.parses.begin(), tok.parses.end(),
                                   [&](const FeatureStructure& p) {
                                     return Covers(targets[t], p);
                                   });
            if (all) continue;
            std::optional<Rational> score = BruteChooseScore(inc, cnt, t);
            if (!score) continue;
            BruteCandidate cand;
            cand.shape = static_cast<Shape>(shape);
            cand.score = score->ToDouble();
            cand.rule.kind = RuleKind::kChoose;
            for (int k = 0; k < kNumSlots; ++k) {
              if (c.patterns[k]) cand.rule.context[k] = Constraint{*c.patterns[k], std::nullopt};
            }
            cand.rule.target = Constraint{targets[t], std::nullopt};
            std::string id = cand.rule.ToString();
            auto it = best.find(id);
            if (it == best.end()) {
              best.emplace(id, std::move(cand));
            } else if (cand.score > it->second.score) {
              it->second.score = cand.score;
            }
          }
        }
      }
    }
  }
  std::vector<BruteCandidate> out;
  for (auto& [id, c] : best) out.push_back(std::move(c));
  return out;
}

BruteSelection SelectFirstRule(const std::vector<BruteCandidate>& candidates,
                               const LearnerConfig& config) {
  BruteSelection sel;
  sel.thresholds = config.thresholds;
  while (sel.thresholds[0] >= config.lower_limit) {
    for (int g = 0; g < kNumGroups; ++g) {
      const BruteCandidate* top = nullptr;
      for (const BruteCandidate& c : candidates) {
        if (kGroup[static_cast<int>(c.shape)] != g) continue;
        if (top == nullptr || c.score > top->score) top = &c;
      }
      if (top == nullptr || top->score < sel.thresholds[g]) continue;
      sel.best = *top;
      for (const BruteCandidate& c : candidates) {
        if (&c != top && kGroup[static_cast<int>(c.shape)] == g && c.score == top->score) {
          ++sel.ties;
        }
      }
      return sel;
    }
    for (double& t : sel.thresholds) t *= config.damping;
  }
  return sel;
}

namespace {

bool Vowel(char c) { return std::string_view("aeIioOuU").find(c) != std::string_view::npos; }
bool Voiceless(char c) { return std::string_view("fstkCSph").find(c) != std::string_view::npos; }

char LastVowel(const std::string& s) {
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    if (Vowel(*it)) return *it;
  }
  return 'e';
}

// Appends a suffix written with A (a/e), I (I/i/u/U), D (d/t) and an
// optional parenthesized letter.
void Attach(std::string* word, std::string_view form) {
  for (size_t k = 0; k < form.size(); ++k) {
    char c = form[k];
    if (c == '(') {
      // A bracketed vowel is dropped after a vowel, a bracketed consonant
      // after a consonant.
      char buffer = form[k + 1];
      bool vowel_buffer = buffer == 'I' || buffer == 'A';
      k += 2;
      if (vowel_buffer == Vowel(word->back())) continue;
      c = buffer;
    }
    char v = LastVowel(*word);
    bool back = std::string_view("aIou").find(v) != std::string_view::npos;
    bool round = std::string_view("oOuU").find(v) != std::string_view::npos;
    if (c == 'A') {
      word->push_back(back ? 'a' : 'e');
    } else if (c == 'I') {
      word->push_back(back ? (round ? 'u' : 'I') : (round ? 'U' : 'i'));
    } else if (c == 'D') {
      word->push_back(Voiceless(word->back()) ? 't' : 'd');
    } else {
      word->push_back(c);
    }
  }
}

}  // namespace

std::string InflectNominal(const std::string& root, const std::string& agr,
                           const std::string& poss, const std::string& case_) {
  std::string w = root;
  bool plural = agr == "3PL";
  if (plural) Attach(&w, "lAr");
  static const std::map<std::string, std::string> kPoss = {
      {"1SG", "(I)m"}, {"2SG", "(I)n"}, {"1PL", "(I)mIz"}, {"2PL", "(I)nIz"}};
  if (poss == "3SG") {
    Attach(&w, plural ? "I" : "(s)I");
  } else if (poss == "3PL") {
    Attach(&w, plural ? "I" : "lArI");
  } else if (poss != "NONE") {
    Attach(&w, kPoss.at(poss));
  }
  bool third = poss == "3SG" || poss == "3PL";
  static const std::map<std::string, std::pair<std::string, std::string>> kCase = {
      {"ACC", {"(y)I", "nI"}},  {"DAT", {"(y)A", "nA"}},   {"LOC", {"DA", "nDA"}},
      {"ABL", {"DAn", "nDAn"}}, {"GEN", {"(n)In", "nIn"}}, {"INS", {"(y)lA", "(y)lA"}},
      {"EQU", {"cA", "ncA"}}};
  if (case_ != "NOM") {
    const auto& forms = kCase.at(case_);
    Attach(&w, third ? forms.second : forms.first);
  }
  return w;
}

std::string RandomRoot(std::mt19937_64& rng) {
  static const std::string kCons = "bcdfghklmnprstvyzCS";
  static const std::string kVow = "aeIioOuU";
  auto pick = [&](const std::string& s) {
    return s[std::uniform_int_distribution<size_t>(0, s.size() - 1)(rng)];
  };
  int syllables = std::uniform_int_distribution<int>(2, 4)(rng);
  std::string r;
  for (int k = 0; k < syllables; ++k) {
    r += pick(kCons);
    r += pick(kVow);
  }
  if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) r += pick(kCons);
  return r;
}

}  // namespace morphdis::testing
