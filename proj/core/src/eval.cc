#include "morphdis/eval.h"

#include <algorithm>
#include <cstdio>

#include "morphdis/term.h"

namespace morphdis {

namespace {

double Ratio(int64_t num, int64_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

FeatureStructure View(const FeatureStructure& p, const EvalOptions& o) {
  return o.projection != nullptr ? o.projection->Project(p) : p;
}

// Sentence markers, gold tokens without a reading and, by default,
// analyzer-unknown tokens do not take part.
bool Counted(const AmbiguousToken& sys, const AmbiguousToken& gold,
             const EvalOptions& o) {
  if (gold.parses.empty() || IsMarker(gold)) return false;
  return !(o.ignore_unknown && sys.has_flag(kFlagUnknown));
}

bool KeepsGold(const AmbiguousToken& sys, const AmbiguousToken& gold,
               const EvalOptions& o) {
  for (const FeatureStructure& g : gold.parses) {
    FeatureStructure gv = View(g, o);
    for (const FeatureStructure& p : sys.parses) {
      if (View(p, o) == gv) return true;
    }
  }
  return false;
}

std::string Pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

}  // namespace

double EvalCounts::recall() const { return Ratio(received_appropriate, intended); }
double EvalCounts::precision() const { return Ratio(received_appropriate, all_received); }
double EvalCounts::ambiguity() const { return Ratio(all_received, tokens); }

void CheckAlignment(const Corpus& system, const Corpus& gold) {
  if (system.sentences.size() != gold.sentences.size()) {
    throw FormatError("system has " + std::to_string(system.sentences.size()) +
                      " sentences, gold has " + std::to_string(gold.sentences.size()));
  }
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& a = system.sentences[s].tokens;
    const auto& b = gold.sentences[s].tokens;
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
      if (a[i].surface != b[i].surface) {
        throw FormatError("sentence " + std::to_string(s + 1) + ", token " +
                          std::to_string(i) + ": system '" + a[i].surface +
                          "' vs gold '" + b[i].surface + "'");
      }
    }
    if (a.size() != b.size()) {
      throw FormatError("sentence " + std::to_string(s + 1) + ": system has " +
                        std::to_string(a.size()) + " tokens, gold has " +
                        std::to_string(b.size()));
    }
  }
}

EvalCounts Evaluate(const Corpus& system, const Corpus& gold, const EvalOptions& o) {
  CheckAlignment(system, gold);
  EvalCounts c;
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& st = system.sentences[s].tokens;
    const auto& gt = gold.sentences[s].tokens;
    for (size_t i = 0; i < gt.size(); ++i) {
      if (!Counted(st[i], gt[i], o)) continue;
      ++c.tokens;
      ++c.intended;
      c.all_received += static_cast<int64_t>(st[i].parses.size());
      if (KeepsGold(st[i], gt[i], o)) ++c.received_appropriate;
    }
  }
  return c;
}

SentenceCounts EvaluateSentences(const Corpus& system, const Corpus& gold,
                                 const EvalOptions& o) {
  CheckAlignment(system, gold);
  SentenceCounts c;
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& st = system.sentences[s].tokens;
    const auto& gt = gold.sentences[s].tokens;
    int64_t wrong = 0;
    bool ambiguous = false;
    for (size_t i = 0; i < gt.size(); ++i) {
      if (!Counted(st[i], gt[i], o)) continue;
      if (!KeepsGold(st[i], gt[i], o)) ++wrong;
      if (st[i].parses.size() > 1) ambiguous = true;
    }
    ++c.sentences;
    if (wrong == 0) {
      ++(ambiguous ? c.ambiguous_correct : c.unambiguous_correct);
    } else {
      ++c.wrong_histogram[std::min<int64_t>(wrong, 4) - 1];
    }
  }
  return c;
}

UnknownCounts EvaluateUnknown(const Corpus& system, const Corpus& gold,
                              const EvalOptions& o) {
  CheckAlignment(system, gold);
  UnknownCounts c;
  for (size_t s = 0; s < gold.sentences.size(); ++s) {
    const auto& st = system.sentences[s].tokens;
    const auto& gt = gold.sentences[s].tokens;
    for (size_t i = 0; i < gt.size(); ++i) {
      if (!st[i].has_flag(kFlagUnknown)) continue;
      ++c.unknown;
      if (st[i].has_flag(kFlagGuessed) && !st[i].parses.empty()) ++c.parsed;
      if (!gt[i].parses.empty() && KeepsGold(st[i], gt[i], o)) ++c.correct;
    }
  }
  return c;
}

std::string Percent(int64_t num, int64_t den) {
  if (den == 0) return "-";
  return Percent(Ratio(num, den));
}

std::string Percent(double ratio) { return Fixed(100.0 * ratio, 2) + "%"; }

std::string FormatStageTable(const std::vector<StageRow>& rows) {
  size_t w = 5;
  for (const StageRow& r : rows) w = std::max(w, r.label.size());
  w += 2;
  std::string out = Pad("Stage", w) + Pad("Recall", 10) + Pad("Precision", 11) +
                    "Ambiguity\n";
  for (const StageRow& r : rows) {
    out += Pad(r.label, w);
    if (r.counts) {
      out += Pad(Percent(r.counts->received_appropriate, r.counts->intended), 10);
      out += Pad(Percent(r.counts->received_appropriate, r.counts->all_received), 11);
    } else {
      out += Pad("-", 10) + Pad("-", 11);
    }
    out += Fixed(r.ambiguity, 3) + "\n";
  }
  return out;
}

std::string FormatEvalKeyValues(const EvalCounts& c) {
  std::string out;
  out += "tokens: " + std::to_string(c.tokens) + "\n";
  out += "intended: " + std::to_string(c.intended) + "\n";
  out += "received_appropriate: " + std::to_string(c.received_appropriate) + "\n";
  out += "all_received: " + std::to_string(c.all_received) + "\n";
  out += "recall: " + Percent(c.received_appropriate, c.intended) + "\n";
  out += "precision: " + Percent(c.received_appropriate, c.all_received) + "\n";
  out += "ambiguity: " + (c.tokens == 0 ? std::string("-") : Fixed(c.ambiguity(), 3)) + "\n";
  if (c.intended == c.all_received) {
    out += "accuracy: " + Percent(c.received_appropriate, c.intended) + "\n";
  }
  return out;
}

std::string FormatSentenceReport(const SentenceCounts& c) {
  std::string out;
  out += "sentences: " + std::to_string(c.sentences) + "\n";
  out += "UA/C: " + Percent(c.unambiguous_correct, c.sentences) + "\n";
  out += "A/C: " + Percent(c.ambiguous_correct, c.sentences) + "\n";
  out += "UA/C+A/C: " +
         Percent(c.unambiguous_correct + c.ambiguous_correct, c.sentences) + "\n";
  static const char* kLabels[] = {"1", "2", "3", ">3"};
  for (int k = 0; k < 4; ++k) {
    out += std::string("wrong_tokens_") + kLabels[k] + ": " +
           Percent(c.wrong_histogram[k], c.sentences) + "\n";
  }
  return out;
}

std::string FormatUnknownReport(const UnknownCounts& c) {
  std::string out;
  out += "U: " + std::to_string(c.unknown) + "\n";
  out += "PU: " + std::to_string(c.parsed) + "\n";
  out += "CD: " + std::to_string(c.correct) + "\n";
  out += "PU/U: " + Percent(c.parsed, c.unknown) + "\n";
  out += "CD/U: " + Percent(c.correct, c.unknown) + "\n";
  return out;
}

}  // namespace morphdis
