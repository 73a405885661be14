// Comparison of a disambiguated corpus against a gold standard.

#ifndef MORPHDIS_EVAL_H_
#define MORPHDIS_EVAL_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morphdis/corpus.h"
#include "morphdis/projection.h"

namespace morphdis {

struct EvalCounts {
  int64_t tokens = 0;                // tokens taking part in the comparison
  int64_t intended = 0;              // gold readings
  int64_t received_appropriate = 0;  // tokens keeping their gold reading
  int64_t all_received = 0;          // parses left on those tokens

  double recall() const;
  double precision() const;
  double ambiguity() const;
};

struct SentenceCounts {
  int64_t sentences = 0;
  int64_t unambiguous_correct = 0;  // UA/C
  int64_t ambiguous_correct = 0;    // A/C
  // Sentences with 1, 2, 3 and more than 3 tokens lacking the gold reading.
  std::array<int64_t, 4> wrong_histogram{};
};

struct UnknownCounts {
  int64_t unknown = 0;    // U: tokens the analyzer did not know
  int64_t parsed = 0;     // PU: of those, parsed by the guesser
  int64_t correct = 0;    // CD: of those, keeping the gold reading
};

struct EvalOptions {
  // Compare projections instead of full parses.
  const ProjectionTemplate* projection = nullptr;
  // Leave tokens flagged unknown out of recall and precision.
  bool ignore_unknown = true;
};

// Throws FormatError naming the first token where the corpora disagree.
void CheckAlignment(const Corpus& system, const Corpus& gold);

EvalCounts Evaluate(const Corpus& system, const Corpus& gold,
                    const EvalOptions& options = {});
SentenceCounts EvaluateSentences(const Corpus& system, const Corpus& gold,
                                 const EvalOptions& options = {});
UnknownCounts EvaluateUnknown(const Corpus& system, const Corpus& gold,
                              const EvalOptions& options = {});

// Two-decimal percentage, or "-" when the denominator is 0.
std::string Percent(int64_t num, int64_t den);
std::string Percent(double ratio);

struct StageRow {
  std::string label;
  double ambiguity = 0.0;
  std::optional<EvalCounts> counts;  // with a gold standard
};

// Aligned table: stage, recall, precision, ambiguity.
std::string FormatStageTable(const std::vector<StageRow>& rows);
// `key: value` lines for scripts; accuracy appears when recall and
// precision share a denominator.
std::string FormatEvalKeyValues(const EvalCounts& c);
std::string FormatSentenceReport(const SentenceCounts& c);
std::string FormatUnknownReport(const UnknownCounts& c);

}  // namespace morphdis

#endif  // MORPHDIS_EVAL_H_
