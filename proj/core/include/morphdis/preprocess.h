// Raw text to an ambiguous hierarchical corpus: tokenization, analyzer
// lookup, collocation packing, unknown-word guessing and conversion.

#ifndef MORPHDIS_PREPROCESS_H_
#define MORPHDIS_PREPROCESS_H_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/collocation.h"
#include "morphdis/corpus.h"
#include "morphdis/linear_parse.h"
#include "morphdis/morphology.h"

namespace morphdis {

// Stand-in for an external morphological analyzer: surface forms mapped to
// their linear parses. File lines are `surface<TAB>parse`, one parse per
// line, `#` starting a comment.
class Lexicon {
 public:
  static Lexicon Parse(std::string_view text);
  static Lexicon Load(const std::string& path);
  std::string ToString() const;

  void Add(const std::string& surface, const LinearParse& parse);
  // Exact surface first, then with the first letter lowercased (sentence
  // starts). Null when unknown.
  const std::vector<LinearParse>* Lookup(const std::string& surface) const;
  size_t size() const { return entries_.size(); }

 private:
  std::map<std::string, std::vector<LinearParse>> entries_;
};

struct PreprocessOptions {
  const Lexicon* lexicon = nullptr;  // everything unknown when null
  const CollocationDb* collocations = nullptr;  // Default() when null
  const SuffixInventory* inventory = nullptr;   // Default() when null
  bool pack_collocations = true;
  bool guess_unknown = true;
};

// Analyzer output for one raw token; unknown words come back with no parses
// and the unknown flag.
AnalyzedToken AnalyzeToken(const RawToken& token, const PreprocessOptions& options,
                           int64_t* analyzer_calls);

// Packs collocations and guesses unknown words in an analyzed sentence,
// then converts it to hierarchical form with duplicate parses removed.
Sentence FinishSentence(const AnalyzedSentence& analyzed,
                        const PreprocessOptions& options);

// The whole chain on UTF-8 or transliterated text.
Corpus Preprocess(std::string_view text, const PreprocessOptions& options);

struct CorpusStats {
  int64_t tokens = 0;
  int64_t parses = 0;
  int64_t analyzer_calls = 0;
  // Tokens with 0, 1, 2, 3, 4 and more than 4 parses.
  std::array<int64_t, 6> distribution{};

  double ambiguity() const;
};

CorpusStats ComputeCorpusStats(const Corpus& corpus);
// `key: value` lines with bucket percentages to two decimals.
std::string FormatCorpusStats(const CorpusStats& stats);

}  // namespace morphdis

#endif  // MORPHDIS_PREPROCESS_H_
