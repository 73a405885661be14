// Seeded generators of toy corpora for tests, benchmarks and demos.

#ifndef MORPHDIS_SYNTHETIC_H_
#define MORPHDIS_SYNTHETIC_H_

#include <cstdint>

#include "morphdis/corpus.h"
#include "morphdis/rule.h"

namespace morphdis {

struct PlantedGrammarOptions {
  size_t min_tokens = 5000;
  uint64_t seed = 1;
  // Share of noun slots filled by a noun/verb homograph.
  double homograph_rate = 0.4;
  // Share of fillers that are unambiguous adverbs, which gives
  // the learner weak competing contexts.
  double filler_noise = 0.01;
};

struct PlantedCorpus {
  Corpus corpus;  // ambiguous input
  Corpus gold;    // one parse per token
  // The regularity, written the way the choose learner states it under the
  // stage-1 projection and default key options: a homograph right after a
  // determiner is the noun.
  ConstraintRule planted;
};

// Sentences are runs of `F DET N F` phrases closed by `V .`, where F is a
// filler that stays adverb/conn ambiguous, N a noun or a noun/verb
// homograph and V an unambiguous verb.
PlantedCorpus PlantedDeterminerCorpus(const PlantedGrammarOptions& options);

struct RandomCorpusOptions {
  size_t sentences = 20;
  size_t min_length = 2;
  size_t max_length = 10;
  size_t max_parses = 4;
  uint64_t seed = 1;
};

// Tokens draw 1..max_parses distinct parses from a small fixed pool, so
// contexts recur and rules have something to fire on.
Corpus RandomCorpus(const RandomCorpusOptions& options);

}  // namespace morphdis

#endif  // MORPHDIS_SYNTHETIC_H_
