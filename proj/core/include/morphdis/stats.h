// Corpus-local pruning: context statistics over unambiguous neighbors and
// root-word preference statistics.

#ifndef MORPHDIS_STATS_H_
#define MORPHDIS_STATS_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "morphdis/corpus.h"
#include "morphdis/projection.h"
#include "morphdis/score_tables.h"

namespace morphdis {

struct ContextStatsConfig {
  // Weights of the (lc, rc), lc-only and rc-only scores when both
  // neighbors are unambiguous.
  double w_both = 0.5;
  double w_left = 0.25;
  double w_right = 0.25;
  // Discard fraction per pass.
  std::array<double, 3> fractions = {0.05, 0.10, 0.20};
};

// One pass: tables come from `projected`, which must be `corpus` projected
// with `tpl`. Parses scoring strictly below fraction * best are dropped
// immediately, so later tokens see the reduced neighbors. Returns the
// number of parses removed.
size_t ContextStatsPass(Corpus* corpus, Corpus* projected, const ScoreTables& tables,
                        const ProjectionTemplate& tpl, const ContextStatsConfig& cfg,
                        int pass);

// All three passes, rebuilding the tables from the current text before each.
size_t RunContextStats(Corpus* corpus, const ProjectionTemplate& tpl,
                       const ContextStatsConfig& cfg);

struct RootStatsEntry {
  int64_t count = 0;
  bool derived = false;  // counted through the stem of a derived form
  friend bool operator==(const RootStatsEntry&, const RootStatsEntry&) = default;
};

// Frequencies of (innermost root, top-level cat) among unambiguous tokens.
class RootStatsTable {
 public:
  static RootStatsTable Build(const Corpus& corpus);
  // Lines `root<TAB>cat<TAB>count`, with a fourth column `derived` when set.
  static RootStatsTable Parse(std::string_view text);
  static RootStatsTable Load(const std::string& path);
  std::string ToString() const;

  int64_t Frequency(const std::string& root, const std::string& cat) const;
  void Add(const std::string& root, const std::string& cat, int64_t n, bool derived);

  const std::map<std::pair<std::string, std::string>, RootStatsEntry>& entries() const {
    return entries_;
  }
  friend bool operator==(const RootStatsTable&, const RootStatsTable&) = default;

 private:
  std::map<std::pair<std::string, std::string>, RootStatsEntry> entries_;
};

// For ambiguous tokens whose parses carry different roots, drops parses with
// frequency strictly below ratio * the best frequency (when that is > 0).
// Returns the number of parses removed.
size_t RootStatsPrune(Corpus* corpus, const RootStatsTable& table, double ratio);

}  // namespace morphdis

#endif  // MORPHDIS_STATS_H_
