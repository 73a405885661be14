// Projection of parses onto per-category attribute subsets.
//
// Template files hold one `category: attr attr ...` line per category and a
// `closed: cat cat ...` line; closed categories also keep root and subcat.
// A kept nested stem is projected with its own category's line.

#ifndef MORPHDIS_PROJECTION_H_
#define MORPHDIS_PROJECTION_H_

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "morphdis/corpus.h"

namespace morphdis {

class ProjectionTemplate {
 public:
  static ProjectionTemplate Parse(std::string_view text);
  static ProjectionTemplate Load(const std::string& path);
  // Coarse template used for choose learning and context statistics.
  static const ProjectionTemplate& Stage1();
  // Finer template used for delete learning.
  static const ProjectionTemplate& Stage2();

  bool Covers(std::string_view category) const;
  // Throws FormatError for a category without a template line.
  FeatureStructure Project(const FeatureStructure& parse) const;

  const std::map<std::string, std::vector<std::string>, std::less<>>& keep() const {
    return keep_;
  }
  const std::set<std::string, std::less<>>& closed() const { return closed_; }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> keep_;
  std::set<std::string, std::less<>> closed_;
};

// Removes exact duplicates, keeping first occurrences. Returns how many were
// dropped.
size_t DedupeParses(std::vector<FeatureStructure>* parses);

// Projects every parse of every token and merges parses that became equal.
Corpus ProjectCorpus(const Corpus& corpus, const ProjectionTemplate& tpl);

}  // namespace morphdis

#endif  // MORPHDIS_PROJECTION_H_
