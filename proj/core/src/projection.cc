#include "morphdis/projection.h"

#include <algorithm>
#include <sstream>

#include "morphdis/corpus_io.h"
#include "morphdis/embedded_data.h"
#include "morphdis/term.h"

namespace morphdis {

namespace {

std::vector<std::string> Words(std::string_view s) {
  std::vector<std::string> out;
  std::stringstream ss{std::string(s)};
  std::string w;
  while (ss >> w) out.push_back(w);
  return out;
}

}  // namespace

ProjectionTemplate ProjectionTemplate::Parse(std::string_view text) {
  ProjectionTemplate t;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (Words(line).empty()) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw FormatError("expected 'category: attributes'", {line_no, 1});
    }
    std::vector<std::string> head = Words(std::string_view(line).substr(0, colon));
    if (head.size() != 1) throw FormatError("expected one category name", {line_no, 1});
    std::vector<std::string> attrs = Words(std::string_view(line).substr(colon + 1));
    if (head[0] == "closed") {
      t.closed_.insert(attrs.begin(), attrs.end());
      continue;
    }
    if (t.keep_.count(head[0]) > 0) {
      throw FormatError("category '" + head[0] + "' listed twice", {line_no, 1});
    }
    if (std::find(attrs.begin(), attrs.end(), "cat") == attrs.end()) {
      attrs.insert(attrs.begin(), "cat");
    }
    t.keep_[head[0]] = std::move(attrs);
  }
  return t;
}

ProjectionTemplate ProjectionTemplate::Load(const std::string& path) {
  return Parse(ReadTextFile(path));
}

const ProjectionTemplate& ProjectionTemplate::Stage1() {
  static const ProjectionTemplate kT = Parse(DefaultDataFile("projection_stage1.tpl"));
  return kT;
}

const ProjectionTemplate& ProjectionTemplate::Stage2() {
  static const ProjectionTemplate kT = Parse(DefaultDataFile("projection_stage2.tpl"));
  return kT;
}

bool ProjectionTemplate::Covers(std::string_view category) const {
  return keep_.find(category) != keep_.end();
}

FeatureStructure ProjectionTemplate::Project(const FeatureStructure& parse) const {
  const std::string* cat = parse.FindAtom("cat");
  if (cat == nullptr) throw FormatError("cannot project a parse without cat");
  auto it = keep_.find(*cat);
  if (it == keep_.end()) {
    throw FormatError("no projection template for category '" + *cat + "'");
  }
  bool closed = closed_.count(*cat) > 0;
  FeatureStructure out;
  for (const FeatureStructure::Feature& f : parse.features()) {
    bool kept = std::find(it->second.begin(), it->second.end(), f.name) !=
                it->second.end();
    if (!kept && closed && (f.name == "root" || f.name == "subcat")) kept = true;
    if (!kept) continue;
    if (f.value.is_nested()) {
      out.Set(f.name, Project(f.value.nested()));
    } else {
      out.Set(f.name, f.value);
    }
  }
  return out;
}

size_t DedupeParses(std::vector<FeatureStructure>* parses) {
  std::vector<FeatureStructure> unique;
  unique.reserve(parses->size());
  for (FeatureStructure& p : *parses) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(std::move(p));
    }
  }
  size_t dropped = parses->size() - unique.size();
  *parses = std::move(unique);
  return dropped;
}

Corpus ProjectCorpus(const Corpus& corpus, const ProjectionTemplate& tpl) {
  Corpus out = corpus;
  for (Sentence& s : out.sentences) {
    for (AmbiguousToken& tok : s.tokens) {
      for (FeatureStructure& p : tok.parses) p = tpl.Project(p);
      DedupeParses(&tok.parses);
    }
  }
  return out;
}

}  // namespace morphdis
