#include "morphdis/stats.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "morphdis/constraint.h"
#include "morphdis/corpus_io.h"
#include "morphdis/term.h"

namespace morphdis {

namespace {

std::optional<ContextKey> FirstContext(const Sentence& s, size_t i,
                                       const KeyOptions& opts, Shape shape) {
  std::vector<ContextKey> cs = ContextsAt(s, i, opts, {shape});
  if (cs.empty()) return std::nullopt;
  return cs.front();
}

double Normalized(const ScoreTables& t, const ContextKey& c, const std::string& key) {
  ParseStats p{t.InContext(c.Key(), key), t.Count(ShapeSide(c.shape), key), key};
  return NormalizedScore(p);
}

}  // namespace

size_t ContextStatsPass(Corpus* corpus, Corpus* projected, const ScoreTables& tables,
                        const ProjectionTemplate& tpl, const ContextStatsConfig& cfg,
                        int pass) {
  const double fraction = cfg.fractions.at(pass);
  const KeyOptions& opts = tables.options();
  size_t removed = 0;
  for (size_t si = 0; si < corpus->sentences.size(); ++si) {
    Sentence& full = corpus->sentences[si];
    Sentence& proj = projected->sentences[si];
    for (size_t i = full.body_begin(); i < full.body_end(); ++i) {
      if (!proj.tokens[i].ambiguous()) continue;
      std::optional<ContextKey> both = FirstContext(proj, i, opts, Shape::kS3);
      std::optional<ContextKey> left = FirstContext(proj, i, opts, Shape::kS4L);
      std::optional<ContextKey> right = FirstContext(proj, i, opts, Shape::kS4R);
      if (!left && !right) continue;
      AmbiguousToken& tok = full.tokens[i];
      std::vector<double> scores;
      double best = 0.0;
      for (const FeatureStructure& p : tok.parses) {
        std::string key = tpl.Project(p).ToString();
        double s;
        if (left && right) {
          s = cfg.w_both * Normalized(tables, *both, key) +
              cfg.w_left * Normalized(tables, *left, key) +
              cfg.w_right * Normalized(tables, *right, key);
        } else {
          s = Normalized(tables, left ? *left : *right, key);
        }
        scores.push_back(s);
        best = std::max(best, s);
      }
      if (best <= 0.0) continue;
      std::vector<FeatureStructure> keep;
      for (size_t k = 0; k < tok.parses.size(); ++k) {
        if (scores[k] >= fraction * best) keep.push_back(tok.parses[k]);
      }
      if (keep.size() == tok.parses.size()) continue;
      removed += tok.parses.size() - keep.size();
      tok.parses = std::move(keep);
      AmbiguousToken& pt = proj.tokens[i];
      pt.parses.clear();
      for (const FeatureStructure& p : tok.parses) pt.parses.push_back(tpl.Project(p));
      DedupeParses(&pt.parses);
    }
  }
  return removed;
}

size_t RunContextStats(Corpus* corpus, const ProjectionTemplate& tpl,
                       const ContextStatsConfig& cfg) {
  size_t removed = 0;
  for (int pass = 0; pass < static_cast<int>(cfg.fractions.size()); ++pass) {
    Corpus projected = ProjectCorpus(*corpus, tpl);
    ScoreTables tables = ScoreTables::Build(projected, KeyOptions::Exact());
    removed += ContextStatsPass(corpus, &projected, tables, tpl, cfg, pass);
  }
  return removed;
}

RootStatsTable RootStatsTable::Build(const Corpus& corpus) {
  RootStatsTable t;
  for (const Sentence& s : corpus.sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
      const AmbiguousToken& tok = s.tokens[i];
      if (!tok.unambiguous()) continue;
      const FeatureStructure& p = tok.parses[0];
      const std::string* root = InnermostRoot(p);
      const std::string* cat = p.FindAtom("cat");
      if (root == nullptr || cat == nullptr) continue;
      t.Add(*root, *cat, 1, p.Has("stem"));
    }
  }
  return t;
}

void RootStatsTable::Add(const std::string& root, const std::string& cat, int64_t n,
                         bool derived) {
  RootStatsEntry& e = entries_[{root, cat}];
  e.count += n;
  e.derived = e.derived || derived;
}

int64_t RootStatsTable::Frequency(const std::string& root, const std::string& cat) const {
  auto it = entries_.find({root, cat});
  return it == entries_.end() ? 0 : it->second.count;
}

RootStatsTable RootStatsTable::Parse(std::string_view text) {
  RootStatsTable t;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string col;
    while (std::getline(ls, col, '\t')) cols.push_back(col);
    if (cols.size() < 3 || cols.size() > 4 || (cols.size() == 4 && cols[3] != "derived")) {
      throw FormatError("expected root, cat, count and optional 'derived'", {line_no, 1});
    }
    int64_t n = 0;
    try {
      size_t used = 0;
      n = std::stoll(cols[2], &used);
      if (used != cols[2].size() || n < 1) throw std::invalid_argument("count");
    } catch (const std::exception&) {
      throw FormatError("count must be a positive integer", {line_no, 1});
    }
    t.Add(cols[0], cols[1], n, cols.size() == 4);
  }
  return t;
}

RootStatsTable RootStatsTable::Load(const std::string& path) {
  return Parse(ReadTextFile(path));
}

std::string RootStatsTable::ToString() const {
  std::string out;
  for (const auto& [key, e] : entries_) {
    out += key.first + "\t" + key.second + "\t" + std::to_string(e.count);
    if (e.derived) out += "\tderived";
    out += "\n";
  }
  return out;
}

size_t RootStatsPrune(Corpus* corpus, const RootStatsTable& table, double ratio) {
  size_t removed = 0;
  for (Sentence& s : corpus->sentences) {
    for (size_t i = s.body_begin(); i < s.body_end(); ++i) {
      AmbiguousToken& tok = s.tokens[i];
      if (!tok.ambiguous()) continue;
      std::vector<int64_t> freq;
      std::set<std::string> roots;
      bool complete = true;
      for (const FeatureStructure& p : tok.parses) {
        const std::string* root = InnermostRoot(p);
        const std::string* cat = p.FindAtom("cat");
        if (root == nullptr || cat == nullptr) {
          complete = false;
          break;
        }
        roots.insert(*root);
        freq.push_back(table.Frequency(*root, *cat));
      }
      if (!complete || roots.size() < 2) continue;
      int64_t best = *std::max_element(freq.begin(), freq.end());
      if (best <= 0) continue;
      std::vector<FeatureStructure> keep;
      for (size_t k = 0; k < tok.parses.size(); ++k) {
        if (static_cast<double>(freq[k]) >= ratio * static_cast<double>(best)) {
          keep.push_back(tok.parses[k]);
        }
      }
      removed += tok.parses.size() - keep.size();
      tok.parses = std::move(keep);
    }
  }
  return removed;
}

}  // namespace morphdis
