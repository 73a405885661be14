#include "morphdis/synthetic.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace morphdis {

namespace {

struct Draw {
  explicit Draw(uint64_t seed) : rng(seed) {}
  size_t Index(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }
  bool Chance(double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }
  std::mt19937_64 rng;
};

FeatureStructure Noun(const std::string& root, const char* case_) {
  return {{"cat", "noun"}, {"root", root}, {"agr", "3SG"}, {"poss", "NONE"}, {"case", case_}};
}

AmbiguousToken Token(std::string surface, std::vector<FeatureStructure> parses) {
  AmbiguousToken t;
  t.surface = std::move(surface);
  t.parses = std::move(parses);
  return t;
}

AmbiguousToken Gold(const AmbiguousToken& t, size_t keep) {
  return Token(t.surface, {t.parses[keep]});
}

}  // namespace

PlantedCorpus PlantedDeterminerCorpus(const PlantedGrammarOptions& o) {
  static const char* kDets[] = {"bir", "her", "bu"};
  static const char* kNouns[] = {"ev", "kitap", "masa", "kalem", "okul", "yol", "su", "kapI"};
  static const char* kCases[] = {"nom", "acc", "dat", "loc"};
  static const char* kCaseEndings[] = {"", "+i", "+e", "+de"};
  static const char* kHomographs[] = {"yaz", "at", "gOz", "el"};
  static const char* kFillers[] = {"ama", "ancak", "yine"};
  static const char* kVerbs[] = {"geldi", "gitti", "baktI", "durdu"};

  Draw d(o.seed);
  PlantedCorpus out;
  size_t tokens = 0;
  auto filler = [&](std::vector<AmbiguousToken>* in, std::vector<AmbiguousToken>* gold) {
    if (d.Chance(o.filler_noise)) {
      AmbiguousToken t = Token("Cok", {{{"cat", "adverb"}, {"root", "Cok"}}});
      in->push_back(t);
      gold->push_back(t);
      return;
    }
    std::string f = kFillers[d.Index(3)];
    AmbiguousToken t = Token(f, {{{"cat", "adverb"}, {"root", f}}, {{"cat", "conn"}, {"root", f}}});
    gold->push_back(Gold(t, d.Index(2)));
    in->push_back(std::move(t));
  };
  while (tokens < o.min_tokens) {
    std::vector<AmbiguousToken> in, gold;
    size_t phrases = 1 + d.Index(3);
    for (size_t p = 0; p < phrases; ++p) {
      filler(&in, &gold);
      std::string det = kDets[d.Index(3)];
      AmbiguousToken dt = Token(det, {{{"cat", "adj"}, {"root", det}, {"type", "determiner"}}});
      in.push_back(dt);
      gold.push_back(dt);
      if (d.Chance(o.homograph_rate)) {
        std::string h = kHomographs[d.Index(4)];
        AmbiguousToken ht = Token(h, {Noun(h, "nom"),
                                      {{"cat", "verb"}, {"root", h}, {"sense", "pos"},
                                       {"tam1", "imp"}, {"agr", "2SG"}}});
        gold.push_back(Gold(ht, 0));
        in.push_back(std::move(ht));
      } else {
        size_t c = d.Index(4);
        std::string n = kNouns[d.Index(8)];
        AmbiguousToken nt = Token(n + kCaseEndings[c], {Noun(n, kCases[c])});
        in.push_back(nt);
        gold.push_back(nt);
      }
      filler(&in, &gold);
    }
    std::string v = kVerbs[d.Index(4)];
    AmbiguousToken vt = Token(v, {{{"cat", "verb"}, {"root", v.substr(0, v.size() - 2)},
                                   {"sense", "pos"}, {"tam1", "past"}, {"agr", "3SG"}}});
    AmbiguousToken dot = Token(".", {{{"cat", "punct"}, {"root", "."}}});
    in.push_back(vt);
    gold.push_back(vt);
    in.push_back(dot);
    gold.push_back(dot);
    tokens += in.size();
    out.corpus.sentences.push_back(Sentence::FromBody(std::move(in)));
    out.gold.sentences.push_back(Sentence::FromBody(std::move(gold)));
  }
  out.planted = ParseRule(
      "[llc:[],lc:[[cat:adj,type:determiner]],"
      "choose:[cat:noun,agr:'3SG',poss:'NONE'],rc:[],rrc:[]]");
  return out;
}

Corpus RandomCorpus(const RandomCorpusOptions& o) {
  static const std::vector<FeatureStructure> kPool = {
      Noun("ev", "nom"),
      Noun("ev", "acc"),
      Noun("ev", "dat"),
      {{"cat", "noun"}, {"root", "el"}, {"agr", "3SG"}, {"poss", "3SG"}, {"case", "nom"}},
      {{"cat", "verb"}, {"root", "gel"}, {"sense", "pos"}, {"tam1", "past"}, {"agr", "3SG"}},
      {{"cat", "verb"}, {"root", "yaz"}, {"sense", "pos"}, {"tam1", "imp"}, {"agr", "2SG"}},
      {{"cat", "adj"}, {"root", "bir"}, {"type", "determiner"}},
      {{"cat", "adj"}, {"root", "gUzel"}},
      {{"cat", "adverb"}, {"root", "Cok"}},
      {{"cat", "conn"}, {"root", "ve"}},
      {{"cat", "postp"}, {"root", "gibi"}, {"subcat", "nom"}},
      {{"cat", "pronoun"}, {"root", "o"}, {"agr", "3SG"}, {"poss", "NONE"}, {"case", "nom"}},
      {{"cat", "adj"}, {"stem", FeatureStructure{{"cat", "noun"}, {"root", "tuz"}}}, {"suffix", "li"}},
  };
  static const char* kSurfaces[] = {"a", "b", "c", "d", "e", "f"};
  Draw d(o.seed);
  Corpus c;
  for (size_t s = 0; s < o.sentences; ++s) {
    size_t len = o.min_length + d.Index(o.max_length - o.min_length + 1);
    std::vector<AmbiguousToken> body;
    for (size_t t = 0; t < len; ++t) {
      size_t n = 1 + d.Index(std::min(o.max_parses, kPool.size()));
      std::vector<size_t> idx(kPool.size());
      for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
      std::shuffle(idx.begin(), idx.end(), d.rng);
      idx.resize(n);
      std::sort(idx.begin(), idx.end());
      AmbiguousToken tok;
      tok.surface = kSurfaces[d.Index(6)];
      for (size_t k : idx) tok.parses.push_back(kPool[k]);
      body.push_back(std::move(tok));
    }
    c.sentences.push_back(Sentence::FromBody(std::move(body)));
  }
  return c;
}

}  // namespace morphdis
