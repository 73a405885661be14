#include "morphdis/preprocess.h"

#include <cstdio>
#include <sstream>

#include "morphdis/corpus_io.h"
#include "morphdis/projection.h"
#include "morphdis/term.h"
#include "morphdis/tokenizer.h"

namespace morphdis {

Lexicon Lexicon::Parse(std::string_view text) {
  Lexicon lex;
  std::stringstream ss{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw FormatError("expected surface<TAB>parse", {line_no, 1});
    }
    try {
      lex.Add(line.substr(0, tab), ParseLinear(std::string_view(line).substr(tab + 1)));
    } catch (const FormatError& e) {
      throw FormatError(e.what(), {line_no, static_cast<int>(tab) + 2});
    }
  }
  return lex;
}

Lexicon Lexicon::Load(const std::string& path) { return Parse(ReadTextFile(path)); }

std::string Lexicon::ToString() const {
  std::string out;
  for (const auto& [surface, parses] : entries_) {
    for (const LinearParse& p : parses) out += surface + "\t" + p.ToString() + "\n";
  }
  return out;
}

void Lexicon::Add(const std::string& surface, const LinearParse& parse) {
  std::vector<LinearParse>& v = entries_[surface];
  for (const LinearParse& p : v) {
    if (p == parse) return;
  }
  v.push_back(parse);
}

const std::vector<LinearParse>* Lexicon::Lookup(const std::string& surface) const {
  auto it = entries_.find(surface);
  if (it != entries_.end()) return &it->second;
  if (!surface.empty() && surface[0] >= 'A' && surface[0] <= 'Z') {
    std::string lower = surface;
    lower[0] = static_cast<char>(lower[0] - 'A' + 'a');
    it = entries_.find(lower);
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

namespace {

const SuffixInventory& InventoryOf(const PreprocessOptions& o) {
  return o.inventory != nullptr ? *o.inventory : SuffixInventory::Default();
}

LinearParse Punctuation(const std::string& text) {
  LinearParse p;
  p.items.push_back({"cat", "punct", ""});
  p.items.push_back({"root", text, ""});
  return p;
}

}  // namespace

AnalyzedToken AnalyzeToken(const RawToken& token, const PreprocessOptions& options,
                           int64_t* analyzer_calls) {
  AnalyzedToken out;
  out.surface = token.text;
  switch (token.kind) {
    case TokenKind::kPunctuation:
      out.parses.push_back(Punctuation(token.text));
      return out;
    case TokenKind::kNumeric: {
      bool unknown = false;
      out.parses = AnalyzeNumeric(token.text, InventoryOf(options), &unknown);
      if (unknown) out.flags |= kFlagUnknown;
      return out;
    }
    case TokenKind::kWord:
    case TokenKind::kAbbreviation:
      break;
  }
  if (analyzer_calls != nullptr) ++*analyzer_calls;
  const std::vector<LinearParse>* found =
      options.lexicon != nullptr ? options.lexicon->Lookup(token.text) : nullptr;
  if (found != nullptr) {
    out.parses = *found;
  } else {
    out.flags |= kFlagUnknown;
  }
  return out;
}

Sentence FinishSentence(const AnalyzedSentence& analyzed,
                        const PreprocessOptions& options) {
  const SuffixInventory& inv = InventoryOf(options);
  AnalyzedSentence packed = analyzed;
  if (options.pack_collocations) {
    const CollocationDb& db = options.collocations != nullptr
                                  ? *options.collocations
                                  : CollocationDb::Default();
    packed = RecognizeCollocations(analyzed, db, inv);
  }
  std::vector<AmbiguousToken> body;
  body.reserve(packed.size());
  for (AnalyzedToken& t : packed) {
    if (options.guess_unknown && t.parses.empty()) {
      t.parses = GuessUnknown(t.surface, inv);
      t.flags |= kFlagUnknown | kFlagGuessed;
    }
    AmbiguousToken tok;
    tok.surface = t.surface;
    tok.flags = t.flags;
    for (const LinearParse& p : t.parses) tok.parses.push_back(ToHierarchical(p));
    DedupeParses(&tok.parses);
    body.push_back(std::move(tok));
  }
  return Sentence::FromBody(std::move(body));
}

Corpus Preprocess(std::string_view text, const PreprocessOptions& options) {
  Corpus corpus;
  std::vector<RawToken> tokens = Tokenize(Transliterate(text));
  for (const std::vector<RawToken>& raw : SplitSentences(tokens)) {
    if (raw.empty()) continue;
    AnalyzedSentence analyzed;
    analyzed.reserve(raw.size());
    for (const RawToken& t : raw) {
      analyzed.push_back(AnalyzeToken(t, options, &corpus.metadata.analyzer_calls));
    }
    corpus.sentences.push_back(FinishSentence(analyzed, options));
  }
  return corpus;
}

double CorpusStats::ambiguity() const {
  return tokens == 0 ? 0.0 : static_cast<double>(parses) / static_cast<double>(tokens);
}

CorpusStats ComputeCorpusStats(const Corpus& corpus) {
  CorpusStats s;
  s.analyzer_calls = corpus.metadata.analyzer_calls;
  for (const Sentence& sent : corpus.sentences) {
    for (size_t i = sent.body_begin(); i < sent.body_end(); ++i) {
      size_t n = sent.tokens[i].parses.size();
      ++s.tokens;
      s.parses += static_cast<int64_t>(n);
      ++s.distribution[n > 4 ? 5 : n];
    }
  }
  return s;
}

std::string FormatCorpusStats(const CorpusStats& s) {
  static const char* kBuckets[] = {"0", "1", "2", "3", "4", ">4"};
  std::string out;
  out += "tokens: " + std::to_string(s.tokens) + "\n";
  out += "parses: " + std::to_string(s.parses) + "\n";
  out += "analyzer_calls: " + std::to_string(s.analyzer_calls) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", s.ambiguity());
  out += std::string("ambiguity: ") + buf + "\n";
  for (int b = 0; b < 6; ++b) {
    std::string pct = "-";
    if (s.tokens > 0) {
      std::snprintf(buf, sizeof(buf), "%.2f%%",
                    100.0 * static_cast<double>(s.distribution[b]) /
                        static_cast<double>(s.tokens));
      pct = buf;
    }
    out += std::string("parses_") + kBuckets[b] + ": " +
           std::to_string(s.distribution[b]) + " (" + pct + ")\n";
  }
  return out;
}

}  // namespace morphdis
