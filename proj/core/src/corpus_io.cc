#include "morphdis/corpus_io.h"

#include <fstream>
#include <sstream>

#include "morphdis/constraint.h"

namespace morphdis {

namespace {

constexpr std::string_view kAnalyzerCallsKey = "analyzer-calls:";

struct FlagName {
  TokenFlag flag;
  std::string_view name;
};
constexpr FlagName kFlagNames[] = {
    {kFlagUnknown, "unknown"},
    {kFlagGuessed, "guessed"},
    {kFlagCollocation, "collocation"},
};

void Warn(std::vector<std::string>* warnings, SourcePos pos,
          const std::string& message) {
  if (warnings == nullptr) return;
  warnings->push_back(std::to_string(pos.line) + ":" +
                      std::to_string(pos.column) + ": " + message);
}

AmbiguousToken TokenFromTerm(const Term& term,
                             std::vector<std::string>* warnings) {
  if (!term.is_list() || term.items.size() < 2 || term.items.size() > 3) {
    throw FormatError("token must be [surface, [parses]]", term.pos);
  }
  const Term& surface = term.items[0];
  if (!surface.is_atom()) {
    throw FormatError("token surface must be an atom", surface.pos);
  }
  AmbiguousToken token;
  token.surface = surface.text;
  const Term& parses = term.items[1];
  if (!parses.is_list()) {
    throw FormatError("parse list must be bracketed", parses.pos);
  }
  for (const Term& p : parses.items) {
    token.parses.push_back(FeatureStructureFromTerm(p, warnings));
  }
  if (term.items.size() == 3) {
    const Term& flags = term.items[2];
    if (!flags.is_list()) {
      throw FormatError("flag list must be bracketed", flags.pos);
    }
    for (const Term& f : flags.items) {
      bool known = false;
      for (const FlagName& fn : kFlagNames) {
        if (f.is_atom() && f.text == fn.name) {
          token.flags |= fn.flag;
          known = true;
        }
      }
      if (!known) throw FormatError("unknown token flag", f.pos);
    }
  }
  return token;
}

void CheckMarker(const AmbiguousToken& t, std::string_view surface,
                 std::string_view cat, SourcePos pos) {
  if (t.surface != surface || t.parses.size() != 1 ||
      t.parses[0] != FeatureStructure{{"cat", std::string(cat)}}) {
    throw FormatError("sentence must be delimited by [" +
                          std::string(surface) + ",[[cat:" + std::string(cat) +
                          "]]]",
                      pos);
  }
}

}  // namespace

FeatureStructure FeatureStructureFromTerm(const Term& term,
                                          std::vector<std::string>* warnings) {
  if (!term.is_list()) {
    throw FormatError("feature structure must be a bracketed list", term.pos);
  }
  FeatureStructure fs;
  for (const Term& item : term.items) {
    if (!item.is_pair()) {
      throw FormatError("expected attribute:value", item.pos);
    }
    if (fs.Has(item.text)) {
      throw FormatError("duplicate attribute '" + item.text + "'", item.pos);
    }
    if (!IsKnownAttribute(item.text)) {
      Warn(warnings, item.pos, "unknown attribute '" + item.text + "'");
    }
    const Term& v = item.value();
    if (v.is_list()) {
      if (item.text != "stem") {
        throw FormatError("only stem may hold a nested structure", v.pos);
      }
      fs.Set(item.text, FeatureStructureFromTerm(v, warnings));
    } else if (v.is_atom()) {
      fs.Set(item.text, v.text);
    } else {
      throw FormatError("attribute value must be an atom or a list", v.pos);
    }
  }
  return fs;
}

Corpus ParseCorpusText(std::string_view text,
                       std::vector<std::string>* warnings) {
  Corpus corpus;
  TermReader reader(text);
  Clause clause;
  bool first = true;
  while (reader.Next(&clause)) {
    if (first) {
      for (const std::string& c : clause.leading_comments) {
        if (c.rfind(kAnalyzerCallsKey, 0) == 0) {
          corpus.metadata.analyzer_calls =
              std::stoll(c.substr(kAnalyzerCallsKey.size()));
        } else {
          corpus.metadata.header_comments.push_back(c);
        }
      }
      first = false;
    } else if (!clause.leading_comments.empty()) {
      Warn(warnings, clause.term.pos, "comment between sentences dropped");
    }
    const Term& t = clause.term;
    if (!t.is_list() || t.items.size() < 2) {
      throw FormatError("sentence must be a list of at least two markers",
                        t.pos);
    }
    Sentence s;
    for (const Term& tok : t.items) {
      s.tokens.push_back(TokenFromTerm(tok, warnings));
    }
    CheckMarker(s.tokens.front(), kBeginSurface, kBeginCat, t.items.front().pos);
    CheckMarker(s.tokens.back(), kEndSurface, kEndCat, t.items.back().pos);
    for (size_t i = 1; i + 1 < s.tokens.size(); ++i) {
      if (IsMarker(s.tokens[i])) {
        throw FormatError("sentence marker inside sentence body",
                          t.items[i].pos);
      }
      if (s.tokens[i].parses.empty() &&
          !s.tokens[i].has_flag(kFlagUnknown)) {
        Warn(warnings, t.items[i].pos,
             "token '" + s.tokens[i].surface + "' has no parses");
      }
    }
    corpus.sentences.push_back(std::move(s));
  }
  return corpus;
}

std::string SerializeSentence(const Sentence& sentence) {
  std::string out;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    const AmbiguousToken& t = sentence.tokens[i];
    out += i == 0 ? "[[" : " [";
    out += QuoteAtom(t.surface);
    out += ",\n  [";
    for (size_t p = 0; p < t.parses.size(); ++p) {
      if (p > 0) out += ",\n   ";
      out += t.parses[p].ToString();
    }
    out += "]";
    if (t.flags != kFlagNone) {
      out += ",\n  [";
      bool sep = false;
      for (const FlagName& fn : kFlagNames) {
        if (t.has_flag(fn.flag)) {
          if (sep) out += ",";
          out += fn.name;
          sep = true;
        }
      }
      out += "]";
    }
    out += "]";
    out += i + 1 == sentence.tokens.size() ? "].\n" : ",\n";
  }
  return out;
}

std::string SerializeCorpus(const Corpus& corpus) {
  std::string out;
  for (const std::string& c : corpus.metadata.header_comments) {
    out += c.empty() ? "%\n" : "% " + c + "\n";
  }
  if (corpus.metadata.analyzer_calls > 0) {
    out += "% " + std::string(kAnalyzerCallsKey) + " " +
           std::to_string(corpus.metadata.analyzer_calls) + "\n";
  }
  if (!out.empty()) out += "\n";
  for (size_t i = 0; i < corpus.sentences.size(); ++i) {
    if (i > 0) out += "\n";
    out += SerializeSentence(corpus.sentences[i]);
  }
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

Corpus ReadCorpusFile(const std::string& path,
                      std::vector<std::string>* warnings) {
  std::string text = ReadTextFile(path);
  try {
    return ParseCorpusText(text, warnings);
  } catch (const FormatError& e) {
    throw FormatError(path + ":" + e.what());
  }
}

void WriteCorpusFile(const std::string& path, const Corpus& corpus) {
  WriteTextFile(path, SerializeCorpus(corpus));
}

}  // namespace morphdis
