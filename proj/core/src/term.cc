#include "morphdis/term.h"

#include <cctype>

namespace morphdis {

namespace {

std::string WithPos(const std::string& message, SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " +
         message;
}

bool IsAtomChar(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (std::isalnum(u) || u >= 0x80) return true;
  switch (c) {
    case '_': case '@': case '#': case '$': case '&': case '*': case '+':
    case '-': case '/': case '<': case '>': case '=': case '?': case '^':
    case '~': case '!': case ';':
      return true;
    default:
      return false;
  }
}

}  // namespace

FormatError::FormatError(const std::string& message, SourcePos pos)
    : std::runtime_error(WithPos(message, pos)), pos_(pos), has_pos_(true) {}

FormatError::FormatError(const std::string& message)
    : std::runtime_error(message) {}

TermReader::TermReader(std::string_view text) : text_(text) {}

void TermReader::Advance() {
  if (i_ >= text_.size()) return;
  if (text_[i_] == '\n') {
    ++pos_.line;
    pos_.column = 1;
  } else {
    ++pos_.column;
  }
  ++i_;
}

void TermReader::Fail(const std::string& message, SourcePos pos) const {
  throw FormatError(message, pos);
}

void TermReader::SkipSpaceCollectComments() {
  bool line_empty = pos_.column == 1;
  while (i_ < text_.size()) {
    char c = Cur();
    if (c == '\n') {
      if (line_empty && last_end_line_ > 0 && pos_.line > last_end_line_) {
        pending_blank_ = true;
      }
      Advance();
      line_empty = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      Advance();
    } else if (c == '%') {
      Advance();
      size_t start = i_;
      while (i_ < text_.size() && Cur() != '\n') Advance();
      std::string body(text_.substr(start, i_ - start));
      while (!body.empty() && (body.back() == '\r' || body.back() == ' ')) {
        body.pop_back();
      }
      if (!body.empty() && body.front() == ' ') body.erase(0, 1);
      pending_comments_.push_back(body);
      line_empty = false;
    } else {
      break;
    }
  }
}

TermReader::Lexeme TermReader::Lex() {
  SkipSpaceCollectComments();
  Lexeme lx;
  lx.pos = pos_;
  if (i_ >= text_.size()) {
    lx.tok = Tok::kEof;
    return lx;
  }
  char c = Cur();
  switch (c) {
    case '[': Advance(); lx.tok = Tok::kOpen; return lx;
    case ']': Advance(); lx.tok = Tok::kClose; return lx;
    case ',': Advance(); lx.tok = Tok::kComma; return lx;
    case ':': Advance(); lx.tok = Tok::kColon; return lx;
    default: break;
  }
  if (c == '.') {
    char next = i_ + 1 < text_.size() ? text_[i_ + 1] : '\0';
    if (next == '\0' || next == ' ' || next == '\n' || next == '\t' ||
        next == '\r' || next == '%') {
      Advance();
      lx.tok = Tok::kEnd;
      return lx;
    }
    Fail("unexpected '.' inside a term", pos_);
  }
  if (c == '\'') {
    Advance();
    lx.tok = Tok::kAtom;
    lx.quoted = true;
    for (;;) {
      if (i_ >= text_.size()) Fail("unterminated quoted atom", lx.pos);
      char q = Cur();
      if (q == '\\') {
        Advance();
        char e = Cur();
        if (i_ >= text_.size()) Fail("unterminated escape", lx.pos);
        switch (e) {
          case 'n': lx.text.push_back('\n'); break;
          case 't': lx.text.push_back('\t'); break;
          default: lx.text.push_back(e); break;
        }
        Advance();
      } else if (q == '\'') {
        Advance();
        if (Cur() == '\'') {
          lx.text.push_back('\'');
          Advance();
        } else {
          break;
        }
      } else {
        lx.text.push_back(q);
        Advance();
      }
    }
    return lx;
  }
  if (IsAtomChar(c)) {
    lx.tok = Tok::kAtom;
    while (i_ < text_.size() && IsAtomChar(Cur())) {
      lx.text.push_back(Cur());
      Advance();
    }
    return lx;
  }
  Fail(std::string("unexpected character '") + c + "'", pos_);
}

const TermReader::Lexeme& TermReader::Peek() {
  if (!has_peek_) {
    peek_ = Lex();
    has_peek_ = true;
  }
  return peek_;
}

TermReader::Lexeme TermReader::Take() {
  Peek();
  has_peek_ = false;
  return peek_;
}

Term TermReader::ParseTerm() {
  Lexeme lx = Take();
  Term t;
  t.pos = lx.pos;
  if (lx.tok == Tok::kOpen) {
    t.kind = Term::Kind::kList;
    if (Peek().tok == Tok::kClose) {
      Take();
      return t;
    }
    for (;;) {
      t.items.push_back(ParseTerm());
      Lexeme sep = Take();
      if (sep.tok == Tok::kClose) break;
      if (sep.tok != Tok::kComma) Fail("expected ',' or ']'", sep.pos);
    }
    return t;
  }
  if (lx.tok != Tok::kAtom) {
    Fail(lx.tok == Tok::kEof ? "unexpected end of input"
                             : "expected an atom or '['",
         lx.pos);
  }
  t.text = std::move(lx.text);
  t.quoted = lx.quoted;
  if (Peek().tok == Tok::kColon) {
    Take();
    Term value = ParseTerm();
    t.kind = Term::Kind::kPair;
    t.items.push_back(std::move(value));
  }
  return t;
}

bool TermReader::Next(Clause* clause) {
  *clause = Clause();
  const Lexeme& first = Peek();
  if (first.tok == Tok::kEof) {
    tail_comments_ = std::move(pending_comments_);
    pending_comments_.clear();
    return false;
  }
  clause->leading_comments = std::move(pending_comments_);
  pending_comments_.clear();
  clause->blank_line_before = pending_blank_;
  pending_blank_ = false;
  clause->term = ParseTerm();
  Lexeme end = Take();
  if (end.tok != Tok::kEnd) Fail("expected '.' after clause", end.pos);
  last_end_line_ = end.pos.line;
  // Same-line comment after the terminator.
  while (i_ < text_.size() && (Cur() == ' ' || Cur() == '\t')) Advance();
  if (Cur() == '%') {
    Advance();
    size_t start = i_;
    while (i_ < text_.size() && Cur() != '\n') Advance();
    std::string body(text_.substr(start, i_ - start));
    if (!body.empty() && body.front() == ' ') body.erase(0, 1);
    clause->trailing_comment = body;
  }
  return true;
}

Term TermReader::ParseSingle(std::string_view text) {
  TermReader reader(text);
  Term t = reader.ParseTerm();
  Lexeme rest = reader.Take();
  if (rest.tok == Tok::kEnd) rest = reader.Take();
  if (rest.tok != Tok::kEof) reader.Fail("trailing input after term", rest.pos);
  return t;
}

bool IsPlainAtom(std::string_view atom) {
  if (atom == "@" || atom == "#") return true;
  if (atom.empty() || !(atom[0] >= 'a' && atom[0] <= 'z')) return false;
  for (char c : atom) {
    unsigned char u = static_cast<unsigned char>(c);
    if (!(std::isalnum(u) || c == '_')) return false;
  }
  return true;
}

std::string QuoteAtom(std::string_view atom) {
  if (IsPlainAtom(atom)) return std::string(atom);
  std::string out = "'";
  for (char c : atom) {
    switch (c) {
      case '\'': out += "\\'"; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
  out.push_back('\'');
  return out;
}

std::string TermToString(const Term& term) {
  switch (term.kind) {
    case Term::Kind::kAtom:
      return QuoteAtom(term.text);
    case Term::Kind::kPair:
      return QuoteAtom(term.text) + ":" + TermToString(term.value());
    case Term::Kind::kList: {
      std::string out = "[";
      for (size_t i = 0; i < term.items.size(); ++i) {
        if (i > 0) out.push_back(',');
        out += TermToString(term.items[i]);
      }
      out.push_back(']');
      return out;
    }
  }
  return {};
}

}  // namespace morphdis
