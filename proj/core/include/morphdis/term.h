// Reader for the bracketed clause syntax shared by corpus, rule and
// collocation files: atoms, lists, `key:value` pairs, `.` terminators and
// `%` line comments.

#ifndef MORPHDIS_TERM_H_
#define MORPHDIS_TERM_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace morphdis {

struct SourcePos {
  int line = 1;
  int column = 1;
};

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, SourcePos pos);
  explicit FormatError(const std::string& message);

  SourcePos pos() const { return pos_; }
  bool has_pos() const { return has_pos_; }

 private:
  SourcePos pos_;
  bool has_pos_ = false;
};

struct Term {
  enum class Kind { kAtom, kList, kPair };

  Kind kind = Kind::kAtom;
  // Atom text, or the key of a pair.
  std::string text;
  bool quoted = false;
  // List elements; a pair stores its value as the single element.
  std::vector<Term> items;
  SourcePos pos;

  bool is_atom() const { return kind == Kind::kAtom; }
  bool is_list() const { return kind == Kind::kList; }
  bool is_pair() const { return kind == Kind::kPair; }
  const Term& value() const { return items.front(); }
};

struct Clause {
  Term term;
  // Comment lines directly above the clause, without the leading '%'.
  std::vector<std::string> leading_comments;
  // Comment on the line where the clause ends.
  std::string trailing_comment;
  bool blank_line_before = false;
};

class TermReader {
 public:
  explicit TermReader(std::string_view text);

  // Reads the next '.'-terminated clause. Returns false at end of input.
  bool Next(Clause* clause);

  // Comments that followed the last clause.
  const std::vector<std::string>& tail_comments() const {
    return tail_comments_;
  }

  // Parses a single term that must span all of `text` (an optional final
  // '.' is accepted).
  static Term ParseSingle(std::string_view text);

 private:
  enum class Tok { kAtom, kOpen, kClose, kComma, kColon, kEnd, kEof };

  struct Lexeme {
    Tok tok = Tok::kEof;
    std::string text;
    bool quoted = false;
    SourcePos pos;
  };

  Lexeme Lex();
  const Lexeme& Peek();
  Lexeme Take();
  Term ParseTerm();
  [[noreturn]] void Fail(const std::string& message, SourcePos pos) const;
  void SkipSpaceCollectComments();
  char Cur() const { return i_ < text_.size() ? text_[i_] : '\0'; }
  void Advance();

  std::string_view text_;
  size_t i_ = 0;
  SourcePos pos_;
  bool has_peek_ = false;
  Lexeme peek_;

  std::vector<std::string> pending_comments_;
  bool pending_blank_ = false;
  int last_end_line_ = 0;
  std::string pending_trailing_;
  std::vector<std::string> tail_comments_;
};

// True when `atom` can be written without quotes.
bool IsPlainAtom(std::string_view atom);

// Writes an atom in canonical form, quoting and escaping when needed.
std::string QuoteAtom(std::string_view atom);

// Renders a term back to text (canonical quoting, no spaces).
std::string TermToString(const Term& term);

}  // namespace morphdis

#endif  // MORPHDIS_TERM_H_
