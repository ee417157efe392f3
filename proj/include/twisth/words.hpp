#ifndef TWISTH_WORDS_HPP_
#define TWISTH_WORDS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace twisth {

/// Error raised by the text parsers; carries a 1-based line/column.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& msg);
  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

/// One letter of a free-group word: a generator index and a sign.
struct Letter {
  int gen = 0;
  int sign = +1;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word in a free group.  The empty word is the
/// identity.  Construction always reduces, so no adjacent pair
/// (g,+1)(g,-1) or (g,-1)(g,+1) survives.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> raw) : letters_(reduce(std::move(raw))) {}

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static std::vector<Letter> reduce(std::vector<Letter> raw);
  std::vector<Letter> letters_;
};

Word free_reduce(const std::vector<Letter>& raw);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
Word pow(const Word& w, int k);

struct Generator {
  std::string name;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// A relation lhs = rhs, both sides words over the enclosing
/// presentation.  `label` is the optional name from the source file
/// (e.g. "9b"); empty when the file gave none.
struct Relation {
  Word lhs;
  Word rhs;
  std::string label;
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<Relation> relations;

  // -1 if the name is unknown.
  int generator_index(const std::string& name) const;
  std::size_t num_generators() const { return generators.size(); }

  /// Display label of relation k: its file label in parentheses, or
  /// the 1-based index when unnamed.
  std::string relation_label(std::size_t k) const;
};

/// Parses a single word against a generator table.
/// Grammar: word := "1" | atom+ ; atom := NAME | NAME^INT | "(" word ")" ^INT
/// with INT a nonzero signed integer.  `line` is used for error reporting.
Word parse_word(const std::string& text, const Presentation& pres,
                std::size_t line = 1);

std::string print_word(const Word& w, const Presentation& pres);

/// A parsed presentation plus non-fatal diagnostics (e.g. a relation
/// whose two sides are the same word).
struct ParsedPresentation {
  Presentation pres;
  std::vector<std::string> warnings;
};

ParsedPresentation parse_presentation(const std::string& text);

}  // namespace twisth

#endif  // TWISTH_WORDS_HPP_
