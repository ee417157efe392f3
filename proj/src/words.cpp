#include "twisth/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace twisth {

ParseError::ParseError(std::size_t line, std::size_t col,
                       const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", col " +
                         std::to_string(col) + ": " + msg),
      line_(line),
      col_(col) {}

std::vector<Letter> Word::reduce(std::vector<Letter> raw) {
  std::vector<Letter> out;
  out.reserve(raw.size());
  for (const Letter& l : raw) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign != l.sign) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word free_reduce(const std::vector<Letter>& raw) { return Word(raw); }

Word invert(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back({it->gen, -it->sign});
  }
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(std::move(out));
}

Word pow(const Word& w, int k) {
  Word base = k < 0 ? invert(w) : w;
  int n = k < 0 ? -k : k;
  Word out;
  for (int i = 0; i < n; ++i) out = concat(out, base);
  return out;
}

int Presentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].name == name) return static_cast<int>(i);
  }
  return -1;
}

std::string Presentation::relation_label(std::size_t k) const {
  const std::string& l = relations.at(k).label;
  if (!l.empty()) return "(" + l + ")";
  return "(" + std::to_string(k + 1) + ")";
}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Recursive-descent word parser over a single line of text.
class WordParser {
 public:
  WordParser(const std::string& text, const Presentation& pres,
             std::size_t line, std::size_t col_offset)
      : text_(text), pres_(pres), line_(line), off_(col_offset) {}

  Word parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail(pos_, "empty word");
    // Literal "1" denotes the identity (used by relations like w = 1).
    if (text_[pos_] == '1' && rest_is_blank(pos_ + 1)) {
      pos_ = text_.size();
      return Word();
    }
    Word w = parse_sequence();
    skip_ws();
    if (pos_ < text_.size()) fail(pos_, "unexpected ')'");
    return w;
  }

 private:
  Word parse_sequence() {
    Word w;
    bool any = false;
    for (;;) {
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] == ')') break;
      w = concat(w, parse_atom());
      any = true;
    }
    if (!any) fail(pos_, "empty atom");
    return w;
  }

  Word parse_atom() {
    if (text_[pos_] == '(') {
      std::size_t open = pos_;
      ++pos_;
      Word inner = parse_sequence();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        fail(open, "unbalanced parenthesis");
      }
      ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '^') {
        return pow(inner, parse_exponent());
      }
      return inner;
    }
    if (!is_name_start(text_[pos_])) fail(pos_, "expected generator name");
    std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    int idx = pres_.generator_index(name);
    if (idx < 0) fail(start, "unknown generator '" + name + "'");
    int exp = 1;
    if (pos_ < text_.size() && text_[pos_] == '^') exp = parse_exponent();
    Letter base{idx, exp < 0 ? -1 : +1};
    std::vector<Letter> raw(static_cast<std::size_t>(exp < 0 ? -exp : exp),
                            base);
    return Word(std::move(raw));
  }

  int parse_exponent() {
    std::size_t caret = pos_;
    ++pos_;  // '^'
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      ++pos_;
    }
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<
                              unsigned char>(text_[start])))) {
      fail(caret, "expected integer exponent after '^'");
    }
    long v = std::strtol(text_.c_str() + start, nullptr, 10);
    if (v == 0) fail(start, "zero exponent");
    return static_cast<int>(v);
  }

  bool rest_is_blank(std::size_t p) const {
    for (; p < text_.size(); ++p) {
      if (!std::isspace(static_cast<unsigned char>(text_[p]))) return false;
    }
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  [[noreturn]] void fail(std::size_t at, const std::string& msg) {
    throw ParseError(line_, off_ + at + 1, msg);
  }

  const std::string& text_;
  const Presentation& pres_;
  std::size_t line_;
  std::size_t off_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  std::size_t h = line.find('#');
  return h == std::string::npos ? line : line.substr(0, h);
}

bool is_blank(const std::string& s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Word parse_word(const std::string& text, const Presentation& pres,
                std::size_t line) {
  return WordParser(text, pres, line, 0).parse();
}

std::string print_word(const Word& w, const Presentation& pres) {
  if (w.empty()) return "1";
  std::ostringstream os;
  std::size_t i = 0;
  const auto& ls = w.letters();
  bool first = true;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    long run = static_cast<long>(j - i) * ls[i].sign;
    if (!first) os << ' ';
    os << pres.generators.at(static_cast<std::size_t>(ls[i].gen)).name;
    if (run != 1) os << '^' << run;
    first = false;
    i = j;
  }
  return os.str();
}

ParsedPresentation parse_presentation(const std::string& text) {
  ParsedPresentation out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  bool have_generators = false;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (is_blank(line)) continue;
    std::size_t start = line.find_first_not_of(" \t");
    std::string body = line.substr(start);

    if (body.rfind("generators:", 0) == 0) {
      if (have_generators) {
        throw ParseError(lineno, start + 1, "duplicate generators line");
      }
      have_generators = true;
      std::istringstream gs(body.substr(std::string("generators:").size()));
      std::string name;
      while (gs >> name) {
        if (!is_name_start(name[0])) {
          throw ParseError(lineno, 1,
                           "generator name must start with a letter: '" +
                               name + "'");
        }
        for (char c : name) {
          if (!is_name_char(c)) {
            throw ParseError(lineno, 1,
                             "invalid character in generator name: '" + name +
                                 "'");
          }
        }
        if (out.pres.generator_index(name) >= 0) {
          throw ParseError(lineno, 1, "duplicate generator '" + name + "'");
        }
        out.pres.generators.push_back({name});
      }
      continue;
    }

    if (body.rfind("rel", 0) == 0) {
      std::size_t colon = body.find(':');
      if (colon == std::string::npos) {
        throw ParseError(lineno, start + 1, "malformed rel line (missing ':')");
      }
      std::string label = body.substr(3, colon - 3);
      // trim label
      std::size_t lb = label.find_first_not_of(" \t");
      std::size_t le = label.find_last_not_of(" \t");
      label = lb == std::string::npos ? "" : label.substr(lb, le - lb + 1);
      if (!have_generators) {
        throw ParseError(lineno, start + 1,
                         "rel line before generators line");
      }
      std::string rest = body.substr(colon + 1);
      std::size_t eq = rest.find('=');
      if (eq == std::string::npos) {
        throw ParseError(lineno, start + 1, "malformed relation (missing '=')");
      }
      std::size_t base = start + colon + 1;
      Word lhs = WordParser(rest.substr(0, eq), out.pres, lineno, base).parse();
      Word rhs = WordParser(rest.substr(eq + 1), out.pres, lineno,
                            base + eq + 1)
                     .parse();
      if (lhs == rhs) {
        out.warnings.push_back("line " + std::to_string(lineno) +
                               ": relation has identical sides (contributes "
                               "nothing)");
      }
      out.pres.relations.push_back({lhs, rhs, label});
      continue;
    }

    throw ParseError(lineno, start + 1, "malformed line");
  }
  if (!have_generators) {
    throw ParseError(lineno == 0 ? 1 : lineno, 1, "missing generators line");
  }
  return out;
}

}  // namespace twisth
