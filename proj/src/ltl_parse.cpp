#include <cctype>
#include <optional>

#include "tpcheck/error.hpp"
#include "tpcheck/ltl.hpp"

namespace tpcheck {
namespace {

enum class Tok { Ident, Not, And, Or, Implies, LParen, RParen, Next, Globally, Finally,
                 Until, WeakUntil, Release, True, False, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t line, std::size_t column)
      : text_(text), line_(line), column_(column) {}

  Token next() {
    skip_space();
    const std::size_t line = line_, col = column_;
    if (pos_ >= text_.size()) return {Tok::End, "", line, col};
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      advance(1);
      return Token{k, std::string(1, c), line, col};
    };
    switch (c) {
      case '!': return single(Tok::Not);
      case '&': return single(Tok::And);
      case '|': return single(Tok::Or);
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          advance(2);
          return {Tok::Implies, "->", line, col};
        }
        throw ParseError(line, col, "unknown token '-'");
      default:
        break;
    }
    if (c == kComplementMark || ident_start(c)) {
      std::size_t end = pos_ + (c == kComplementMark ? 1 : 0);
      if (end >= text_.size() || !ident_start(text_[end])) {
        throw ParseError(line, col, "'~' must be followed by a proposition name");
      }
      while (end < text_.size() && ident_char(text_[end])) ++end;
      std::string word(text_.substr(pos_, end - pos_));
      advance(end - pos_);
      return {keyword(word), word, line, col};
    }
    throw ParseError(line, col, std::string("unknown token '") + c + "'");
  }

 private:
  static Tok keyword(const std::string& w) {
    if (w == "X") return Tok::Next;
    if (w == "G") return Tok::Globally;
    if (w == "F") return Tok::Finally;
    if (w == "U") return Tok::Until;
    if (w == "W") return Tok::WeakUntil;
    if (w == "R") return Tok::Release;
    if (w == "true") return Tok::True;
    if (w == "false") return Tok::False;
    return Tok::Ident;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      advance(1);
    }
  }

  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i, ++pos_) {
      if (text_[pos_] == '\n') {
        ++line_;
        column_ = 1;
      } else {
        ++column_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column_;
};

// Precedence, loosest first: ->, |, &, U/W/R, unary. -> and the temporal
// binaries associate to the right.
class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column) : lex_(text, line, column) {
    tok_ = lex_.next();
  }

  Formula parse() {
    Formula f = implication();
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
    return f;
  }

 private:
  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::Implies)) return Formula::implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula f = conjunction();
    while (accept(Tok::Or)) f = Formula::disj(f, conjunction());
    return f;
  }

  Formula conjunction() {
    Formula f = temporal_binary();
    while (accept(Tok::And)) f = Formula::conj(f, temporal_binary());
    return f;
  }

  Formula temporal_binary() {
    Formula lhs = unary();
    if (accept(Tok::Until)) return Formula::until(lhs, temporal_binary());
    if (accept(Tok::WeakUntil)) return Formula::weak_until(lhs, temporal_binary());
    if (accept(Tok::Release)) return Formula::release(lhs, temporal_binary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::Not)) return Formula::negation(unary());
    if (accept(Tok::Next)) return Formula::next(unary());
    if (accept(Tok::Globally)) return Formula::globally(unary());
    if (accept(Tok::Finally)) return Formula::finally(unary());
    return primary();
  }

  Formula primary() {
    if (accept(Tok::LParen)) {
      Formula f = implication();
      if (!accept(Tok::RParen)) fail("expected ')'");
      return f;
    }
    if (accept(Tok::True)) return Formula::constant(true);
    if (accept(Tok::False)) return Formula::constant(false);
    if (tok_.kind == Tok::Ident) {
      std::string name = tok_.text;
      tok_ = lex_.next();
      return Formula::atom(std::move(name));
    }
    if (tok_.kind == Tok::End) fail("unexpected end of formula");
    fail("unexpected '" + tok_.text + "'");
  }

  bool accept(Tok k) {
    if (tok_.kind != k) return false;
    tok_ = lex_.next();
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(tok_.line, tok_.column, msg);
  }

  Lexer lex_;
  Token tok_;
};

}  // namespace

Formula parse_ltl(std::string_view text) { return Parser(text, 1, 1).parse(); }

std::vector<Property> parse_properties(std::string_view text) {
  std::vector<Property> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
      if (end == text.size()) break;
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError(line_no, first + 1, "expected 'name: formula'");
    }
    std::string_view name = line.substr(first, colon - first);
    while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
    if (name.empty() || !ident_start(name.front())) {
      throw ParseError(line_no, first + 1, "invalid property name");
    }
    for (char c : name) {
      if (!ident_char(c)) throw ParseError(line_no, first + 1, "invalid property name");
    }
    for (const auto& p : out) {
      if (p.name == name) {
        throw ParseError(line_no, first + 1, "duplicate property '" + std::string(name) + "'");
      }
    }
    Formula f = Parser(line.substr(colon + 1), line_no, colon + 2).parse();
    out.push_back({std::string(name), std::move(f)});
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace tpcheck
