#include <cctype>
#include <limits>
#include <optional>

#include "buchi/syntax.hpp"

namespace buchi::syntax {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message), position_(position) {}

namespace {

enum class Tok {
  Ident,
  Number,
  KwExists,
  KwForall,
  KwExistsInf,
  KwV,
  Dot,
  LParen,
  RParen,
  Not,
  And,
  Or,
  Implies,
  Iff,
  Eq,
  Ne,
  Lt,
  Le,
  Gt,
  Ge,
  Plus,
  Star,
  Percent,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok k, std::size_t len) {
    out.push_back({k, std::string(s.substr(i, len)), i});
    i += len;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      push(Tok::Number, j - i);
      continue;
    }
    if (c == '_') throw ParseError(i, "identifiers starting with '_' are reserved");
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      std::string word(s.substr(i, j - i));
      Tok k = Tok::Ident;
      if (word == "E") k = Tok::KwExists;
      else if (word == "A") k = Tok::KwForall;
      else if (word == "EINF") k = Tok::KwExistsInf;
      else if (word == "V") k = Tok::KwV;
      push(k, j - i);
      continue;
    }
    auto starts = [&](std::string_view op) { return s.substr(i, op.size()) == op; };
    if (starts("<->")) push(Tok::Iff, 3);
    else if (starts("->")) push(Tok::Implies, 2);
    else if (starts("!=")) push(Tok::Ne, 2);
    else if (starts("<=")) push(Tok::Le, 2);
    else if (starts(">=")) push(Tok::Ge, 2);
    else if (c == '<') push(Tok::Lt, 1);
    else if (c == '>') push(Tok::Gt, 1);
    else if (c == '=') push(Tok::Eq, 1);
    else if (c == '!') push(Tok::Not, 1);
    else if (c == '&') push(Tok::And, 1);
    else if (c == '|') push(Tok::Or, 1);
    else if (c == '+') push(Tok::Plus, 1);
    else if (c == '*') push(Tok::Star, 1);
    else if (c == '%') push(Tok::Percent, 1);
    else if (c == '.') push(Tok::Dot, 1);
    else if (c == '(') push(Tok::LParen, 1);
    else if (c == ')') push(Tok::RParen, 1);
    else throw ParseError(i, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  FormulaPtr formula_to_end() {
    auto f = parse_iff();
    expect(Tok::End, "end of input");
    return f;
  }

  TermPtr term_to_end() {
    auto t = parse_term();
    expect(Tok::End, "end of input");
    return t;
  }

private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      std::string got = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
      throw ParseError(peek().pos, std::string("expected ") + what + ", got " + got);
    }
    return next();
  }

  // <-> and -> associate to the right; | and & to the left.
  FormulaPtr parse_iff() {
    auto lhs = parse_implies();
    if (accept(Tok::Iff)) return iff(lhs, parse_iff());
    return lhs;
  }
  FormulaPtr parse_implies() {
    auto lhs = parse_or();
    if (accept(Tok::Implies)) return implies(lhs, parse_implies());
    return lhs;
  }
  FormulaPtr parse_or() {
    auto lhs = parse_and();
    while (accept(Tok::Or)) lhs = disj(lhs, parse_and());
    return lhs;
  }
  FormulaPtr parse_and() {
    auto lhs = parse_unary();
    while (accept(Tok::And)) lhs = conj(lhs, parse_unary());
    return lhs;
  }
  FormulaPtr parse_unary() {
    if (accept(Tok::Not)) return negate(parse_unary());
    switch (peek().kind) {
      case Tok::KwExists:
      case Tok::KwForall:
      case Tok::KwExistsInf: {
        Tok q = next().kind;
        std::string name = expect(Tok::Ident, "bound variable").text;
        expect(Tok::Dot, "'.' after bound variable");
        auto body = parse_iff();
        if (q == Tok::KwExists) return exists(name, body);
        if (q == Tok::KwForall) return forall(name, body);
        return exists_inf(name, body);
      }
      case Tok::LParen: {
        // Either a parenthesized formula or an atom starting with a
        // parenthesized term, as in "(x + y) + z = w".
        std::size_t start = pos_;
        try {
          next();
          auto f = parse_iff();
          expect(Tok::RParen, "')'");
          if (!continues_term(peek().kind)) return f;
        } catch (const ParseError& as_formula) {
          pos_ = start;
          try {
            return parse_atom();
          } catch (const ParseError& as_atom) {
            if (as_atom.position() > as_formula.position()) throw;
            throw as_formula;
          }
        }
        pos_ = start;
        return parse_atom();
      }
      default:
        return parse_atom();
    }
  }

  static bool continues_term(Tok k) {
    switch (k) {
      case Tok::Plus:
      case Tok::Percent:
      case Tok::Eq:
      case Tok::Ne:
      case Tok::Lt:
      case Tok::Le:
      case Tok::Gt:
      case Tok::Ge: return true;
      default: return false;
    }
  }

  FormulaPtr parse_atom() {
    std::size_t at = peek().pos;
    auto lhs = parse_term();
    if (accept(Tok::Percent)) {
      auto m = parse_small(expect(Tok::Number, "modulus"));
      expect(Tok::Eq, "'=' in congruence");
      auto r = parse_small(expect(Tok::Number, "residue"));
      if (m < 2) throw ParseError(at, "modulus must be at least 2");
      if (r >= m) throw ParseError(at, "residue must be smaller than the modulus");
      return congruence(lhs, m, r);
    }
    std::optional<CompareOp> op;
    switch (peek().kind) {
      case Tok::Eq: op = CompareOp::Eq; break;
      case Tok::Ne: op = CompareOp::Ne; break;
      case Tok::Lt: op = CompareOp::Lt; break;
      case Tok::Le: op = CompareOp::Le; break;
      case Tok::Gt: op = CompareOp::Gt; break;
      case Tok::Ge: op = CompareOp::Ge; break;
      default: break;
    }
    if (!op) expect(Tok::Eq, "relation symbol");
    next();
    return compare(*op, lhs, parse_term());
  }

  std::uint64_t parse_small(const Token& t) {
    Natural n = parse_natural(t.text);
    if (n > Natural(std::numeric_limits<std::uint32_t>::max())) throw ParseError(t.pos, "modulus/residue too large");
    return static_cast<std::uint64_t>(n);
  }

  TermPtr parse_term() {
    auto lhs = parse_factor();
    while (accept(Tok::Plus)) lhs = sum(lhs, parse_factor());
    return lhs;
  }

  TermPtr parse_factor() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number: {
        next();
        Natural n = parse_natural(t.text);
        if (accept(Tok::Star)) {
          auto operand = parse_factor();
          if (n == 0) return constant(0);
          return scale(n, operand);
        }
        return constant(n);
      }
      case Tok::Ident:
        next();
        return var(t.text);
      case Tok::LParen: {
        next();
        auto inner = parse_term();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::KwV: {
        next();
        expect(Tok::LParen, "'(' after V");
        auto operand = parse_term();
        expect(Tok::RParen, "')'");
        return v_of(operand);
      }
      default: {
        std::string got = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.pos, "expected term, got " + got);
      }
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) { return Parser(text).formula_to_end(); }

TermPtr parse_term(std::string_view text) { return Parser(text).term_to_end(); }

}  // namespace buchi::syntax
