#include "lieq/expression.hpp"

#include <algorithm>
#include <cctype>

namespace lieq {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      advance(1);
      continue;
    }
    std::size_t start_line = line;
    std::size_t start_col = col;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tokens.push_back({Tok::Number, std::string(text.substr(i, j - i)), start_line, start_col});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      tokens.push_back({Tok::Ident, std::string(text.substr(i, j - i)), start_line, start_col});
      advance(j - i);
      continue;
    }
    Tok kind;
    switch (ch) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default:
        throw ParseError(std::string("unexpected character '") + ch + "'", start_line, start_col);
    }
    tokens.push_back({kind, std::string(1, ch), start_line, start_col});
    advance(1);
  }
  tokens.push_back({Tok::End, "", line, col});
  return tokens;
}

class Parser {
 public:
  Parser(std::string_view text, const LieAlgebra* algebra, std::vector<std::string> symbols)
      : tokens_(tokenize(text)), algebra_(algebra), symbols_(std::move(symbols)) {}

  Element parse() {
    Element e = expr();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }
  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& message) const {
    const Token& t = peek();
    throw ParseError(message, t.line, t.column);
  }
  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what);
  }

  Element expr() {
    Element e = term();
    for (;;) {
      if (accept(Tok::Plus)) {
        e += term();
      } else if (accept(Tok::Minus)) {
        e -= term();
      } else {
        return e;
      }
    }
  }

  Element term() {
    Element e = unary();
    for (;;) {
      if (accept(Tok::Star)) {
        e = e * unary();
      } else if (peek().kind == Tok::Slash) {
        ++pos_;
        if (peek().kind != Tok::Number) fail("expected integer divisor after '/'");
        Rational d(next().text);
        if (sgn(d) == 0) fail("division by zero");
        e = Scalar(Rational(1) / d) * e;
      } else {
        return e;
      }
    }
  }

  Element unary() {
    if (accept(Tok::Minus)) return -unary();
    if (accept(Tok::Plus)) return unary();
    return power();
  }

  int exponent() {
    bool negative = false;
    bool paren = accept(Tok::LParen);
    if (accept(Tok::Minus)) negative = true;
    if (peek().kind != Tok::Number) fail("expected integer exponent");
    const Token& t = next();
    if (t.text.size() > 6) fail("exponent too large");
    int value = std::stoi(t.text);
    if (paren) expect(Tok::RParen, "')'");
    return negative ? -value : value;
  }

  Element power() {
    std::size_t atom_pos = pos_;
    Element base = atom();
    if (!accept(Tok::Caret)) return base;
    int n = exponent();
    bool scalar_only = base.size() <= 1 && (base.is_zero() || base.terms().begin()->first.empty());
    if (scalar_only) {
      Scalar s = base.is_zero() ? Scalar() : base.terms().begin()->second;
      if (n < 0 && !s.is_unit()) {
        pos_ = atom_pos;
        fail("negative exponent requires an invertible scalar base");
      }
      try {
        return Element::scalar(s.pow(n));
      } catch (const ArithmeticError& err) {
        pos_ = atom_pos;
        fail(err.what());
      }
    }
    if (n < 0) {
      pos_ = atom_pos;
      fail("negative exponent on a non-scalar factor");
    }
    Element result = Element::unit();
    for (int k = 0; k < n; ++k) result = result * base;
    return result;
  }

  Element atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return Element::scalar(Scalar(Rational(t.text)));
      case Tok::Ident:
        return identifier();
      case Tok::LParen: {
        ++pos_;
        Element e = expr();
        expect(Tok::RParen, "')'");
        return e;
      }
      default:
        fail(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }
  }

  Element identifier() {
    const Token& t = peek();
    if (t.text == "i") {
      ++pos_;
      return Element::scalar(Scalar::i());
    }
    if (algebra_ != nullptr) {
      if (auto idx = algebra_->find(t.text)) {
        ++pos_;
        return Element::generator(*idx);
      }
    }
    if (std::find(symbols_.begin(), symbols_.end(), t.text) != symbols_.end()) {
      ++pos_;
      return Element::scalar(Scalar::symbol(t.text));
    }
    fail("unknown identifier '" + t.text + "'");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const LieAlgebra* algebra_;
  std::vector<std::string> symbols_;
};

}  // namespace

Element parse_expression(const LieAlgebra& algebra, std::string_view text) {
  return Parser(text, &algebra, algebra.symbols()).parse();
}

Scalar parse_scalar(std::string_view text, const std::vector<std::string>& symbols) {
  Element e = Parser(text, nullptr, symbols).parse();
  if (e.is_zero()) return {};
  return e.terms().begin()->second;
}

}  // namespace lieq
