#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "ipdyn/errors.hpp"
#include "ipdyn/intpoly.hpp"

namespace ipdyn {
namespace {

struct Token {
  enum Kind { Number, Var, Caret, Slash, Plus, Minus, Star, End } kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Number, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    Token::Kind kind;
    switch (ch) {
      case 'n': kind = Token::Var; break;
      case '^': kind = Token::Caret; break;
      case '/': kind = Token::Slash; break;
      case '+': kind = Token::Plus; break;
      case '-': kind = Token::Minus; break;
      case '*': kind = Token::Star; break;
      default: {
        std::size_t j = i + 1;
        while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) ++j;
        fail(ErrorCode::ParseError, "unexpected token '" + std::string(s.substr(i, j - i)) +
                                        "' at position " + std::to_string(i) + " in \"" +
                                        std::string(s) + "\"");
      }
    }
    out.push_back({kind, std::string(1, ch), i});
    ++i;
  }
  out.push_back({Token::End, "<end>", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view source, std::vector<Token> tokens)
      : source_(source), tokens_(std::move(tokens)) {}

  std::map<unsigned, Rational> parse() {
    std::map<unsigned, Rational> terms;
    bool first = true;
    while (true) {
      int sign = 1;
      if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
        sign = peek().kind == Token::Minus ? -1 : 1;
        advance();
      } else if (!first) {
        error(peek(), "expected '+' or '-'");
      }
      auto [power, coeff] = term();
      terms[power] += coeff * sign;
      first = false;
      if (peek().kind == Token::End) break;
    }
    return terms;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void error(const Token& t, const std::string& what) const {
    fail(ErrorCode::ParseError, what + ", got token '" + t.text + "' at position " +
                                    std::to_string(t.pos) + " in \"" + std::string(source_) + "\"");
  }

  BigInt number(const std::string& what) {
    if (peek().kind != Token::Number) error(peek(), "expected " + what);
    return BigInt(advance().text);
  }

  std::pair<unsigned, Rational> term() {
    Rational coeff = 1;
    bool has_coeff = false;
    if (peek().kind == Token::Number) {
      BigInt num(advance().text);
      coeff = Rational(num);
      has_coeff = true;
      if (peek().kind == Token::Slash) {
        advance();
        const Token& at = peek();
        BigInt den = number("denominator");
        if (den == 0) error(at, "zero denominator");
        coeff /= Rational(den);
      }
      if (peek().kind == Token::Star) advance();
    }
    unsigned power = 0;
    if (peek().kind == Token::Var) {
      advance();
      power = 1;
      if (peek().kind == Token::Caret) {
        advance();
        const Token& at = peek();
        BigInt e = number("exponent");
        if (e > 64) error(at, "exponent too large");
        power = e.convert_to<unsigned>();
      }
    } else if (!has_coeff) {
      error(peek(), "expected coefficient or 'n'");
    }
    if (peek().kind == Token::Slash) {
      advance();
      const Token& at = peek();
      BigInt den = number("divisor");
      if (den == 0) error(at, "zero divisor");
      coeff /= Rational(den);
    }
    return {power, coeff};
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

IntegralPolynomial parse_polynomial(std::string_view text) {
  Parser parser(text, tokenize(text));
  const auto terms = parser.parse();
  unsigned top = 0;
  for (const auto& [power, coeff] : terms) top = std::max(top, power);
  std::vector<Rational> coeffs(top + 1);
  for (const auto& [power, coeff] : terms) coeffs[power] += coeff;
  try {
    return IntegralPolynomial::from_monomials(coeffs);
  } catch (const Error& e) {
    fail(e.code(), "\"" + std::string(text) + "\": " + e.detail());
  }
}

}  // namespace ipdyn
