#include <cctype>
#include <map>

#include "ipdyn/errors.hpp"
#include "ipdyn/gammapoly.hpp"

namespace ipdyn {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::string_view text, std::size_t pos, std::string_view what) {
  fail(ErrorCode::ParseError, std::string(what) + " at position " + std::to_string(pos) +
                                  " in \"" + std::string(text) + "\"");
}

// generator index -> summed exponent
std::map<std::size_t, IntegralPolynomial> parse_factors(std::string_view text) {
  std::map<std::size_t, IntegralPolynomial> factors;
  const std::string_view body = trim(text);
  if (body == "e" || body == "1") return factors;

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  while (true) {
    skip_ws();
    if (i >= text.size()) {
      if (first) parse_error(text, i, "empty Gamma-polynomial");
      break;
    }
    if (!first) {
      if (text[i] != '*') parse_error(text, i, "expected '*' between factors");
      ++i;
      skip_ws();
    }
    if (i >= text.size() || text[i] != 'T') {
      parse_error(text, i, "expected generator 'T'");
    }
    ++i;
    std::size_t index = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      index = std::stoul(std::string(text.substr(i, j - i)));
      if (index == 0) parse_error(text, i, "generator indices start at 1");
      i = j;
    }
    skip_ws();
    IntegralPolynomial exponent = IntegralPolynomial::monomial(1);
    if (i < text.size() && text[i] == '^') {
      ++i;
      skip_ws();
      if (i >= text.size() || text[i] != '{') parse_error(text, i, "expected '{' after '^'");
      const std::size_t close = text.find('}', i);
      if (close == std::string_view::npos) parse_error(text, i, "unterminated '{'");
      exponent = parse_polynomial(text.substr(i + 1, close - i - 1));
      i = close + 1;
    }
    factors[index] += exponent;
    first = false;
  }
  return factors;
}

GammaPolynomial assemble(const std::map<std::size_t, IntegralPolynomial>& factors,
                         std::size_t generators) {
  std::size_t d = std::max<std::size_t>(generators, 1);
  if (!factors.empty()) d = std::max(d, factors.rbegin()->first);
  std::vector<IntegralPolynomial> exps(d);
  for (const auto& [j, p] : factors) exps[j - 1] = p;
  return GammaPolynomial(std::move(exps));
}

}  // namespace

GammaPolynomial parse_gamma_polynomial(std::string_view text, std::size_t generators) {
  return assemble(parse_factors(text), generators);
}

PolySystem parse_system(std::string_view text) {
  std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') {
      fail(ErrorCode::ParseError, "unbalanced braces around system \"" + std::string(text) + "\"");
    }
    body = trim(body.substr(1, body.size() - 2));
  }
  std::vector<std::map<std::size_t, IntegralPolynomial>> parsed;
  std::size_t d = 1;
  std::size_t start = 0;
  while (start <= body.size()) {
    std::size_t end = body.find(';', start);
    if (end == std::string_view::npos) end = body.size();
    const std::string_view item = trim(body.substr(start, end - start));
    if (item.empty()) {
      if (end != body.size() || !parsed.empty() || !body.empty()) {
        fail(ErrorCode::ParseError, "empty member in system \"" + std::string(text) + "\"");
      }
    } else {
      parsed.push_back(parse_factors(item));
      if (!parsed.back().empty()) d = std::max(d, parsed.back().rbegin()->first);
    }
    start = end + 1;
  }
  std::vector<GammaPolynomial> members;
  members.reserve(parsed.size());
  for (const auto& f : parsed) members.push_back(assemble(f, d));
  return PolySystem(std::move(members));
}

}  // namespace ipdyn
