#include "ipdyn/intpoly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ipdyn/errors.hpp"

namespace ipdyn {

std::optional<std::int64_t> to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    return std::nullopt;
  }
  return value.convert_to<std::int64_t>();
}

std::string format_rational(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt binomial(const BigInt& n, unsigned k) {
  BigInt result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);  // exact: product of i+1 consecutive integers
  }
  return result;
}

namespace {

BigInt factorial(unsigned k) {
  BigInt f = 1;
  for (unsigned i = 2; i <= k; ++i) f *= i;
  return f;
}

Rational eval_monomial(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

IntegralPolynomial::IntegralPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void IntegralPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegralPolynomial IntegralPolynomial::from_binomial(std::vector<BigInt> coeffs) {
  return IntegralPolynomial(std::move(coeffs));
}

IntegralPolynomial IntegralPolynomial::from_monomials(std::span<const Rational> coeffs) {
  // Binomial coordinates are the forward differences at 0:
  // b_k = sum_i (-1)^(k-i) C(k,i) p(i).
  std::size_t top = coeffs.size();
  while (top > 0 && coeffs[top - 1] == 0) --top;
  if (top == 0) return {};
  const std::size_t k = top - 1;

  std::vector<Rational> table(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    table[i] = eval_monomial(coeffs.first(top), Rational(static_cast<long long>(i)));
  }
  std::vector<BigInt> out(k + 1);
  for (std::size_t level = 0; level <= k; ++level) {
    const Rational& head = table[0];
    if (boost::multiprecision::denominator(head) != 1) {
      std::ostringstream msg;
      msg << "binomial coefficient c_" << level << " = " << format_rational(head)
          << " is not an integer";
      fail(ErrorCode::NotIntegralPolynomial, msg.str());
    }
    out[level] = boost::multiprecision::numerator(head);
    for (std::size_t i = 0; i + 1 < table.size(); ++i) table[i] = table[i + 1] - table[i];
    table.pop_back();
  }
  return IntegralPolynomial(std::move(out));
}

IntegralPolynomial IntegralPolynomial::constant(const BigInt& value) {
  return IntegralPolynomial(std::vector<BigInt>{value});
}

IntegralPolynomial IntegralPolynomial::monomial(unsigned k, const BigInt& c) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = Rational(c);
  return from_monomials(coeffs);
}

std::vector<Rational> IntegralPolynomial::monomial_coeffs() const {
  std::vector<Rational> out(coeffs_.size());
  // falling(n, k) = n (n-1) ... (n-k+1), built incrementally.
  std::vector<BigInt> falling{1};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      const BigInt kfact = factorial(static_cast<unsigned>(k));
      for (std::size_t j = 0; j < falling.size(); ++j) {
        out[j] += Rational(coeffs_[k] * falling[j], kfact);
      }
    }
    std::vector<BigInt> next(falling.size() + 1);
    for (std::size_t j = 0; j < falling.size(); ++j) {
      next[j + 1] += falling[j];
      next[j] -= falling[j] * static_cast<long long>(k);
    }
    falling = std::move(next);
  }
  return out;
}

Rational IntegralPolynomial::leading_coefficient() const {
  if (coeffs_.empty()) return 0;
  return Rational(coeffs_.back(), factorial(static_cast<unsigned>(degree())));
}

BigInt IntegralPolynomial::eval(const BigInt& n) const {
  BigInt acc = 0;
  BigInt c = 1;  // C(n, k)
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) {
      c *= (n - static_cast<long long>(k - 1));
      c /= static_cast<long long>(k);
    }
    acc += coeffs_[k] * c;
  }
  return acc;
}

IntegralPolynomial IntegralPolynomial::operator-() const {
  IntegralPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

IntegralPolynomial& IntegralPolynomial::operator+=(const IntegralPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntegralPolynomial& IntegralPolynomial::operator-=(const IntegralPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntegralPolynomial& IntegralPolynomial::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

std::strong_ordering operator<=>(const IntegralPolynomial& a, const IntegralPolynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() <=> b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] < b.coeffs_[i]) return std::strong_ordering::less;
    if (a.coeffs_[i] > b.coeffs_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntegralPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  const auto mono = monomial_coeffs();
  std::string out;
  for (std::size_t j = mono.size(); j-- > 0;) {
    const Rational& c = mono[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0 || mag != 1) out += format_rational(mag);
    if (j >= 1) out += "n";
    if (j >= 2) out += "^" + std::to_string(j);
  }
  return out;
}

IntegralPolynomial arith(const IntegralPolynomial& p, const IntegralPolynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Neg: return -p;
  }
  return p;
}

IntegralPolynomial shift_diff(const IntegralPolynomial& p, const BigInt& m) {
  // C(n+m, k) = sum_i C(n, i) C(m, k-i), so the C(n, i) coordinate of
  // p(n+m) - p(n) is sum_{k>i} c_k C(m, k-i); p(m) cancels the i = 0 sum
  // and leaves -c_0 behind.
  const auto& c = p.binomial_coeffs();
  if (c.empty()) return {};
  std::vector<BigInt> binom_m(c.size());
  for (std::size_t r = 0; r < c.size(); ++r) binom_m[r] = binomial(m, static_cast<unsigned>(r));

  std::vector<BigInt> out(c.size());
  out[0] = -c[0];
  for (std::size_t i = 1; i < c.size(); ++i) {
    BigInt acc = 0;
    for (std::size_t k = i + 1; k < c.size(); ++k) acc += c[k] * binom_m[k - i];
    out[i] = std::move(acc);
  }
  return IntegralPolynomial::from_binomial(std::move(out));
}

bool essentially_distinct(const IntegralPolynomial& p, const IntegralPolynomial& q) {
  return (p - q).degree() >= 1;
}

Classification classify(const IntegralPolynomial& p, const IntegralPolynomial& q) {
  Classification out;
  out.degree = p.degree();
  out.is_constant = p.is_constant();
  out.essentially_distinct = essentially_distinct(p, q);
  out.zero_normalized = p - IntegralPolynomial::constant(p.eval(0));
  return out;
}

}  // namespace ipdyn
