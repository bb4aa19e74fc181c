#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ipdyn/numeric.hpp"

namespace ipdyn {

/// A polynomial taking integer values at every integer, stored in the
/// binomial basis: p(n) = sum_j c_j * C(n, j). Integer-valuedness is then
/// exactly "every c_j is an integer", so membership is structural.
///
/// Canonical form keeps no trailing zeros; the zero polynomial has no
/// coefficients and degree -1.
class IntegralPolynomial {
 public:
  IntegralPolynomial() = default;

  static IntegralPolynomial from_binomial(std::vector<BigInt> coeffs);

  /// Converts monomial coefficients a_0..a_k (p(n) = sum a_j n^j). Throws
  /// NotIntegralPolynomial unless every binomial coefficient is integral.
  static IntegralPolynomial from_monomials(std::span<const Rational> coeffs);

  static IntegralPolynomial constant(const BigInt& value);
  /// c * n^k.
  static IntegralPolynomial monomial(unsigned k, const BigInt& c = 1);

  const std::vector<BigInt>& binomial_coeffs() const noexcept { return coeffs_; }
  std::vector<Rational> monomial_coeffs() const;

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return degree() <= 0; }

  /// Leading coefficient in the monomial basis; zero for the zero polynomial.
  Rational leading_coefficient() const;

  BigInt eval(const BigInt& n) const;
  BigInt operator()(const BigInt& n) const { return eval(n); }

  IntegralPolynomial operator-() const;
  IntegralPolynomial& operator+=(const IntegralPolynomial& other);
  IntegralPolynomial& operator-=(const IntegralPolynomial& other);
  IntegralPolynomial& operator*=(const BigInt& scalar);

  friend IntegralPolynomial operator+(IntegralPolynomial a, const IntegralPolynomial& b) {
    return a += b;
  }
  friend IntegralPolynomial operator-(IntegralPolynomial a, const IntegralPolynomial& b) {
    return a -= b;
  }
  friend IntegralPolynomial operator*(IntegralPolynomial a, const BigInt& s) { return a *= s; }
  friend IntegralPolynomial operator*(const BigInt& s, IntegralPolynomial a) { return a *= s; }

  friend bool operator==(const IntegralPolynomial&, const IntegralPolynomial&) = default;
  /// Arbitrary but total: degree first, then binomial coefficients from the top.
  friend std::strong_ordering operator<=>(const IntegralPolynomial& a,
                                          const IntegralPolynomial& b);

  /// Monomial form in the parser's syntax, e.g. "n^2 + 3n", "1/2n^2 - 1/2n", "0".
  std::string to_string() const;

 private:
  explicit IntegralPolynomial(std::vector<BigInt> coeffs);
  void normalize();

  std::vector<BigInt> coeffs_;
};

enum class PolyOp { Add, Sub, Neg };

/// add/sub use both operands; neg ignores q.
IntegralPolynomial arith(const IntegralPolynomial& p, const IntegralPolynomial& q, PolyOp op);

/// q_m(n) = p(n + m) - p(m) - p(n). Computed directly in the binomial basis
/// through Vandermonde's identity.
IntegralPolynomial shift_diff(const IntegralPolynomial& p, const BigInt& m);

struct Classification {
  int degree = -1;              // of p
  bool is_constant = true;      // of p
  bool essentially_distinct = false;  // degree(p - q) >= 1
  IntegralPolynomial zero_normalized;  // p - p(0)
};

Classification classify(const IntegralPolynomial& p, const IntegralPolynomial& q);

bool essentially_distinct(const IntegralPolynomial& p, const IntegralPolynomial& q);

/// Generalised binomial coefficient C(n, k) for any integer n.
BigInt binomial(const BigInt& n, unsigned k);

/// Parses monomial syntax over the variable n: integer or fraction
/// coefficients, optional '*', '^' exponents and a trailing "/d" divisor,
/// e.g. "n^2 + 3n", "1/2n^2 - 1/2n", "n/2". Errors name the offending token.
IntegralPolynomial parse_polynomial(std::string_view text);

}  // namespace ipdyn
