#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ipdyn/gammapoly.hpp"
#include "ipdyn/intpoly.hpp"

namespace testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x1b873593ULL);
  return gen;
}

inline std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng());
}

/// Random integer monomial coefficients a_0..a_deg with a_deg != 0.
inline std::vector<ipdyn::Rational> random_monomials(int deg, std::int64_t bound,
                                                     bool zero_constant = false) {
  std::vector<ipdyn::Rational> c(static_cast<std::size_t>(deg) + 1);
  for (int j = 0; j <= deg; ++j) c[static_cast<std::size_t>(j)] = uniform(-bound, bound);
  if (zero_constant) c[0] = 0;
  if (deg > 0 && c.back() == 0) c.back() = uniform(1, bound);
  return c;
}

inline ipdyn::IntegralPolynomial random_p0(int max_deg, std::int64_t bound) {
  const int deg = static_cast<int>(uniform(0, max_deg));
  if (deg == 0) return {};
  return ipdyn::IntegralPolynomial::from_monomials(random_monomials(deg, bound, true));
}

inline ipdyn::GammaPolynomial random_gamma(std::size_t d, int max_deg, std::int64_t bound) {
  std::vector<ipdyn::IntegralPolynomial> e;
  for (std::size_t j = 0; j < d; ++j) e.push_back(random_p0(max_deg, bound));
  return ipdyn::GammaPolynomial(std::move(e));
}

/// Direct monomial evaluation over the rationals.
inline ipdyn::Rational eval_monomials(const std::vector<ipdyn::Rational>& c, std::int64_t n) {
  ipdyn::Rational acc = 0;
  ipdyn::Rational power = 1;
  for (const auto& a : c) {
    acc += a * power;
    power *= n;
  }
  return acc;
}

}  // namespace testing
