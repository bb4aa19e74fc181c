#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ipdyn/intpoly.hpp"

namespace ipdyn {

/// g(n) = T_1^{p_1(n)} ... T_d^{p_d(n)} over the free abelian group on d
/// formal generators. Every exponent vanishes at 0.
class GammaPolynomial {
 public:
  /// Identity element on d generators.
  explicit GammaPolynomial(std::size_t generators);
  /// Throws NotInP0 if some exponent has a nonzero constant term, and
  /// InvalidArgument for d = 0.
  explicit GammaPolynomial(std::vector<IntegralPolynomial> exponents);

  /// T_j^{p} on d generators; j is 1-based.
  static GammaPolynomial generator_power(std::size_t generators, std::size_t j,
                                         IntegralPolynomial p);

  std::size_t generators() const noexcept { return exps_.size(); }
  /// 1-based, matching the T_j display.
  const IntegralPolynomial& exponent(std::size_t j) const { return exps_.at(j - 1); }
  const std::vector<IntegralPolynomial>& exponents() const noexcept { return exps_; }

  bool is_identity() const;
  /// g(m+n) = g(m) g(n) for all m, n, i.e. every exponent is linear.
  bool is_homomorphism() const;
  /// Some exponent is nonconstant.
  bool depends_on_n() const;

  GammaPolynomial inverse() const;
  /// Exponent vector at n; the concrete group element g(n) in Z^d.
  std::vector<BigInt> at(const BigInt& n) const;

  friend GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b);
  friend bool operator==(const GammaPolynomial&, const GammaPolynomial&) = default;
  friend std::strong_ordering operator<=>(const GammaPolynomial& a, const GammaPolynomial& b);

  /// "T1^{n^2} * T2^{3n}"; the identity prints as "e".
  std::string to_string() const;

 private:
  std::vector<IntegralPolynomial> exps_;
};

enum class GroupOp { Product, Inverse, Identity };

/// Product uses both operands; Inverse and Identity use g only.
/// Throws DimensionMismatch when a product mixes generator counts.
GammaPolynomial group_op(const GammaPolynomial& g, const GammaPolynomial& h, GroupOp op);

struct Weight {
  int level = 0;   // largest generator index with nonzero exponent
  int degree = 0;  // degree of that exponent

  friend auto operator<=>(const Weight&, const Weight&) = default;
  std::string to_string() const;
};

/// The identity weighs (0,0).
Weight weight(const GammaPolynomial& g);

/// Same weight (l, k) and, for l != 0, equal monomial leading coefficients
/// of the level-l exponents.
bool equivalent(const GammaPolynomial& g, const GammaPolynomial& h);

/// Key identifying the equivalence class of g: its weight plus the leading
/// coefficient at that level.
std::pair<Weight, Rational> equivalence_key(const GammaPolynomial& g);

/// A finite set of pairwise-distinct Gamma-polynomials over a common d,
/// kept sorted so that iteration order is canonical.
class PolySystem {
 public:
  PolySystem() = default;
  /// Throws DuplicateMember or DimensionMismatch.
  explicit PolySystem(std::vector<GammaPolynomial> members);

  const std::vector<GammaPolynomial>& members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  /// Generator count; 0 for the empty system.
  std::size_t generators() const noexcept;
  bool contains(const GammaPolynomial& g) const;

  friend bool operator==(const PolySystem&, const PolySystem&) = default;

  /// "{T1^{n} ; T1^{2n}}"
  std::string to_string() const;

 private:
  std::vector<GammaPolynomial> members_;
};

/// Ascending weights, each with the number of equivalence classes carrying it.
struct WeightVector {
  std::vector<std::pair<std::size_t, Weight>> entries;

  std::size_t multiplicity(const Weight& w) const;
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  /// "(3(1,1), 1(1,2))"
  std::string to_string() const;
};

/// Throws EmptySystem.
WeightVector weight_vector(const PolySystem& system);

enum class Precedence { Precedes, Equal, Succeeds };

/// a precedes b iff at the greatest weight where the multiplicities differ,
/// a has fewer classes. Weights absent from a vector count as zero, which
/// makes the order total.
Precedence compare(const WeightVector& a, const WeightVector& b);

std::string_view to_string(Precedence p);

/// "T1^{n^2} * T2^{3n}", "T^{n^2}" (same as T1), "e". The generator count
/// is at least the largest index mentioned; pass `generators` to widen.
GammaPolynomial parse_gamma_polynomial(std::string_view text, std::size_t generators = 0);

/// Semicolon-separated members, optionally wrapped in braces. All members
/// are widened to the largest generator index used anywhere.
PolySystem parse_system(std::string_view text);

}  // namespace ipdyn
