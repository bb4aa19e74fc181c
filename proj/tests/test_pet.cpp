#include <vector>

#include "doctest.h"
#include "ipdyn/errors.hpp"
#include "ipdyn/pet.hpp"
#include "test_support.hpp"

using namespace ipdyn;
using testing::uniform;

namespace {

GammaPolynomial G(const char* text, std::size_t d = 0) { return parse_gamma_polynomial(text, d); }

std::vector<BigInt> shifts(std::initializer_list<long long> xs) {
  return std::vector<BigInt>(xs.begin(), xs.end());
}

/// g(n+m) g(m)^{-1} f(n)^{-1} evaluated pointwise from the exponents.
std::vector<BigInt> direct(const GammaPolynomial& g, const GammaPolynomial& f, long long m,
                           long long n) {
  std::vector<BigInt> out;
  for (std::size_t j = 1; j <= g.generators(); ++j) {
    out.push_back(g.exponent(j)(n + m) - g.exponent(j)(m) - f.exponent(j)(n));
  }
  return out;
}

PolySystem random_system() {
  const auto d = static_cast<std::size_t>(uniform(1, 2));
  const auto k = uniform(1, 4);
  std::vector<GammaPolynomial> members;
  for (int tries = 0; static_cast<long long>(members.size()) < k && tries < 100; ++tries) {
    auto g = testing::random_gamma(d, 3, 4);
    if (g.is_identity() || std::find(members.begin(), members.end(), g) != members.end()) continue;
    members.push_back(std::move(g));
  }
  return PolySystem(std::move(members));
}

}  // namespace

TEST_CASE("step1_reduce") {
  CHECK(step1_reduce(G("T^{n^2}"), 1) == G("T^{2n}"));
  CHECK(step1_reduce(G("T1^{3n}*T2^{-n}"), 7).is_identity());
  const auto f = G("T1^{n^2}*T2^{n}");
  const auto h = step1_reduce(f, 2);
  CHECK(h == G("T1^{4n}", 2));
  for (long long n = -5; n <= 5; ++n) {
    const auto v = h.at(n);
    for (std::size_t j = 1; j <= 2; ++j) {
      CHECK(v[j - 1] == f.exponent(j)(n + 2) - f.exponent(j)(2) - f.exponent(j)(n));
    }
  }
}

TEST_CASE("property: step 1 lowers the weight of non-homomorphisms") {
  for (int i = 0; i < 500; ++i) {
    const auto f = testing::random_gamma(static_cast<std::size_t>(uniform(1, 3)), 4, 10);
    if (f.is_homomorphism()) continue;
    long long m = 0;
    while (m == 0) m = uniform(-6, 6);
    REQUIRE(weight(step1_reduce(f, m)) < weight(f));
  }
}

TEST_CASE("step2_reduce on {T^{n^2}, T^{2n^2}}") {
  const PolySystem s = parse_system("T^{n^2}; T^{2n^2}");
  for (long long m : {1, 2, 3}) {
    const auto out = step2_reduce(s, G("T^{n^2}"), shifts({m}));
    const auto expected = PolySystem({G(("T^{" + std::to_string(2 * m) + "n}").c_str()),
                                      G(("T^{n^2 + " + std::to_string(4 * m) + "n}").c_str())});
    CHECK(out == expected);
    CHECK(compare(weight_vector(out), weight_vector(s)) == Precedence::Precedes);
  }
}

TEST_CASE("step2_reduce with a common quadratic term gives linear elements") {
  for (long long a : {1, -2, 3}) {
    std::vector<GammaPolynomial> members;
    for (long long b : {0, 1, 5}) {
      members.push_back(GammaPolynomial(
          {IntegralPolynomial::from_monomials(std::vector<Rational>{0, b, a})}));
    }
    const PolySystem s(members);
    const auto out = step2_reduce(s, members.front(), shifts({4}));
    for (const auto& g : out.members()) CHECK(weight(g) == Weight{1, 1});
  }
}

TEST_CASE("step2_reduce of a single linear member is empty") {
  const PolySystem s = parse_system("T1^{5n}");
  CHECK(step2_reduce(s, G("T1^{5n}"), shifts({1, 2})).empty());
}

TEST_CASE("step2_reduce checks its preconditions") {
  const PolySystem s = parse_system("T^{n}; T^{n^2}");
  CHECK_THROWS_AS(step2_reduce(s, G("T^{n^2}"), shifts({1})), Error);  // not minimal
  CHECK_THROWS_AS(step2_reduce(s, G("T^{n^3}"), shifts({1})), Error);  // not a member
  CHECK_THROWS_AS(step2_reduce(s, G("T^{n}"), shifts({0})), Error);
  CHECK_THROWS_AS(step2_reduce(s, G("T^{n}"), shifts({2, 2})), Error);
}

TEST_CASE("step2_reduce reports collisions between members") {
  // From T^{n^2}: n^2 + 2mn - n^2 ... choose members whose reductions meet.
  // g1 = n^2 + n, g2 = n^2 + 3n, f = n^2 + n: g1 -> n^2+... use shifts m and m'
  // with 2m + 1 - 1 = 2m' + 3 - 1, i.e. m = 2, m' = 1.
  const PolySystem s = parse_system("T^{n^2 + n}; T^{n^2 + 3n}");
  try {
    step2_reduce(s, G("T^{n^2 + n}"), shifts({1, 2}));
    FAIL("expected ShiftCollision");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ShiftCollision);
  }
}

TEST_CASE("step2_reduce agrees with pointwise evaluation") {
  for (int i = 0; i < 200; ++i) {
    const PolySystem s = random_system();
    const auto& f = minimal_member(s);
    const long long m = uniform(1, 5);
    PolySystem out;
    try {
      out = step2_reduce(s, f, shifts({m}));
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::ShiftCollision);
      continue;
    }
    for (const auto& g : s.members()) {
      std::vector<IntegralPolynomial> e;
      for (std::size_t j = 1; j <= g.generators(); ++j) {
        e.push_back(shift_diff(g.exponent(j), m) + g.exponent(j) - f.exponent(j));
      }
      const GammaPolynomial r(e);
      if (r.is_identity()) continue;
      REQUIRE(out.contains(r));
      for (long long n = -4; n <= 4; ++n) REQUIRE(r.at(n) == direct(g, f, m, n));
    }
  }
}

TEST_CASE("pet_chain on {T^{n^2}, T^{2n^2}}") {
  const auto chain = pet_chain(parse_system("T^{n^2}; T^{2n^2}"));
  REQUIRE(chain.size() >= 2);
  CHECK(chain[1].system == parse_system("T^{2n}; T^{n^2 + 4n}"));
  CHECK(is_base_system(chain.back().system));
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    CHECK(compare(chain[i + 1].weights, chain[i].weights) == Precedence::Precedes);
  }
}

TEST_CASE("pet_chain of a linear system is a single step") {
  const auto chain = pet_chain(parse_system("T1^{n}; T1^{2n}; T1^{-3n}"));
  CHECK(chain.size() == 1);
  CHECK_FALSE(chain.front().f.has_value());
}

TEST_CASE("property: descent and termination on random systems") {
  int collision_free = 0;
  for (int i = 0; i < 500; ++i) {
    const PolySystem s = random_system();
    const auto chain = pet_chain(s);
    REQUIRE(chain.size() <= 10001);
    REQUIRE(is_base_system(chain.back().system));
    for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
      REQUIRE(compare(chain[k + 1].weights, chain[k].weights) == Precedence::Precedes);
      if (chain[k].collisions == 0) ++collision_free;
    }
  }
  CHECK(collision_free > 0);
}

TEST_CASE("pet_chain enforces its step bound") {
  CHECK_THROWS_AS(pet_chain(parse_system("T^{n^3}; T^{2n^3}; T^{n^2}"), {}, 1), Error);
}
