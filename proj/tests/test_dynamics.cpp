#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "ipdyn/dynamics.hpp"
#include "ipdyn/errors.hpp"
#include "ipdyn/rotation.hpp"
#include "test_support.hpp"

using namespace ipdyn;
using testing::uniform;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::InvalidArgument;
}

const SubstitutionSystem& chacon() {
  static const auto sys = SubstitutionSystem::build(chacon_rules(), 256);
  return sys;
}

IntegralPolynomial P(const char* text) { return parse_polynomial(text); }

/// n in [-w, w] such that some position of the orbit text carries u and,
/// n places later, v.
std::vector<std::int64_t> orbit_return_set(const std::string& text, const std::string& u,
                                           const std::string& v, std::int64_t w) {
  std::vector<std::int64_t> out;
  const auto len = static_cast<std::int64_t>(text.size());
  for (std::int64_t n = -w; n <= w; ++n) {
    for (std::int64_t i = 0; i < len; ++i) {
      const std::int64_t j = i + n;
      if (j < 0 || i + static_cast<std::int64_t>(u.size()) > len ||
          j + static_cast<std::int64_t>(v.size()) > len) {
        continue;
      }
      if (text.compare(static_cast<std::size_t>(i), u.size(), u) == 0 &&
          text.compare(static_cast<std::size_t>(j), v.size(), v) == 0) {
        out.push_back(n);
        break;
      }
    }
  }
  return out;
}

std::vector<std::int64_t> intersect(const std::vector<std::int64_t>& a,
                                    const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string random_word(const SubstitutionSystem& sys, std::size_t len) {
  const auto words = sys.language(len);
  return words[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(words.size()) - 1))];
}

}  // namespace

TEST_CASE("patterns and open sets") {
  const auto p = Pattern::cylinder("0010").meet(Pattern::cylinder("1", 5));
  REQUIRE(p);
  CHECK(p->span() == 6);
  CHECK(p->to_string() == "0010@0 1@5");
  CHECK(Pattern{}.to_string() == "*");
  CHECK_FALSE(Pattern::cylinder("0").meet(Pattern::cylinder("1")));
  CHECK(Pattern::cylinder("01", 2).shifted(3) == Pattern::cylinder("01", 5));
  CHECK(OpenSet::cylinder("0").meet(OpenSet::cylinder("1")).is_none());
  CHECK(OpenSet::whole().meet(OpenSet::cylinder("0")) == OpenSet::cylinder("0"));
  CHECK(OpenSet::whole().join(OpenSet::cylinder("0")) == OpenSet::whole());
  CHECK_FALSE(OpenSet::whole().extent());
}

TEST_CASE("nonemptiness and inclusion on Chacon") {
  const auto& sys = chacon();
  CHECK(nonempty(sys, OpenSet::cylinder("0010")));
  CHECK_FALSE(nonempty(sys, OpenSet::cylinder("11")));
  CHECK_FALSE(nonempty(sys, OpenSet::cylinder("1").meet(OpenSet::cylinder("1", 1))));
  CHECK(nonempty(sys, OpenSet::whole()));
  CHECK_FALSE(nonempty(sys, OpenSet::none()));
  CHECK(is_subset(sys, OpenSet::cylinder("00"), OpenSet::cylinder("0")));
  CHECK_FALSE(is_subset(sys, OpenSet::cylinder("0"), OpenSet::cylinder("00")));
  // after 1 comes 0
  CHECK(is_subset(sys, OpenSet::cylinder("1"), OpenSet::cylinder("0", 1)));
  CHECK(is_subset(sys, OpenSet::cylinder("0"),
                  OpenSet::cylinder("00").join(OpenSet::cylinder("01"))));
  CHECK(code_of([&] { admits(sys, Pattern::cylinder("0").meet(Pattern::cylinder("0", 300)).value()); }) ==
        ErrorCode::WindowTooLarge);
}

TEST_CASE("return set of the whole space is the whole window") {
  const auto rs = return_set(chacon(), OpenSet::whole(), OpenSet::whole(), 50);
  CHECK(rs.members.size() == 101);
  CHECK(rs.members.front() == -50);
  CHECK_FALSE(rs.provenance.empty());
}

TEST_CASE("return sets match the orbit text") {
  const auto& sys = chacon();
  const auto& text = sys.orbit_texts().front();
  for (const auto& [u, v] : std::vector<std::pair<std::string, std::string>>{
           {"0", "0"}, {"1", "1"}, {"0010", "1"}, {"11", "0"}, {"101", "0001"}}) {
    const auto rs = return_set(sys, OpenSet::cylinder(u), OpenSet::cylinder(v), 100);
    CHECK(rs.members == orbit_return_set(text, u, v, 100));
  }
  for (int i = 0; i < 20; ++i) {
    const auto u = random_word(sys, static_cast<std::size_t>(uniform(1, 6)));
    const auto v = random_word(sys, static_cast<std::size_t>(uniform(1, 6)));
    const auto rs = return_set(sys, OpenSet::cylinder(u), OpenSet::cylinder(v), 60);
    REQUIRE(rs.members == orbit_return_set(text, u, v, 60));
  }
}

TEST_CASE("disjoint union: no return between components") {
  const auto sys = SubstitutionSystem::build(parse_rules("a->a, b->b", "ab"), 64);
  const auto rs = return_set(sys, OpenSet::cylinder("a"), OpenSet::cylinder("b"), 30);
  CHECK(rs.empty());
  CHECK(return_set(sys, OpenSet::cylinder("a"), OpenSet::cylinder("a"), 30).members.size() == 61);
}

TEST_CASE("symmetry and monotonicity") {
  const auto& sys = chacon();
  for (int i = 0; i < 20; ++i) {
    const auto u = random_word(sys, static_cast<std::size_t>(uniform(1, 5)));
    const auto v = random_word(sys, static_cast<std::size_t>(uniform(1, 5)));
    const auto uv = return_set(sys, OpenSet::cylinder(u), OpenSet::cylinder(v), 50);
    const auto vu = return_set(sys, OpenSet::cylinder(v), OpenSet::cylinder(u), 50);
    for (std::int64_t n = -50; n <= 50; ++n) REQUIRE(uv.contains(n) == vu.contains(-n));

    // a longer word inside u gives a smaller set
    const auto longer = random_word(sys, u.size() + 2);
    const auto sub = return_set(sys, OpenSet::cylinder(longer), OpenSet::cylinder(v), 50);
    const auto base = return_set(sys, OpenSet::cylinder(longer.substr(0, u.size())),
                                 OpenSet::cylinder(v), 50);
    for (auto n : sub.members) REQUIRE(base.contains(n));
  }
}

TEST_CASE("polynomial return sets") {
  const auto& sys = chacon();
  const auto u = OpenSet::cylinder("0");
  const auto v = OpenSet::cylinder("1");
  const std::vector<OpenSet> one{v};
  const std::vector<IntegralPolynomial> lin{P("n")};
  CHECK(poly_return_set(sys, u, one, lin, 80).members == return_set(sys, u, v, 80).members);

  // n, 2n against the orbit text
  const auto& text = sys.orbit_texts().front();
  const std::vector<OpenSet> vs{OpenSet::cylinder("0"), OpenSet::cylinder("1")};
  const std::vector<IntegralPolynomial> ps{P("n"), P("2n")};
  const auto rs = poly_return_set(sys, OpenSet::cylinder("0"), vs, ps, 60);
  std::vector<std::int64_t> expected;
  for (std::int64_t n = -60; n <= 60; ++n) {
    const std::int64_t lo = std::min<std::int64_t>({0, n, 2 * n});
    for (std::size_t i = static_cast<std::size_t>(-lo); i + 2 * 60 + 1 < text.size(); ++i) {
      const auto at = [&](std::int64_t k) { return text[static_cast<std::size_t>(static_cast<std::int64_t>(i) + k)]; };
      if (at(0) == '0' && at(n) == '0' && at(2 * n) == '1') {
        expected.push_back(n);
        break;
      }
    }
  }
  CHECK(rs.members == expected);

  // quadratic exponent needs a long enough language
  const std::vector<IntegralPolynomial> sq{P("n^2")};
  CHECK(code_of([&] { poly_return_set(sys, u, one, sq, 20); }) == ErrorCode::WindowTooLarge);
}

TEST_CASE("polynomial hypotheses") {
  const std::vector<IntegralPolynomial> constant{P("n"), P("3")};
  const std::vector<IntegralPolynomial> same_slope{P("n^2"), P("n^2 + 5")};
  const std::vector<IntegralPolynomial> fine{P("n"), P("2n"), P("n^2")};
  CHECK(code_of([&] { check_polynomial_hypotheses(constant); }) == ErrorCode::HypothesisViolation);
  CHECK(code_of([&] { check_polynomial_hypotheses(same_slope); }) ==
        ErrorCode::HypothesisViolation);
  check_polynomial_hypotheses(fine);
  const std::vector<OpenSet> vs{OpenSet::whole(), OpenSet::whole()};
  CHECK(code_of([&] { poly_return_set(chacon(), OpenSet::whole(), vs, same_slope, 5); }) ==
        ErrorCode::HypothesisViolation);
}

TEST_CASE("powers") {
  const auto& sys = chacon();
  const auto u = OpenSet::cylinder("01");
  const auto v = OpenSet::cylinder("1");
  const auto base = return_set(sys, u, v, 100);
  const auto mirror = power_return_set(sys, -1, u, v, 50);
  const auto same = power_return_set(sys, 1, u, v, 50);
  const auto doubled = power_return_set(sys, 2, u, v, 50);
  for (std::int64_t n = -50; n <= 50; ++n) {
    CHECK(same.contains(n) == base.contains(n));
    CHECK(mirror.contains(n) == base.contains(-n));
    CHECK(doubled.contains(n) == base.contains(2 * n));
  }
  CHECK(code_of([&] { power_return_set(sys, 0, u, v, 10); }) == ErrorCode::ZeroPower);
}

TEST_CASE("product systems are evaluated jointly") {
  const auto& a = chacon();
  const auto b = SubstitutionSystem::build(fibonacci_rules(), 128);
  const std::vector<ProductComponent> comps{
      {&a, 1, OpenSet::cylinder("0"), OpenSet::cylinder("1")},
      {&b, 2, OpenSet::cylinder("1"), OpenSet::cylinder("1")}};
  const auto joint = product_return_set(comps, 40);
  const auto left = return_set(a, OpenSet::cylinder("0"), OpenSet::cylinder("1"), 40);
  const auto right = power_return_set(b, 2, OpenSet::cylinder("1"), OpenSet::cylinder("1"), 40);
  CHECK(joint.members == intersect(left.members, right.members));
  CHECK_FALSE(joint.empty());
}

TEST_CASE("shift exponents") {
  const auto g = parse_gamma_polynomial("T1^{n^2}*T2^{n}");
  CHECK(shift_exponent(g, 3) == 12);
  const std::vector<std::int64_t> steps{2, 5};
  CHECK(shift_exponent(g, 3, steps) == 33);
  const std::vector<std::int64_t> partial{4};
  CHECK(shift_exponent(g, -2, partial) == 14);
  CHECK(code_of([&] { shift_exponent(parse_gamma_polynomial("T^{n^3}"), 10000000); }) ==
        ErrorCode::WindowTooLarge);
}

TEST_CASE("recurrence search matches the orbit text") {
  const auto& sys = chacon();
  const auto& text = sys.orbit_texts().front();
  const std::vector<GammaPolynomial> gs{parse_gamma_polynomial("T^{n}")};
  for (std::size_t ell : {1, 3, 5, 8}) {
    const auto w = recurrence_search(sys, gs, ell, 1, 100);
    std::int64_t expected = 0;
    for (std::int64_t n = 1; n <= 100 && !expected; ++n) {
      for (std::size_t i = 0; i + static_cast<std::size_t>(n) + ell <= text.size(); ++i) {
        if (text.compare(i, ell, text, i + static_cast<std::size_t>(n), ell) == 0) {
          expected = n;
          break;
        }
      }
    }
    REQUIRE(w);
    CHECK(w->n == expected);
    CHECK(w->shifts == std::vector<std::int64_t>{expected});
    CHECK(sys.admissible(w->word));
  }
  const std::vector<GammaPolynomial> two{parse_gamma_polynomial("T^{n}"),
                                         parse_gamma_polynomial("T^{2n}")};
  const auto w2 = recurrence_search(sys, two, 2, 1, 60);
  REQUIRE(w2);
  CHECK(w2->shifts == std::vector<std::int64_t>{w2->n, 2 * w2->n});
  CHECK(code_of([&] { recurrence_search(sys, gs, 2, 1, 1000); }) == ErrorCode::WindowTooLarge);
}

TEST_CASE("descending chain on the whole space stays whole") {
  const auto& sys = chacon();
  const std::vector<OpenSet> vs{OpenSet::whole()};
  const std::vector<GammaPolynomial> gs{parse_gamma_polynomial("T^{n}")};
  const auto fs = FSTruncation::enumerate({1, 2, 4, 8});
  const auto chain = lemma213_chain(sys, vs, gs, fs, 3, 50);
  REQUIRE(chain.complete());
  REQUIRE(chain.steps.size() == 4);
  for (const auto& step : chain.steps) CHECK(step.sets.front() == OpenSet::whole());
  CHECK(chain.steps[3].n_alpha == 8);
  CHECK(verify_chain(sys, vs, chain).ok);
}

TEST_CASE("descending chain on Chacon") {
  const auto sys = SubstitutionSystem::build(chacon_rules(), 601);
  const std::vector<OpenSet> vs{OpenSet::cylinder("0"), OpenSet::cylinder("0")};
  const std::vector<GammaPolynomial> gs{parse_gamma_polynomial("T^{n}"),
                                        parse_gamma_polynomial("T^{n}")};
  const auto fs = FSTruncation::enumerate({1, 3, 9, 27, 81});
  const auto chain = lemma213_chain(sys, vs, gs, fs, 3, 300);
  REQUIRE(chain.complete());
  REQUIRE(chain.steps.size() == 4);
  const std::vector<std::int64_t> n_alpha{1, 3, 9, 27};
  const std::vector<std::int64_t> shift{1, 2, 7, 24};
  for (std::size_t n = 0; n < 4; ++n) {
    const auto& step = chain.steps[n];
    CHECK(step.n_alpha == n_alpha[n]);
    CHECK(step.shifts == std::vector<std::int64_t>{shift[n], shift[n]});
    CHECK(std::abs(step.n_alpha) > static_cast<std::int64_t>(n));
    if (n) CHECK(precedes_strictly(chain.steps[n - 1].alpha, step.alpha));
    // every point of V^(n) returns to V under each earlier shift
    for (std::size_t j = 0; j <= n; ++j) {
      CHECK(is_subset(sys, step.sets[0], vs[0].shifted(chain.steps[j].shifts[0])));
    }
    CHECK(nonempty(sys, step.sets[0]));
  }
  const auto check = verify_chain(sys, vs, chain);
  CHECK(check.ok);
  CHECK(check.failures.empty());

  // a tampered chain is caught
  auto bad = chain;
  bad.steps[2].sets[0] = OpenSet::cylinder("0");
  CHECK_FALSE(verify_chain(sys, vs, bad).ok);
}

TEST_CASE("descending chain runs out of witnesses") {
  const auto sys = SubstitutionSystem::build(chacon_rules(), 601);
  const std::vector<OpenSet> vs{OpenSet::cylinder("0")};
  const std::vector<GammaPolynomial> gs{parse_gamma_polynomial("T^{n}")};
  const auto three = lemma213_chain(sys, vs, gs, FSTruncation::enumerate({1, 3, 9}), 3, 300);
  CHECK_FALSE(three.complete());
  CHECK(*three.exhausted_at == 3);
  CHECK(three.steps.size() == 3);

  const auto narrow =
      lemma213_chain(sys, vs, gs, FSTruncation::enumerate({1, 3, 9, 27, 81}), 3, 5);
  CHECK(*narrow.exhausted_at == 2);
  CHECK(verify_chain(sys, vs, narrow).ok);
}

TEST_CASE("rotation probes against an exhaustive scan") {
  const Rotation rot(1000, 618);
  CHECK(Rotation(1000, 1618).p() == 618);
  CHECK(code_of([] { Rotation(0, 1); }) == ErrorCode::BadModulus);
  const Arc u{0, 100};
  const std::vector<Arc> vs{Arc{0, 100}, Arc{500, 100}};
  const std::vector<IntegralPolynomial> ps{P("n"), P("2n")};
  const auto rs = rotation_probe(rot, u, vs, ps, 500);
  for (std::int64_t n = -500; n <= 500; ++n) {
    bool hit = false;
    for (std::int64_t x = 0; x < 100 && !hit; ++x) {
      const auto y1 = ((x + n * 618) % 1000 + 1000) % 1000;
      const auto y2 = ((x + 2 * n * 618) % 1000 + 1000) % 1000;
      hit = y1 < 100 && y2 >= 500 && y2 < 600;
    }
    REQUIRE(rs.contains(n) == hit);
  }
  CHECK(Arc{990, 20}.contains(5, 1000));
  CHECK_FALSE(Arc{990, 20}.contains(10, 1000));
  CHECK(Arc::whole(7).contains(6, 7));
}
