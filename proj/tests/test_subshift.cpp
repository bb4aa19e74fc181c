#include <set>
#include <string>

#include "doctest.h"
#include "ipdyn/errors.hpp"
#include "ipdyn/subshift.hpp"

using namespace ipdyn;

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

/// Iterates the substitution directly and collects all factors.
std::set<std::string> brute_factors(const SubstitutionRules& r, std::size_t len,
                                    std::size_t iterations) {
  std::string w(1, r.seeds.front());
  for (std::size_t i = 0; i < iterations; ++i) {
    std::string next;
    for (char c : w) next += r.rules.at(c);
    w = next;
  }
  std::set<std::string> out;
  for (std::size_t i = 0; i + len <= w.size(); ++i) out.insert(w.substr(i, len));
  return out;
}

}  // namespace

TEST_CASE("rules parsing") {
  const auto r = parse_rules("0->0010, 1->1");
  CHECK(r.seeds == "0");
  CHECK(r.rules.at('0') == "0010");
  CHECK(r.to_string() == "0->0010, 1->1; seeds=0");
  CHECK(parse_rules("a->ab b->a", "b").seeds == "b");
  CHECK(code_of([] { parse_rules("0->, 1->1"); }) == ErrorCode::BadRules);
  CHECK(code_of([] { parse_rules("0->02, 1->1"); }) == ErrorCode::BadRules);
  CHECK(code_of([] { parse_rules("0->01, 1->0", "2"); }) == ErrorCode::BadRules);
  CHECK(code_of([] { parse_rules("0 01"); }) == ErrorCode::BadRules);
}

TEST_CASE("Chacon words") {
  const auto sys = SubstitutionSystem::build(chacon_rules(), 4);
  CHECK(sys.admissible("0010"));
  CHECK(sys.admissible("1"));
  CHECK_FALSE(sys.admissible("111"));
  CHECK_FALSE(sys.admissible("11"));
  CHECK(code_of([&] { (void)sys.admissible("00100"); }) == ErrorCode::WindowTooLarge);
  CHECK(code_of([&] { (void)sys.language(5); }) == ErrorCode::WindowTooLarge);
}

TEST_CASE("Chacon complexity is 2L - 1") {
  for (std::size_t len : {2, 3, 5, 10, 40, 100}) {
    const auto sys = SubstitutionSystem::build(chacon_rules(), len);
    CHECK(sys.words().size() == 2 * len - 1);
  }
  const auto sys = SubstitutionSystem::build(chacon_rules(), 64);
  for (std::size_t len = 2; len <= 64; ++len) CHECK(sys.language(len).size() == 2 * len - 1);
  CHECK(sys.language(1).size() == 2);
}

TEST_CASE("language agrees with direct iteration") {
  for (const auto& rules : {chacon_rules(), fibonacci_rules()}) {
    const auto sys = SubstitutionSystem::build(rules, 12);
    const auto brute = brute_factors(rules, 12, 9);
    CHECK(std::set<std::string>(sys.words().begin(), sys.words().end()) == brute);
  }
}

TEST_CASE("Fibonacci") {
  const auto sys = SubstitutionSystem::build(fibonacci_rules(), 8);
  CHECK_FALSE(sys.admissible("11"));
  CHECK(sys.admissible("0100101"));
  // Sturmian: L + 1 words of each length
  for (std::size_t len = 1; len <= 8; ++len) CHECK(sys.language(len).size() == len + 1);
}

TEST_CASE("constant substitution is periodic") {
  const auto sys = SubstitutionSystem::build(parse_rules("a->a"), 6);
  CHECK(sys.words() == std::vector<std::string>{"aaaaaa"});
  const auto two = SubstitutionSystem::build(parse_rules("a->ab, b->ab"), 6);
  CHECK(two.words() == std::vector<std::string>{"ababab", "bababa"});
}

TEST_CASE("build limits") {
  CHECK(code_of([] { SubstitutionSystem::build(chacon_rules(), 5000); }) ==
        ErrorCode::WindowTooLarge);
  CHECK(code_of([] { SubstitutionSystem::build(chacon_rules(), 50, 40); }) ==
        ErrorCode::WindowTooLarge);
  CHECK(code_of([] { SubstitutionSystem::build(chacon_rules(), 0); }) == ErrorCode::BadLength);
}

TEST_CASE("minimality probe") {
  const auto sys = SubstitutionSystem::build(chacon_rules(), 40);
  const auto rep = minimality_probe(sys, 2, 30);
  CHECK(rep.passed);
  CHECK(rep.witness_r <= 30);
  CHECK(rep.witness_r >= 2);

  const auto split = SubstitutionSystem::build(parse_rules("a->a, b->b", "ab"), 10);
  CHECK(split.words().size() == 2);
  CHECK_FALSE(minimality_probe(split, 1, 10).passed);

  CHECK(code_of([&] { minimality_probe(sys, 2, 41); }) == ErrorCode::WindowTooLarge);
  CHECK(code_of([&] { minimality_probe(sys, 5, 4); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("describe") {
  const auto sys = SubstitutionSystem::build(chacon_rules(), 10);
  CHECK(sys.describe().find("L=10") != std::string::npos);
}
