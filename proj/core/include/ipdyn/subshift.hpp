#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ipdyn {

/// symbol -> image word, plus the seed symbols whose orbits define the
/// language.
struct SubstitutionRules {
  std::map<char, std::string> rules;
  std::string seeds;

  std::string to_string() const;  // "0->0010, 1->1; seeds=0"
};

/// "0->0010, 1->1" (commas or whitespace between rules). Seeds default to
/// the symbol of the first rule. Throws BadRules for erasing rules, images
/// using unknown symbols, or seeds without a rule.
SubstitutionRules parse_rules(std::string_view rules, std::string_view seeds = "");

SubstitutionRules chacon_rules();     // 0->0010, 1->1
SubstitutionRules fibonacci_rules();  // 0->01, 1->0

/// Finite-window model of the subshift generated by a substitution: all
/// factors of length L of sigma^k(seed) for k large enough that the factor
/// set has stopped growing. Seeds whose iterates never grow generate the
/// periodic point seed^infinity.
///
/// Shorter words are taken as prefixes of the length-L words, so every
/// admissible word extends to the right up to length L by construction.
class SubstitutionSystem {
 public:
  static constexpr std::size_t kDefaultMaxLength = 4096;

  /// Throws WindowTooLarge when length exceeds max_length, BadRules for
  /// degenerate rules.
  static SubstitutionSystem build(SubstitutionRules rules, std::size_t length,
                                  std::size_t max_length = kDefaultMaxLength);

  const SubstitutionRules& rules() const noexcept { return rules_; }
  /// Language bound L.
  std::size_t length() const noexcept { return length_; }
  /// Iterations of the substitution applied to the growing seeds.
  std::size_t depth() const noexcept { return depth_; }
  /// Distinct admissible words of length L, sorted.
  const std::vector<std::string>& words() const noexcept { return words_; }
  /// Orbit prefixes the language was read from, one per seed.
  const std::vector<std::string>& orbit_texts() const noexcept { return texts_; }

  /// Distinct admissible words of length len <= L, sorted. Throws
  /// WindowTooLarge beyond L.
  std::vector<std::string> language(std::size_t len) const;
  bool admissible(std::string_view word) const;

  std::string describe() const;

 private:
  SubstitutionRules rules_;
  std::size_t length_ = 0;
  std::size_t depth_ = 0;
  std::vector<std::string> texts_;
  std::vector<std::string> words_;
};

struct MinimalityReport {
  std::size_t ell = 0;
  std::size_t max_r = 0;
  bool passed = false;
  /// Smallest R <= max_r such that every admissible ell-word occurs in every
  /// admissible R-word.
  std::size_t witness_r = 0;
};

/// Window analogue of minimality. Throws WindowTooLarge when max_r > L and
/// InvalidArgument when ell > max_r.
MinimalityReport minimality_probe(const SubstitutionSystem& sys, std::size_t ell,
                                  std::size_t max_r);

}  // namespace ipdyn
