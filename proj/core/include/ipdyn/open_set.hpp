#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipdyn/subshift.hpp"

namespace ipdyn {

/// Points whose coordinates at the given positions carry the given symbols.
/// The empty pattern is the whole space.
struct Pattern {
  std::map<std::int64_t, char> cells;

  /// Cylinder of `word` starting at coordinate `offset`.
  static Pattern cylinder(std::string_view word, std::int64_t offset = 0);

  bool empty() const noexcept { return cells.empty(); }
  std::int64_t min_pos() const { return cells.begin()->first; }
  std::int64_t max_pos() const { return cells.rbegin()->first; }
  /// Number of coordinates from the first to the last fixed cell.
  std::int64_t span() const { return cells.empty() ? 0 : max_pos() - min_pos() + 1; }

  /// T^{-s} of the pattern: every cell moves by +s.
  Pattern shifted(std::int64_t s) const;
  /// Conjunction; nullopt when two cells disagree.
  std::optional<Pattern> meet(const Pattern& other) const;

  /// "0@0 1@3" style listing, or "*" for the whole space.
  std::string to_string() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

/// Finite union of patterns; the basic open sets of a subshift.
class OpenSet {
 public:
  OpenSet() = default;
  explicit OpenSet(std::vector<Pattern> patterns);

  static OpenSet whole() { return OpenSet({Pattern{}}); }
  static OpenSet none() { return OpenSet(); }
  static OpenSet cylinder(std::string_view word, std::int64_t offset = 0);

  const std::vector<Pattern>& patterns() const noexcept { return patterns_; }
  /// Formally empty (no patterns). Use nonempty() for the semantic test.
  bool is_none() const noexcept { return patterns_.empty(); }

  /// T^{-s} A.
  OpenSet shifted(std::int64_t s) const;
  OpenSet meet(const OpenSet& other) const;
  OpenSet join(const OpenSet& other) const;

  /// Smallest and largest fixed coordinate over all patterns; nullopt when
  /// no pattern fixes anything.
  std::optional<std::pair<std::int64_t, std::int64_t>> extent() const;

  std::string to_string() const;

  friend bool operator==(const OpenSet&, const OpenSet&) = default;

 private:
  std::vector<Pattern> patterns_;  // sorted, distinct
};

/// Some admissible word carries the pattern. Throws WindowTooLarge when its
/// span exceeds the language bound.
bool admits(const SubstitutionSystem& sys, const Pattern& pattern);
bool nonempty(const SubstitutionSystem& sys, const OpenSet& set);

/// A is a subset of B at window scale: every admissible word on the joint
/// span that carries a pattern of A also carries a pattern of B.
bool is_subset(const SubstitutionSystem& sys, const OpenSet& a, const OpenSet& b);

}  // namespace ipdyn
