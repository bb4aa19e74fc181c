#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipdyn/gammapoly.hpp"
#include "ipdyn/intpoly.hpp"
#include "ipdyn/ipsets.hpp"
#include "ipdyn/rotation.hpp"
#include "ipdyn/subshift.hpp"

namespace ipdyn {

enum class SystemKind { Substitution, Rotation };

struct SystemSpec {
  SystemKind kind = SystemKind::Substitution;
  SubstitutionRules rules = chacon_rules();
  /// Language bound; absent means "as long as the queries need".
  std::optional<std::size_t> length;
  std::size_t max_length = SubstitutionSystem::kDefaultMaxLength;
  std::int64_t q = 0;
  std::int64_t p = 0;
  /// T_j acts as T^{generator_steps[j-1]}; missing entries are 1.
  std::vector<std::int64_t> generator_steps;
};

struct SetSpec {
  enum class Kind { Whole, Word, Arc };
  Kind kind = Kind::Whole;
  std::string word;
  Arc arc;

  std::string to_string() const;
};

struct QuerySpec {
  std::string u = "U";
  std::vector<std::string> vs;
  std::vector<std::string> polynomials;
  std::vector<std::string> gammas;
  std::int64_t window = 100;
  std::int64_t power = 1;
  std::size_t depth = 3;
  std::int64_t chain_window = 300;
  std::string truncation;  // FS truncation used by lemma213
};

struct PetSpec {
  std::string system;  // Gamma-polynomial system text
  std::size_t shifts_per_step = 1;
  std::size_t max_steps = 10000;
};

struct HindmanSpec {
  int n = 5;
  int r = 2;
  int depth = 2;
  bool all = true;
  Coloring coloring;  // used when all = false
  std::uint64_t budget = 1ULL << 24;
};

struct DensitySpec {
  std::string set = "evens";  // catalog name, or csv:PATH
  std::int64_t lo = 1;
  std::int64_t hi = 1000;
  std::vector<std::int64_t> lengths = {10, 100, 1000};
  StructureThresholds thresholds;
};

/// Validated experiment description. Maps keep names in lexicographic
/// order so every report lists them the same way.
struct ExperimentConfig {
  SystemSpec system;
  std::map<std::string, SetSpec> sets;
  std::map<std::string, IntegralPolynomial> polynomials;
  std::map<std::string, GammaPolynomial> gammas;
  std::map<std::string, std::vector<std::int64_t>> truncations;
  QuerySpec query;
  PetSpec pet;
  HindmanSpec hindman;
  DensitySpec density;
  /// Directory relative paths (csv:PATH) are resolved against.
  std::string base_dir;
};

/// "[section]" headers, "key = value" lines, '#' comments. Throws
/// ParseError for malformed lines and ValidationError for bad values or
/// dangling references; messages name the section, key and token.
ExperimentConfig parse_config(std::string_view text, std::string base_dir = "");

/// Reads and parses a file; IoError when it cannot be read.
ExperimentConfig load_config(const std::string& path);

/// Comma separated integers, e.g. "1,3,9". ParseError names the token.
std::vector<std::int64_t> parse_int_list(std::string_view text);

/// "0/1/1/0", "0,1,1,0" or "0110".
Coloring parse_coloring(std::string_view text);

}  // namespace ipdyn
