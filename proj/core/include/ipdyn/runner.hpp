#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ipdyn/config.hpp"
#include "ipdyn/report.hpp"

namespace ipdyn {

/// Command-line values that take precedence over the config.
struct Overrides {
  std::optional<std::int64_t> window;
  std::optional<std::size_t> depth;
  std::optional<std::vector<std::int64_t>> generators;
  std::optional<int> hindman_n;
  std::optional<int> hindman_r;
  bool hindman_all = false;
};

/// pet-trace, weights, fs, hindman, density, return-set, poly-return,
/// lemma213, mixing-report.
const std::vector<std::string>& subcommands();

/// Runs one subcommand. Module errors propagate as ipdyn::Error; a lemma213
/// chain that runs out of witnesses returns its partial report with status 3.
Report run(std::string_view subcommand, const ExperimentConfig& config,
           const Overrides& overrides = {});

}  // namespace ipdyn
