// ipdyn: batch runner for the PET, IP-set and finite-window dynamics tools.
//
//   ipdyn return-set --config chacon.cfg --out results/
//   ipdyn hindman --N 5 --r 2 --depth 2 --all

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ipdyn/config.hpp"
#include "ipdyn/errors.hpp"
#include "ipdyn/report.hpp"
#include "ipdyn/runner.hpp"

namespace {

struct Options {
  std::string config;
  std::string out;
  std::optional<std::int64_t> window;
  std::optional<std::size_t> depth;
  std::string generators;
  std::optional<int> n;
  std::optional<int> r;
  bool all = false;
};

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d = {
      {"pet-trace", "PET-induction chain of the [pet] system"},
      {"weights", "weights and leading coefficients of the [pet] system"},
      {"fs", "finite sums of each configured truncation"},
      {"hindman", "exhaustive search for monochromatic finite sums"},
      {"density", "window Banach densities and gap structure of a set"},
      {"return-set", "N(U,V) over the window"},
      {"poly-return", "polynomial return set of U and V_1..V_d"},
      {"lemma213", "descending open-set chain with verified containments"},
      {"mixing-report", "polynomial return set tested against FS truncations"},
  };
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral polynomials, PET-induction, IP-sets and finite-window dynamics"};
  app.require_subcommand(1, 1);
  Options opt;
  for (const auto& name : ipdyn::subcommands()) {
    auto* sub = app.add_subcommand(name, descriptions().at(name));
    sub->add_option("--config", opt.config, "experiment config file");
    sub->add_option("--out", opt.out, "directory for <subcommand>.csv and .txt");
    sub->add_option("--window", opt.window, "window W (density: window length)");
    sub->add_option("--depth", opt.depth, "chain depth or FS depth");
    sub->add_option("--generators", opt.generators, "FS generators a,b,c");
    if (name == "hindman") {
      sub->add_option("--N", opt.n, "color {1..N}");
      sub->add_option("--r", opt.r, "number of colors");
      sub->add_flag("--all", opt.all, "check every coloring");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string subcommand = app.get_subcommands().front()->get_name();
  try {
    const ipdyn::ExperimentConfig config =
        opt.config.empty() ? ipdyn::parse_config("") : ipdyn::load_config(opt.config);
    ipdyn::Overrides overrides;
    overrides.window = opt.window;
    overrides.depth = opt.depth;
    if (!opt.generators.empty()) overrides.generators = ipdyn::parse_int_list(opt.generators);
    overrides.hindman_n = opt.n;
    overrides.hindman_r = opt.r;
    overrides.hindman_all = opt.all;

    const ipdyn::Report report = ipdyn::run(subcommand, config, overrides);
    std::optional<std::string> out;
    if (!opt.out.empty()) out = opt.out;
    ipdyn::emit_report(report, out, std::cout, std::cerr);
    return report.status;
  } catch (const ipdyn::Error& e) {
    std::cerr << "ipdyn " << subcommand << ": " << e.what() << "\n";
    return ipdyn::exit_status(e.code());
  } catch (const std::exception& e) {
    std::cerr << "ipdyn " << subcommand << ": " << e.what() << "\n";
    return 1;
  }
}
