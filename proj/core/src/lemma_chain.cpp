#include <bit>
#include <cstdlib>

#include "ipdyn/dynamics.hpp"
#include "ipdyn/errors.hpp"

namespace ipdyn {

Lemma213Result lemma213_chain(const SubstitutionSystem& sys, std::span<const OpenSet> vs,
                              std::span<const GammaPolynomial> gs, const FSTruncation& fs,
                              std::size_t depth, std::int64_t window,
                              std::span<const std::int64_t> steps) {
  if (vs.empty() || vs.size() != gs.size()) {
    fail(ErrorCode::InvalidArgument, "need one Gamma-polynomial per open set, got " +
                                         std::to_string(gs.size()) + " and " +
                                         std::to_string(vs.size()));
  }
  if (window < 0) fail(ErrorCode::InvalidArgument, "window must be nonnegative");

  Lemma213Result result;
  std::vector<OpenSet> current(vs.begin(), vs.end());
  IndexSet previous = 0;
  for (std::size_t n = 0; n <= depth; ++n) {
    const auto level = static_cast<std::int64_t>(n);
    std::optional<ChainStep> found;
    for (IndexSet alpha = 1; alpha <= fs.size() && !found; ++alpha) {
      if (previous != 0 && !precedes_strictly(previous, alpha)) continue;
      const std::int64_t n_alpha = fs.sum(alpha);
      if ((n_alpha < 0 ? -n_alpha : n_alpha) <= level) continue;
      ChainStep step{alpha, n_alpha, {}, {}};
      bool ok = true;
      for (std::size_t i = 0; i < vs.size() && ok; ++i) {
        const std::int64_t s = shift_exponent(gs[i], n_alpha, steps) - level;
        if ((s < 0 ? -s : s) > window) {
          ok = false;
          break;
        }
        OpenSet next = current[i].meet(vs[i].shifted(s));
        ok = nonempty(sys, next);
        step.shifts.push_back(s);
        step.sets.push_back(std::move(next));
      }
      if (ok) found = std::move(step);
    }
    if (!found) {
      result.exhausted_at = n;
      break;
    }
    previous = found->alpha;
    current = found->sets;
    result.steps.push_back(std::move(*found));
  }
  return result;
}

ChainCheck verify_chain(const SubstitutionSystem& sys, std::span<const OpenSet> vs,
                        const Lemma213Result& chain) {
  ChainCheck check;
  auto report = [&](std::string what) {
    check.ok = false;
    check.failures.push_back(std::move(what));
  };
  for (std::size_t n = 0; n < chain.steps.size(); ++n) {
    const auto& step = chain.steps[n];
    if (step.sets.size() != vs.size() || step.shifts.size() != vs.size()) {
      report("step " + std::to_string(n) + " has the wrong number of sets");
      continue;
    }
    if (n > 0 && !precedes_strictly(chain.steps[n - 1].alpha, step.alpha)) {
      report("alpha at step " + std::to_string(n) + " does not follow the previous one");
    }
    if (std::abs(step.n_alpha) <= static_cast<std::int64_t>(n)) {
      report("|n_alpha| <= " + std::to_string(n) + " at step " + std::to_string(n));
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
      const OpenSet& here = step.sets[i];
      const OpenSet& before = n == 0 ? vs[i] : chain.steps[n - 1].sets[i];
      const std::string tag = "V" + std::to_string(i + 1) + "^(" + std::to_string(n) + ")";
      if (!nonempty(sys, here)) report(tag + " is empty");
      if (!is_subset(sys, here, before)) report(tag + " is not inside its predecessor");
      for (std::size_t j = 0; j <= n; ++j) {
        // T^s A inside V  <=>  A inside T^{-s} V
        const std::int64_t s = chain.steps[j].shifts[i];
        if (!is_subset(sys, here, vs[i].shifted(s))) {
          report("T^" + std::to_string(s) + " " + tag + " is not inside V" + std::to_string(i + 1));
        }
      }
    }
  }
  return check;
}

}  // namespace ipdyn
