#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipdyn/gammapoly.hpp"
#include "ipdyn/intpoly.hpp"
#include "ipdyn/ipsets.hpp"
#include "ipdyn/open_set.hpp"
#include "ipdyn/subshift.hpp"

namespace ipdyn {

/// Members of a return-time set inside [-W, W], ascending.
struct ReturnSet {
  std::int64_t window = 0;
  std::vector<std::int64_t> members;
  std::string provenance;

  bool contains(std::int64_t n) const;
  bool empty() const noexcept { return members.empty(); }
  WindowSet as_window_set() const { return WindowSet(-window, window, members); }
};

/// {n in [-W, W] : U meets T^{-n} V}.
ReturnSet return_set(const SubstitutionSystem& sys, const OpenSet& u, const OpenSet& v,
                     std::int64_t window);

/// Throws HypothesisViolation unless every p_i is nonconstant and every
/// difference p_i - p_j is nonconstant.
void check_polynomial_hypotheses(std::span<const IntegralPolynomial> polys);

/// {n in [-W, W] : U meets T^{-p_1(n)} V_1 and ... and T^{-p_d(n)} V_d}.
/// Hypotheses and feasibility over the whole window are checked before any
/// membership is computed.
ReturnSet poly_return_set(const SubstitutionSystem& sys, const OpenSet& u,
                          std::span<const OpenSet> vs, std::span<const IntegralPolynomial> polys,
                          std::int64_t window);

/// One factor of a product system: the transformation T^power on `system`.
struct ProductComponent {
  const SubstitutionSystem* system = nullptr;
  std::int64_t power = 1;
  OpenSet u;
  OpenSet v;
};

/// {n : every component has U_i meeting T_i^{-n} V_i}, evaluated jointly.
ReturnSet product_return_set(std::span<const ProductComponent> components, std::int64_t window);

/// {n in [-W, W] : U meets T^{-kn} V}. Throws ZeroPower for k = 0.
ReturnSet power_return_set(const SubstitutionSystem& sys, std::int64_t k, const OpenSet& u,
                           const OpenSet& v, std::int64_t window);

/// Exponent of the shift realising g(m) when generator T_j acts as
/// T^{steps[j-1]}. Missing steps default to 1. Throws WindowTooLarge when
/// the result leaves the 64-bit range.
std::int64_t shift_exponent(const GammaPolynomial& g, std::int64_t m,
                            std::span<const std::int64_t> steps = {});

struct RecurrenceWitness {
  std::int64_t n = 0;
  std::vector<std::int64_t> shifts;  // shift exponent of each g_i(n)
  std::string word;                  // admissible word carrying the point
  std::int64_t origin = 0;           // coordinate of word[0]
};

/// First n != 0 in [n_lo, n_hi] with a point x such that x and g_i(n)x
/// agree on coordinates 0..ell-1 for every i. Feasibility of every shift in
/// the range is checked up front (WindowTooLarge).
std::optional<RecurrenceWitness> recurrence_search(const SubstitutionSystem& sys,
                                                   std::span<const GammaPolynomial> gs,
                                                   std::size_t ell, std::int64_t n_lo,
                                                   std::int64_t n_hi,
                                                   std::span<const std::int64_t> steps = {});

struct ChainStep {
  IndexSet alpha = 0;
  std::int64_t n_alpha = 0;
  std::vector<std::int64_t> shifts;  // per i: exponent of g_i(n_alpha) T^{-n}
  std::vector<OpenSet> sets;         // per i: V_i^{(n)}
};

struct Lemma213Result {
  std::vector<ChainStep> steps;
  /// Depth at which no admissible alpha was found; absent when the chain
  /// reached the requested depth.
  std::optional<std::size_t> exhausted_at;

  bool complete() const noexcept { return !exhausted_at.has_value(); }
};

/// Builds V_i^{(n)} = V_i^{(n-1)} meet (g_i(n_alpha_n) T^{-n})^{-1} V_i for
/// n = 0..depth, with V_i^{(-1)} = V_i. alpha_n is the first subset of the
/// truncation (in mask order) lying strictly after alpha_{n-1}, with
/// |n_alpha| > n, every shift at most `window` in absolute value and every
/// new set nonempty. A failed search stops the chain and records the depth.
Lemma213Result lemma213_chain(const SubstitutionSystem& sys, std::span<const OpenSet> vs,
                              std::span<const GammaPolynomial> gs, const FSTruncation& fs,
                              std::size_t depth, std::int64_t window,
                              std::span<const std::int64_t> steps = {});

struct ChainCheck {
  bool ok = true;
  std::vector<std::string> failures;
};

/// Rechecks a chain with the inclusion test: V_i^{(n)} inside V_i^{(n-1)},
/// nonempty, and T^{s_{i,j}} V_i^{(n)} inside V_i for all j <= n.
ChainCheck verify_chain(const SubstitutionSystem& sys, std::span<const OpenSet> vs,
                        const Lemma213Result& chain);

}  // namespace ipdyn
