#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ipdyn/gammapoly.hpp"

namespace ipdyn {

/// h(m, .) = f(m)^{-1} f(m + .) f(.)^{-1}: every exponent goes through
/// shift_diff. Linear f gives the identity; otherwise the weight drops for
/// m != 0.
GammaPolynomial step1_reduce(const GammaPolynomial& f, const BigInt& m);

/// g_{t,j}(n) = g_t(m_j)^{-1} g_t(n + m_j) f(n)^{-1} for every member g_t and
/// shift m_j, with identities removed.
///
/// A member with linear exponents yields the same element for every shift;
/// those repeats collapse. Any coincidence between elements coming from two
/// different members throws ShiftCollision so the caller can pick other
/// shifts.
///
/// Preconditions (checked): f is a member of minimal weight, shifts are
/// nonzero and pairwise distinct.
PolySystem step2_reduce(const PolySystem& system, const GammaPolynomial& f,
                        std::span<const BigInt> shifts);

/// Member of minimal weight; ties go to the canonically smallest member.
const GammaPolynomial& minimal_member(const PolySystem& system);

/// Empty, or every member has weight (1,1). Distinct members of weight (1,1)
/// are automatically pairwise inequivalent.
bool is_base_system(const PolySystem& system);

/// Shifts for a reduction step. Attempt a (0-based) uses the arithmetic
/// progression (a+1), 2(a+1), ..., count(a+1): consecutive integers first,
/// spread further apart on every retry.
struct ShiftPolicy {
  std::size_t shifts_per_step = 1;
  std::size_t max_attempts = 64;

  std::vector<BigInt> shifts(std::size_t attempt) const;
};

struct PetStep {
  PolySystem system;
  WeightVector weights;             // empty entries for the empty system
  std::optional<GammaPolynomial> f;  // absent on the final step
  std::vector<BigInt> shifts;       // shifts that produced the next system
  std::size_t collisions = 0;       // retries needed for this step
};

/// Applies step2_reduce with the minimal-weight member until the system is
/// a base system. Every consecutive pair strictly decreases under the weight
/// vector order; a violation throws InvalidArgument. More than `max_steps`
/// reductions throws NonTermination; an exhausted shift policy throws
/// ShiftCollision.
std::vector<PetStep> pet_chain(const PolySystem& system, const ShiftPolicy& policy = {},
                               std::size_t max_steps = 10000);

}  // namespace ipdyn
