#include "ipdyn/pet.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ipdyn/errors.hpp"

namespace ipdyn {

GammaPolynomial step1_reduce(const GammaPolynomial& f, const BigInt& m) {
  std::vector<IntegralPolynomial> exps;
  exps.reserve(f.generators());
  for (const auto& p : f.exponents()) exps.push_back(shift_diff(p, m));
  return GammaPolynomial(std::move(exps));
}

const GammaPolynomial& minimal_member(const PolySystem& system) {
  if (system.empty()) fail(ErrorCode::EmptySystem, "no minimal member in an empty system");
  // members() is sorted, so min_element's first hit is canonical.
  return *std::min_element(system.members().begin(), system.members().end(),
                           [](const auto& a, const auto& b) { return weight(a) < weight(b); });
}

bool is_base_system(const PolySystem& system) {
  return std::all_of(system.members().begin(), system.members().end(),
                     [](const auto& g) { return weight(g) == Weight{1, 1}; });
}

namespace {

GammaPolynomial reduce_member(const GammaPolynomial& g, const GammaPolynomial& f,
                              const BigInt& m) {
  std::vector<IntegralPolynomial> exps;
  exps.reserve(g.generators());
  for (std::size_t j = 1; j <= g.generators(); ++j) {
    // g(n+m) - g(m) - f(n) = shift_diff(g, m)(n) + g(n) - f(n)
    exps.push_back(shift_diff(g.exponent(j), m) + g.exponent(j) - f.exponent(j));
  }
  return GammaPolynomial(std::move(exps));
}

}  // namespace

PolySystem step2_reduce(const PolySystem& system, const GammaPolynomial& f,
                        std::span<const BigInt> shifts) {
  if (!system.contains(f)) {
    fail(ErrorCode::InvalidArgument, f.to_string() + " is not a member of " + system.to_string());
  }
  const Weight wf = weight(f);
  for (const auto& g : system.members()) {
    if (weight(g) < wf) {
      fail(ErrorCode::InvalidArgument, f.to_string() + " does not have minimal weight; " +
                                           g.to_string() + " is lighter");
    }
  }
  if (shifts.empty()) fail(ErrorCode::InvalidArgument, "step2_reduce needs at least one shift");
  std::set<BigInt> seen;
  for (const auto& m : shifts) {
    if (m == 0) fail(ErrorCode::InvalidArgument, "shifts must be nonzero");
    if (!seen.insert(m).second) {
      fail(ErrorCode::InvalidArgument, "shift " + m.str() + " repeated");
    }
  }

  // element -> index of the member that produced it
  std::map<GammaPolynomial, std::size_t> produced;
  const auto& members = system.members();
  for (std::size_t t = 0; t < members.size(); ++t) {
    for (const auto& m : shifts) {
      GammaPolynomial g = reduce_member(members[t], f, m);
      if (g.is_identity()) continue;
      auto [it, inserted] = produced.emplace(std::move(g), t);
      if (!inserted && it->second != t) {
        fail(ErrorCode::ShiftCollision,
             it->first.to_string() + " arises from both " + members[it->second].to_string() +
                 " and " + members[t].to_string());
      }
    }
  }
  std::vector<GammaPolynomial> out;
  out.reserve(produced.size());
  for (auto& [g, t] : produced) out.push_back(g);
  return PolySystem(std::move(out));
}

std::vector<BigInt> ShiftPolicy::shifts(std::size_t attempt) const {
  std::vector<BigInt> out;
  out.reserve(shifts_per_step);
  const BigInt step = static_cast<unsigned long long>(attempt + 1);
  for (std::size_t j = 1; j <= shifts_per_step; ++j) {
    out.push_back(step * static_cast<unsigned long long>(j));
  }
  return out;
}

std::vector<PetStep> pet_chain(const PolySystem& system, const ShiftPolicy& policy,
                               std::size_t max_steps) {
  if (policy.shifts_per_step == 0 || policy.max_attempts == 0) {
    fail(ErrorCode::InvalidArgument, "shift policy must supply at least one shift and attempt");
  }
  auto weights_of = [](const PolySystem& s) {
    return s.empty() ? WeightVector{} : weight_vector(s);
  };

  std::vector<PetStep> chain;
  PolySystem current = system;
  while (true) {
    PetStep step{current, weights_of(current), std::nullopt, {}, 0};
    if (is_base_system(current)) {
      chain.push_back(std::move(step));
      return chain;
    }
    if (chain.size() >= max_steps) {
      fail(ErrorCode::NonTermination, "no base system after " + std::to_string(max_steps) +
                                          " reductions starting from " + system.to_string());
    }
    const GammaPolynomial& f = minimal_member(current);
    std::optional<PolySystem> next;
    for (std::size_t attempt = 0; attempt < policy.max_attempts && !next; ++attempt) {
      auto shifts = policy.shifts(attempt);
      try {
        next = step2_reduce(current, f, shifts);
        step.shifts = std::move(shifts);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ShiftCollision) throw;
        ++step.collisions;
      }
    }
    if (!next) {
      fail(ErrorCode::ShiftCollision, "every shift attempt collided while reducing " +
                                          current.to_string());
    }
    if (compare(weights_of(*next), step.weights) != Precedence::Precedes) {
      fail(ErrorCode::InvalidArgument, "reduction of " + current.to_string() + " to " +
                                           next->to_string() + " did not decrease the weight vector");
    }
    step.f = f;
    chain.push_back(std::move(step));
    current = std::move(*next);
  }
}

}  // namespace ipdyn
