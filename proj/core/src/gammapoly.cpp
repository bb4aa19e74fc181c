#include "ipdyn/gammapoly.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ipdyn/errors.hpp"

namespace ipdyn {

namespace {

void require_same_d(const GammaPolynomial& a, const GammaPolynomial& b) {
  if (a.generators() != b.generators()) {
    fail(ErrorCode::DimensionMismatch, a.to_string() + " has " +
                                           std::to_string(a.generators()) + " generators, " +
                                           b.to_string() + " has " +
                                           std::to_string(b.generators()));
  }
}

}  // namespace

GammaPolynomial::GammaPolynomial(std::size_t generators) : exps_(generators) {
  if (generators == 0) fail(ErrorCode::InvalidArgument, "a Gamma-polynomial needs d >= 1");
}

GammaPolynomial::GammaPolynomial(std::vector<IntegralPolynomial> exponents)
    : exps_(std::move(exponents)) {
  if (exps_.empty()) fail(ErrorCode::InvalidArgument, "a Gamma-polynomial needs d >= 1");
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j].eval(0) != 0) {
      fail(ErrorCode::NotInP0, "exponent of T" + std::to_string(j + 1) + " is " +
                                   exps_[j].to_string() + ", which does not vanish at 0");
    }
  }
}

GammaPolynomial GammaPolynomial::generator_power(std::size_t generators, std::size_t j,
                                                 IntegralPolynomial p) {
  if (j == 0 || j > generators) {
    fail(ErrorCode::IndexOutOfRange,
         "generator T" + std::to_string(j) + " out of range 1.." + std::to_string(generators));
  }
  std::vector<IntegralPolynomial> exps(generators);
  exps[j - 1] = std::move(p);
  return GammaPolynomial(std::move(exps));
}

bool GammaPolynomial::is_identity() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const auto& p) { return p.is_zero(); });
}

bool GammaPolynomial::is_homomorphism() const {
  return std::all_of(exps_.begin(), exps_.end(), [](const auto& p) { return p.degree() <= 1; });
}

bool GammaPolynomial::depends_on_n() const {
  return std::any_of(exps_.begin(), exps_.end(), [](const auto& p) { return !p.is_constant(); });
}

GammaPolynomial GammaPolynomial::inverse() const {
  GammaPolynomial out = *this;
  for (auto& p : out.exps_) p = -p;
  return out;
}

std::vector<BigInt> GammaPolynomial::at(const BigInt& n) const {
  std::vector<BigInt> out;
  out.reserve(exps_.size());
  for (const auto& p : exps_) out.push_back(p.eval(n));
  return out;
}

GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b) {
  require_same_d(a, b);
  GammaPolynomial out = a;
  for (std::size_t j = 0; j < out.exps_.size(); ++j) out.exps_[j] += b.exps_[j];
  return out;
}

std::strong_ordering operator<=>(const GammaPolynomial& a, const GammaPolynomial& b) {
  if (a.exps_.size() != b.exps_.size()) return a.exps_.size() <=> b.exps_.size();
  for (std::size_t j = a.exps_.size(); j-- > 0;) {
    if (auto c = a.exps_[j] <=> b.exps_[j]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string GammaPolynomial::to_string() const {
  std::string out;
  for (std::size_t j = 0; j < exps_.size(); ++j) {
    if (exps_[j].is_zero()) continue;
    if (!out.empty()) out += " * ";
    out += "T" + std::to_string(j + 1) + "^{" + exps_[j].to_string() + "}";
  }
  return out.empty() ? "e" : out;
}

GammaPolynomial group_op(const GammaPolynomial& g, const GammaPolynomial& h, GroupOp op) {
  switch (op) {
    case GroupOp::Product: return g * h;
    case GroupOp::Inverse: return g.inverse();
    case GroupOp::Identity: return GammaPolynomial(g.generators());
  }
  return g;
}

std::string Weight::to_string() const {
  return "(" + std::to_string(level) + "," + std::to_string(degree) + ")";
}

Weight weight(const GammaPolynomial& g) {
  const auto& exps = g.exponents();
  for (std::size_t j = exps.size(); j-- > 0;) {
    if (!exps[j].is_zero()) return Weight{static_cast<int>(j + 1), exps[j].degree()};
  }
  return Weight{0, 0};
}

std::pair<Weight, Rational> equivalence_key(const GammaPolynomial& g) {
  const Weight w = weight(g);
  if (w.level == 0) return {w, Rational(0)};
  return {w, g.exponent(static_cast<std::size_t>(w.level)).leading_coefficient()};
}

bool equivalent(const GammaPolynomial& g, const GammaPolynomial& h) {
  require_same_d(g, h);
  return equivalence_key(g) == equivalence_key(h);
}

PolySystem::PolySystem(std::vector<GammaPolynomial> members) : members_(std::move(members)) {
  for (std::size_t i = 1; i < members_.size(); ++i) require_same_d(members_[0], members_[i]);
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    fail(ErrorCode::DuplicateMember, dup->to_string() + " appears twice");
  }
}

std::size_t PolySystem::generators() const noexcept {
  return members_.empty() ? 0 : members_.front().generators();
}

bool PolySystem::contains(const GammaPolynomial& g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

std::string PolySystem::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += "; ";
    out += members_[i].to_string();
  }
  return out + "}";
}

std::size_t WeightVector::multiplicity(const Weight& w) const {
  for (const auto& [count, weight] : entries) {
    if (weight == w) return count;
  }
  return 0;
}

std::string WeightVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(entries[i].first) + entries[i].second.to_string();
  }
  return out + ")";
}

WeightVector weight_vector(const PolySystem& system) {
  if (system.empty()) fail(ErrorCode::EmptySystem, "weight vector of an empty system");
  std::set<std::pair<Weight, Rational>> classes;
  for (const auto& g : system.members()) classes.insert(equivalence_key(g));
  std::map<Weight, std::size_t> counts;
  for (const auto& [w, lead] : classes) ++counts[w];
  WeightVector out;
  for (const auto& [w, count] : counts) out.entries.emplace_back(count, w);
  return out;
}

Precedence compare(const WeightVector& a, const WeightVector& b) {
  std::set<Weight> weights;
  for (const auto& e : a.entries) weights.insert(e.second);
  for (const auto& e : b.entries) weights.insert(e.second);
  for (auto it = weights.rbegin(); it != weights.rend(); ++it) {
    const std::size_t ma = a.multiplicity(*it);
    const std::size_t mb = b.multiplicity(*it);
    if (ma < mb) return Precedence::Precedes;
    if (ma > mb) return Precedence::Succeeds;
  }
  return Precedence::Equal;
}

std::string_view to_string(Precedence p) {
  switch (p) {
    case Precedence::Precedes: return "precedes";
    case Precedence::Equal: return "equal";
    case Precedence::Succeeds: return "succeeds";
  }
  return "?";
}

}  // namespace ipdyn
