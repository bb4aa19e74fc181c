#include "ipdyn/rotation.hpp"

#include <algorithm>

#include "ipdyn/errors.hpp"

namespace ipdyn {
namespace {

std::int64_t mod(std::int64_t x, std::int64_t q) {
  const std::int64_t r = x % q;
  return r < 0 ? r + q : r;
}

}  // namespace

Rotation::Rotation(std::int64_t q, std::int64_t p) : q_(q), p_(p) {
  if (q < 1) fail(ErrorCode::BadModulus, "modulus q=" + std::to_string(q) + " must be positive");
  p_ = mod(p, q);
}

std::int64_t Rotation::apply(std::int64_t x, std::int64_t times) const {
  if (q_ < (std::int64_t{1} << 31)) return (mod(times, q_) * p_ + mod(x, q_)) % q_;
  const BigInt step = BigInt(mod(times, q_)) * p_ + mod(x, q_);
  return static_cast<std::int64_t>(step % q_);
}

std::string Rotation::describe() const {
  return "rotation x -> x + " + std::to_string(p_) + " mod " + std::to_string(q_);
}

bool Arc::contains(std::int64_t x, std::int64_t q) const {
  if (length >= q) return true;
  return mod(x - start, q) < length;
}

std::string Arc::to_string() const {
  return "[" + std::to_string(start) + ", " + std::to_string(start + length) + ")";
}

ReturnSet rotation_probe(const Rotation& rot, const Arc& u, std::span<const Arc> vs,
                         std::span<const IntegralPolynomial> polys, std::int64_t window) {
  if (window < 0) fail(ErrorCode::InvalidArgument, "window must be nonnegative");
  if (vs.size() != polys.size()) {
    fail(ErrorCode::InvalidArgument, "need one polynomial per arc V_i");
  }
  const std::int64_t q = rot.q();
  if (u.length < 0) fail(ErrorCode::InvalidArgument, "negative arc length");
  for (const auto& v : vs) {
    if (v.length < 0) fail(ErrorCode::InvalidArgument, "negative arc length");
  }

  ReturnSet out;
  out.window = window;
  out.provenance = rot.describe() + "; U=" + u.to_string();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out.provenance += "; V" + std::to_string(i + 1) + "=" + vs[i].to_string() + "; p" +
                      std::to_string(i + 1) + "=" + polys[i].to_string();
  }

  const std::int64_t u_len = std::min(u.length, q);
  std::vector<std::int64_t> times(polys.size());
  for (std::int64_t n = -window; n <= window; ++n) {
    // p_i(n) only matters mod q.
    for (std::size_t i = 0; i < polys.size(); ++i) {
      const BigInt r = polys[i](BigInt(n)) % q;
      times[i] = static_cast<std::int64_t>(r);
    }
    bool hit = false;
    for (std::int64_t k = 0; k < u_len && !hit; ++k) {
      const std::int64_t x = mod(u.start + k, q);
      hit = true;
      for (std::size_t i = 0; i < vs.size() && hit; ++i) {
        hit = vs[i].contains(rot.apply(x, times[i]), q);
      }
    }
    if (hit) out.members.push_back(n);
  }
  return out;
}

}  // namespace ipdyn
