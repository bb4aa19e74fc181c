#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ipdyn/dynamics.hpp"
#include "ipdyn/intpoly.hpp"

namespace ipdyn {

/// x -> x + p on Z_q. Never weakly mixing; minimal when gcd(p, q) = 1.
class Rotation {
 public:
  /// Throws BadModulus unless q >= 1. Any p is accepted; the control case
  /// 618 on Z_1000 has gcd 2.
  Rotation(std::int64_t q, std::int64_t p);

  std::int64_t q() const noexcept { return q_; }
  std::int64_t p() const noexcept { return p_; }
  std::int64_t apply(std::int64_t x, std::int64_t times = 1) const;

  std::string describe() const;

 private:
  std::int64_t q_;
  std::int64_t p_;
};

/// The residues start, start+1, ..., start+length-1 (mod q).
struct Arc {
  std::int64_t start = 0;
  std::int64_t length = 0;

  static Arc whole(std::int64_t q) { return Arc{0, q}; }
  bool contains(std::int64_t x, std::int64_t q) const;
  std::string to_string() const;
};

/// {n in [-W, W] : some x in U has x + p_i(n) p in V_i for every i}.
ReturnSet rotation_probe(const Rotation& rot, const Arc& u, std::span<const Arc> vs,
                         std::span<const IntegralPolynomial> polys, std::int64_t window);

}  // namespace ipdyn
