#include <algorithm>
#include <utility>

#include "ipdyn/dynamics.hpp"
#include "ipdyn/errors.hpp"

namespace ipdyn {

bool ReturnSet::contains(std::int64_t n) const {
  return std::binary_search(members.begin(), members.end(), n);
}

namespace {

using Placement = std::pair<std::int64_t, const OpenSet*>;  // (shift, set)

void check_window(std::int64_t window) {
  if (window < 0) fail(ErrorCode::InvalidArgument, "window must be nonnegative");
}

std::int64_t narrow(const BigInt& v, std::int64_t n) {
  auto out = to_int64(v);
  if (!out) {
    fail(ErrorCode::WindowTooLarge, "shift at n=" + std::to_string(n) + " overflows 64 bits");
  }
  return *out;
}

/// Coordinates touched by U together with every shifted V.
std::int64_t joint_span(const OpenSet& u, std::span<const Placement> placed) {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool any = false;
  auto widen = [&](const OpenSet& s, std::int64_t shift) {
    if (auto e = s.extent()) {
      lo = any ? std::min(lo, e->first + shift) : e->first + shift;
      hi = any ? std::max(hi, e->second + shift) : e->second + shift;
      any = true;
    }
  };
  widen(u, 0);
  for (const auto& [shift, set] : placed) widen(*set, shift);
  return any ? hi - lo + 1 : 0;
}

void check_feasible(const SubstitutionSystem& sys, const OpenSet& u,
                    std::span<const Placement> placed, std::int64_t n) {
  const std::int64_t span = joint_span(u, placed);
  if (span > static_cast<std::int64_t>(sys.length())) {
    fail(ErrorCode::WindowTooLarge, "query at n=" + std::to_string(n) + " spans " +
                                        std::to_string(span) +
                                        " coordinates; the language bound is " +
                                        std::to_string(sys.length()));
  }
}

bool joint_nonempty(const SubstitutionSystem& sys, const OpenSet& u,
                    std::span<const Placement> placed) {
  OpenSet acc = u;
  for (const auto& [shift, set] : placed) {
    acc = acc.meet(set->shifted(shift));
    if (acc.is_none()) return false;
  }
  return nonempty(sys, acc);
}

std::string describe_sets(const OpenSet& u, std::span<const OpenSet> vs) {
  std::string out = "U=" + u.to_string();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out += "; V" + std::to_string(i + 1) + "=" + vs[i].to_string();
  }
  return out;
}

}  // namespace

ReturnSet return_set(const SubstitutionSystem& sys, const OpenSet& u, const OpenSet& v,
                     std::int64_t window) {
  check_window(window);
  for (std::int64_t n = -window; n <= window; ++n) {
    const Placement placed[] = {{n, &v}};
    check_feasible(sys, u, placed, n);
  }
  ReturnSet out;
  out.window = window;
  out.provenance = "N(U,V) on " + sys.describe() + "; U=" + u.to_string() + "; V=" + v.to_string();
  for (std::int64_t n = -window; n <= window; ++n) {
    const Placement placed[] = {{n, &v}};
    if (joint_nonempty(sys, u, placed)) out.members.push_back(n);
  }
  return out;
}

void check_polynomial_hypotheses(std::span<const IntegralPolynomial> polys) {
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_constant()) {
      fail(ErrorCode::HypothesisViolation,
           "p" + std::to_string(i + 1) + " = " + polys[i].to_string() + " is constant");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!essentially_distinct(polys[i], polys[j])) {
        fail(ErrorCode::HypothesisViolation,
             "p" + std::to_string(i + 1) + " - p" + std::to_string(j + 1) + " = " +
                 arith(polys[i], polys[j], PolyOp::Sub).to_string() + " is constant");
      }
    }
  }
}

ReturnSet poly_return_set(const SubstitutionSystem& sys, const OpenSet& u,
                          std::span<const OpenSet> vs, std::span<const IntegralPolynomial> polys,
                          std::int64_t window) {
  check_window(window);
  if (vs.size() != polys.size() || vs.empty()) {
    fail(ErrorCode::InvalidArgument, "need one polynomial per set V_i, got " +
                                         std::to_string(polys.size()) + " polynomials and " +
                                         std::to_string(vs.size()) + " sets");
  }
  check_polynomial_hypotheses(polys);

  std::vector<std::vector<Placement>> rows;
  rows.reserve(static_cast<std::size_t>(2 * window + 1));
  for (std::int64_t n = -window; n <= window; ++n) {
    std::vector<Placement> placed;
    for (std::size_t i = 0; i < polys.size(); ++i) {
      placed.emplace_back(narrow(polys[i](BigInt(n)), n), &vs[i]);
    }
    check_feasible(sys, u, placed, n);
    rows.push_back(std::move(placed));
  }

  ReturnSet out;
  out.window = window;
  out.provenance = "polynomial return set on " + sys.describe() + "; " + describe_sets(u, vs);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    out.provenance += "; p" + std::to_string(i + 1) + "=" + polys[i].to_string();
  }
  for (std::int64_t n = -window; n <= window; ++n) {
    if (joint_nonempty(sys, u, rows[static_cast<std::size_t>(n + window)])) {
      out.members.push_back(n);
    }
  }
  return out;
}

ReturnSet product_return_set(std::span<const ProductComponent> components, std::int64_t window) {
  check_window(window);
  if (components.empty()) fail(ErrorCode::InvalidArgument, "a product needs components");
  for (const auto& c : components) {
    if (!c.system) fail(ErrorCode::InvalidArgument, "product component without a system");
    if (c.power == 0) fail(ErrorCode::ZeroPower, "component power must be nonzero");
    for (std::int64_t n = -window; n <= window; ++n) {
      const Placement placed[] = {{c.power * n, &c.v}};
      check_feasible(*c.system, c.u, placed, n);
    }
  }
  ReturnSet out;
  out.window = window;
  out.provenance = "product of " + std::to_string(components.size()) + " components";
  for (const auto& c : components) {
    out.provenance += "; [T^" + std::to_string(c.power) + " on " + c.system->describe() +
                      "; U=" + c.u.to_string() + "; V=" + c.v.to_string() + "]";
  }
  for (std::int64_t n = -window; n <= window; ++n) {
    const bool all = std::all_of(components.begin(), components.end(), [&](const auto& c) {
      const Placement placed[] = {{c.power * n, &c.v}};
      return joint_nonempty(*c.system, c.u, placed);
    });
    if (all) out.members.push_back(n);
  }
  return out;
}

ReturnSet power_return_set(const SubstitutionSystem& sys, std::int64_t k, const OpenSet& u,
                           const OpenSet& v, std::int64_t window) {
  if (k == 0) fail(ErrorCode::ZeroPower, "power k must be nonzero");
  check_window(window);
  for (std::int64_t n = -window; n <= window; ++n) {
    const Placement placed[] = {{k * n, &v}};
    check_feasible(sys, u, placed, n);
  }
  ReturnSet out;
  out.window = window;
  out.provenance = "N(U,V) for T^" + std::to_string(k) + " on " + sys.describe() +
                   "; U=" + u.to_string() + "; V=" + v.to_string();
  for (std::int64_t n = -window; n <= window; ++n) {
    const Placement placed[] = {{k * n, &v}};
    if (joint_nonempty(sys, u, placed)) out.members.push_back(n);
  }
  return out;
}

std::int64_t shift_exponent(const GammaPolynomial& g, std::int64_t m,
                            std::span<const std::int64_t> steps) {
  const auto powers = g.at(BigInt(m));
  BigInt total = 0;
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const std::int64_t step = j < steps.size() ? steps[j] : 1;
    total += powers[j] * step;
  }
  return narrow(total, m);
}

std::optional<RecurrenceWitness> recurrence_search(const SubstitutionSystem& sys,
                                                   std::span<const GammaPolynomial> gs,
                                                   std::size_t ell, std::int64_t n_lo,
                                                   std::int64_t n_hi,
                                                   std::span<const std::int64_t> steps) {
  if (ell == 0) fail(ErrorCode::InvalidArgument, "agreement length must be positive");
  if (n_lo > n_hi) fail(ErrorCode::InvalidArgument, "empty range for n");
  const auto len = static_cast<std::int64_t>(ell);

  struct Row {
    std::int64_t n;
    std::vector<std::int64_t> shifts;
    std::int64_t lo;
    std::int64_t span;
  };
  std::vector<Row> rows;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    if (n == 0) continue;
    Row row{n, {}, 0, 0};
    std::int64_t hi = len - 1;
    for (const auto& g : gs) {
      const std::int64_t s = shift_exponent(g, n, steps);
      row.shifts.push_back(s);
      row.lo = std::min(row.lo, s);
      hi = std::max(hi, s + len - 1);
    }
    row.span = hi - row.lo + 1;
    if (row.span > static_cast<std::int64_t>(sys.length())) {
      fail(ErrorCode::WindowTooLarge, "recurrence at n=" + std::to_string(n) + " spans " +
                                          std::to_string(row.span) +
                                          " coordinates; the language bound is " +
                                          std::to_string(sys.length()));
    }
    rows.push_back(std::move(row));
  }

  for (const auto& row : rows) {
    for (const auto& w : sys.words()) {
      // word[c - lo] is coordinate c of the point.
      bool ok = true;
      for (std::int64_t s : row.shifts) {
        for (std::int64_t c = 0; c < len && ok; ++c) {
          ok = w[static_cast<std::size_t>(c - row.lo)] == w[static_cast<std::size_t>(c + s - row.lo)];
        }
        if (!ok) break;
      }
      if (ok) {
        return RecurrenceWitness{row.n, row.shifts, w.substr(0, static_cast<std::size_t>(row.span)),
                                 row.lo};
      }
    }
  }
  return std::nullopt;
}

}  // namespace ipdyn
