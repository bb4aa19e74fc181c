#include <algorithm>

#include "ipdyn/errors.hpp"
#include "ipdyn/ipsets.hpp"

namespace ipdyn {
namespace {

class FsSearch {
 public:
  FsSearch(const Coloring& coloring, int depth, bool strict)
      : coloring_(coloring), n_(static_cast<std::int64_t>(coloring.size())), depth_(depth),
        strict_(strict) {}

  std::optional<MonochromaticFS> run() {
    for (std::int64_t a = 1; a <= n_; ++a) {
      cell_ = color(a);
      gens_ = {a};
      sums_ = {a};
      if (extend()) return MonochromaticFS{cell_, gens_};
    }
    return std::nullopt;
  }

 private:
  int color(std::int64_t v) const { return coloring_[static_cast<std::size_t>(v - 1)]; }

  bool extend() {
    if (static_cast<int>(gens_.size()) == depth_) return true;
    const std::int64_t from = gens_.back() + (strict_ ? 1 : 0);
    for (std::int64_t a = from; a <= n_; ++a) {
      // New sums are a and a + every existing sum; all must stay in the cell.
      if (color(a) != cell_) continue;
      bool ok = true;
      for (std::int64_t s : sums_) {
        const std::int64_t t = s + a;
        if (t > n_ || color(t) != cell_) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      const std::size_t old = sums_.size();
      sums_.push_back(a);
      for (std::size_t i = 0; i < old; ++i) sums_.push_back(sums_[i] + a);
      gens_.push_back(a);
      if (extend()) return true;
      gens_.pop_back();
      sums_.resize(old);
    }
    return false;
  }

  const Coloring& coloring_;
  std::int64_t n_;
  int depth_;
  bool strict_;
  int cell_ = 0;
  std::vector<std::int64_t> gens_;
  std::vector<std::int64_t> sums_;
};

}  // namespace

std::optional<MonochromaticFS> find_monochromatic_fs(const Coloring& coloring, int depth) {
  if (depth < 1) fail(ErrorCode::InvalidArgument, "depth must be at least 1");
  if (auto hit = FsSearch(coloring, depth, true).run()) return hit;
  return FsSearch(coloring, depth, false).run();
}

HindmanCertificate hindman_all(int n, int r, int depth, std::uint64_t budget) {
  if (n < 1 || r < 1) fail(ErrorCode::InvalidArgument, "need N >= 1 and r >= 1");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > budget / static_cast<std::uint64_t>(r)) {
      fail(ErrorCode::BudgetExceeded, std::to_string(r) + "^" + std::to_string(n) +
                                          " colorings exceed the budget of " +
                                          std::to_string(budget));
    }
    total *= static_cast<std::uint64_t>(r);
  }

  HindmanCertificate cert;
  // Odometer with element 1 as the most significant digit walks colorings
  // in lexicographic order, so the first failure is the least one.
  Coloring coloring(static_cast<std::size_t>(n), 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    ++cert.colorings_checked;
    if (!find_monochromatic_fs(coloring, depth)) {
      cert.failing = coloring;
      return cert;
    }
    for (std::size_t i = coloring.size(); i-- > 0;) {
      if (++coloring[i] < r) break;
      coloring[i] = 0;
    }
  }
  cert.verified = true;
  return cert;
}

std::string format_coloring(const Coloring& coloring) {
  std::string out;
  for (std::size_t i = 0; i < coloring.size(); ++i) {
    if (i) out += " ";
    out += std::to_string(i + 1) + ":" + std::to_string(coloring[i]);
  }
  return out;
}

}  // namespace ipdyn
