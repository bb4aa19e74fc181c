#include <algorithm>
#include <cmath>
#include <sstream>

#include "ipdyn/errors.hpp"
#include "ipdyn/ipsets.hpp"

namespace ipdyn {

WindowSet::WindowSet(std::int64_t lo, std::int64_t hi, std::vector<std::int64_t> members)
    : lo_(lo), hi_(hi), members_(std::move(members)) {
  if (hi_ < lo_) {
    fail(ErrorCode::InvalidArgument,
         "empty window [" + std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && (members_.front() < lo_ || members_.back() > hi_)) {
    fail(ErrorCode::InvalidArgument, "member outside window [" + std::to_string(lo_) + ", " +
                                         std::to_string(hi_) + "]");
  }
}

WindowSet WindowSet::from_predicate(std::int64_t lo, std::int64_t hi,
                                    const MembershipPredicate& member) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n) {
    if (member(n)) out.push_back(n);
  }
  return WindowSet(lo, hi, std::move(out));
}

WindowSet WindowSet::full(std::int64_t lo, std::int64_t hi) {
  return from_predicate(lo, hi, [](std::int64_t) { return true; });
}

bool WindowSet::contains(std::int64_t n) const {
  return std::binary_search(members_.begin(), members_.end(), n);
}

MembershipPredicate WindowSet::predicate() const {
  return [members = members_](std::int64_t n) {
    return std::binary_search(members.begin(), members.end(), n);
  };
}

MembershipPredicate catalog_predicate(std::string_view name) {
  if (name == "all") return [](std::int64_t) { return true; };
  if (name == "evens") return [](std::int64_t n) { return n % 2 == 0; };
  if (name == "odds") return [](std::int64_t n) { return n % 2 != 0; };
  if (name == "squares") {
    return [](std::int64_t n) {
      if (n < 0) return false;
      auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
      while (r * r > n) --r;
      while ((r + 1) * (r + 1) <= n) ++r;
      return r * r == n;
    };
  }
  constexpr std::string_view kMultiples = "multiples:";
  if (name.substr(0, kMultiples.size()) == kMultiples) {
    const std::string arg(name.substr(kMultiples.size()));
    std::int64_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoll(arg, &used);
      if (used != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "bad modulus '" + arg + "' in '" + std::string(name) + "'");
    }
    if (k == 0) fail(ErrorCode::InvalidArgument, "multiples:0 is not a valid predicate");
    return [k](std::int64_t n) { return n % k == 0; };
  }
  fail(ErrorCode::InvalidArgument, "unknown set predicate '" + std::string(name) + "'");
}

WindowSet parse_window_set_csv(std::string_view text, std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> members;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r,");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r,");
    const std::string field = line.substr(first, last - first + 1);
    std::int64_t v = 0;
    try {
      std::size_t used = 0;
      v = std::stoll(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": '" + field + "' is not an integer");
    }
    if (v < lo || v > hi) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(line_no) + ": " +
                                           std::to_string(v) + " lies outside [" +
                                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    members.push_back(v);
  }
  return WindowSet(lo, hi, std::move(members));
}

Density window_density(const WindowSet& set, std::int64_t length) {
  if (length < 1 || length > set.length()) {
    fail(ErrorCode::BadLength, "interval length " + std::to_string(length) +
                                   " not in [1, " + std::to_string(set.length()) + "]");
  }
  const auto size = static_cast<std::size_t>(set.length());
  std::vector<std::int64_t> prefix(size + 1, 0);
  for (std::int64_t m : set.members()) prefix[static_cast<std::size_t>(m - set.lo()) + 1] = 1;
  for (std::size_t i = 0; i < size; ++i) prefix[i + 1] += prefix[i];

  const auto len = static_cast<std::size_t>(length);
  std::int64_t best = 0;
  std::int64_t worst = length;
  for (std::size_t start = 0; start + len <= size; ++start) {
    const std::int64_t count = prefix[start + len] - prefix[start];
    best = std::max(best, count);
    worst = std::min(worst, count);
  }
  return Density{Rational(best, length), Rational(worst, length)};
}

namespace {

std::int64_t max_gap_of(const std::vector<std::int64_t>& members, std::int64_t lo,
                        std::int64_t hi) {
  std::int64_t gap = std::max(members.front() - lo + 1, hi - members.back() + 1);
  for (std::size_t i = 1; i < members.size(); ++i) gap = std::max(gap, members[i] - members[i - 1]);
  return gap;
}

}  // namespace

StructureReport structure_classify(const WindowSet& set, const StructureThresholds& thresholds) {
  StructureReport report;
  report.thresholds = thresholds;
  const auto& m = set.members();
  if (m.empty()) return report;

  report.max_gap = max_gap_of(m, set.lo(), set.hi());
  report.syndetic = *report.max_gap <= thresholds.syndetic_gap;

  std::vector<std::int64_t> run_starts;  // positions x with [x, x+N-1] inside the set
  std::size_t i = 0;
  while (i < m.size()) {
    std::size_t j = i;
    while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
    const std::int64_t run = m[j] - m[i] + 1;
    report.max_run = std::max(report.max_run, run);
    if (run >= thresholds.thick_run) {
      ++report.thick_runs;
      for (std::int64_t x = m[i]; x + thresholds.thick_run - 1 <= m[j]; ++x) run_starts.push_back(x);
    }
    i = j + 1;
  }
  report.thick = report.max_run >= thresholds.thick_run;

  // Longest stretch whose consecutive members are at most syndetic_gap apart.
  std::size_t start = 0;
  for (std::size_t k = 1; k <= m.size(); ++k) {
    if (k == m.size() || m[k] - m[k - 1] > thresholds.syndetic_gap) {
      if (m[k - 1] - m[start] + 1 >= thresholds.thick_run) report.piecewise_syndetic = true;
      start = k;
    }
  }

  const std::int64_t last_start = set.hi() - thresholds.thick_run + 1;
  if (!run_starts.empty() && last_start >= set.lo()) {
    report.thickly_syndetic =
        max_gap_of(run_starts, set.lo(), last_start) <= thresholds.syndetic_gap;
  }
  return report;
}

}  // namespace ipdyn
