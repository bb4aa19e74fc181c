#include "ipdyn/open_set.hpp"

#include <algorithm>

#include "ipdyn/errors.hpp"

namespace ipdyn {

Pattern Pattern::cylinder(std::string_view word, std::int64_t offset) {
  Pattern p;
  for (std::size_t i = 0; i < word.size(); ++i) {
    p.cells.emplace(offset + static_cast<std::int64_t>(i), word[i]);
  }
  return p;
}

Pattern Pattern::shifted(std::int64_t s) const {
  Pattern out;
  for (const auto& [pos, sym] : cells) out.cells.emplace_hint(out.cells.end(), pos + s, sym);
  return out;
}

std::optional<Pattern> Pattern::meet(const Pattern& other) const {
  Pattern out = *this;
  for (const auto& [pos, sym] : other.cells) {
    auto [it, inserted] = out.cells.emplace(pos, sym);
    if (!inserted && it->second != sym) return std::nullopt;
  }
  return out;
}

std::string Pattern::to_string() const {
  if (cells.empty()) return "*";
  // Runs of consecutive cells print as word@start.
  std::string out;
  auto it = cells.begin();
  while (it != cells.end()) {
    const std::int64_t start = it->first;
    std::string word;
    std::int64_t next = start;
    while (it != cells.end() && it->first == next) {
      word += it->second;
      ++next;
      ++it;
    }
    if (!out.empty()) out += " ";
    out += word + "@" + std::to_string(start);
  }
  return out;
}

OpenSet::OpenSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
  // The whole space absorbs everything else.
  if (!patterns_.empty() && patterns_.front().empty()) patterns_.resize(1);
}

OpenSet OpenSet::cylinder(std::string_view word, std::int64_t offset) {
  return OpenSet({Pattern::cylinder(word, offset)});
}

OpenSet OpenSet::shifted(std::int64_t s) const {
  std::vector<Pattern> out;
  out.reserve(patterns_.size());
  for (const auto& p : patterns_) out.push_back(p.shifted(s));
  return OpenSet(std::move(out));
}

OpenSet OpenSet::meet(const OpenSet& other) const {
  std::vector<Pattern> out;
  for (const auto& a : patterns_) {
    for (const auto& b : other.patterns_) {
      if (auto m = a.meet(b)) out.push_back(std::move(*m));
    }
  }
  return OpenSet(std::move(out));
}

OpenSet OpenSet::join(const OpenSet& other) const {
  std::vector<Pattern> out = patterns_;
  out.insert(out.end(), other.patterns_.begin(), other.patterns_.end());
  return OpenSet(std::move(out));
}

std::optional<std::pair<std::int64_t, std::int64_t>> OpenSet::extent() const {
  std::optional<std::pair<std::int64_t, std::int64_t>> out;
  for (const auto& p : patterns_) {
    if (p.empty()) continue;
    if (!out) {
      out.emplace(p.min_pos(), p.max_pos());
    } else {
      out->first = std::min(out->first, p.min_pos());
      out->second = std::max(out->second, p.max_pos());
    }
  }
  return out;
}

std::string OpenSet::to_string() const {
  if (patterns_.empty()) return "{}";
  std::string out;
  for (const auto& p : patterns_) {
    if (!out.empty()) out += " | ";
    out += p.to_string();
  }
  return out;
}

namespace {

void check_span(const SubstitutionSystem& sys, std::int64_t span) {
  if (span > static_cast<std::int64_t>(sys.length())) {
    fail(ErrorCode::WindowTooLarge, "pattern spans " + std::to_string(span) +
                                        " coordinates but the language bound is " +
                                        std::to_string(sys.length()));
  }
}

bool carries(std::string_view word, const Pattern& p, std::int64_t origin) {
  for (const auto& [pos, sym] : p.cells) {
    if (word[static_cast<std::size_t>(pos - origin)] != sym) return false;
  }
  return true;
}

}  // namespace

bool admits(const SubstitutionSystem& sys, const Pattern& pattern) {
  if (pattern.empty()) return !sys.words().empty();
  check_span(sys, pattern.span());
  const std::int64_t origin = pattern.min_pos();
  return std::any_of(sys.words().begin(), sys.words().end(),
                     [&](const std::string& w) { return carries(w, pattern, origin); });
}

bool nonempty(const SubstitutionSystem& sys, const OpenSet& set) {
  return std::any_of(set.patterns().begin(), set.patterns().end(),
                     [&](const Pattern& p) { return admits(sys, p); });
}

bool is_subset(const SubstitutionSystem& sys, const OpenSet& a, const OpenSet& b) {
  const auto& bp = b.patterns();
  if (!bp.empty() && bp.front().empty()) return true;
  const auto b_extent = b.extent();
  for (const auto& p : a.patterns()) {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool any = false;
    auto widen = [&](std::int64_t x, std::int64_t y) {
      lo = any ? std::min(lo, x) : x;
      hi = any ? std::max(hi, y) : y;
      any = true;
    };
    if (!p.empty()) widen(p.min_pos(), p.max_pos());
    if (b_extent) widen(b_extent->first, b_extent->second);
    if (!any) continue;
    const std::int64_t span = hi - lo + 1;
    check_span(sys, span);
    for (const auto& w : sys.words()) {
      const std::string_view window(w.data(), static_cast<std::size_t>(span));
      if (!carries(window, p, lo)) continue;
      const bool covered = std::any_of(bp.begin(), bp.end(),
                                       [&](const Pattern& q) { return carries(window, q, lo); });
      if (!covered) return false;
    }
  }
  return true;
}

}  // namespace ipdyn
