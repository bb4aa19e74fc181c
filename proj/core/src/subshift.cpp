#include "ipdyn/subshift.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

#include "ipdyn/errors.hpp"

namespace ipdyn {

std::string SubstitutionRules::to_string() const {
  std::string out;
  for (const auto& [symbol, image] : rules) {
    if (!out.empty()) out += ", ";
    out += std::string(1, symbol) + "->" + image;
  }
  return out + "; seeds=" + seeds;
}

SubstitutionRules parse_rules(std::string_view text, std::string_view seeds) {
  SubstitutionRules out;
  std::string first_symbol;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    if (i >= text.size()) break;
    std::size_t j = i;
    while (j < text.size() && !is_sep(text[j])) ++j;
    const std::string_view rule = text.substr(i, j - i);
    const auto arrow = rule.find("->");
    if (arrow != 1) {
      fail(ErrorCode::BadRules, "rule '" + std::string(rule) + "' is not of the form a->word");
    }
    const char symbol = rule[0];
    const std::string image(rule.substr(3));
    if (image.empty()) {
      fail(ErrorCode::BadRules, "rule for '" + std::string(1, symbol) + "' is erasing");
    }
    if (!out.rules.emplace(symbol, image).second) {
      fail(ErrorCode::BadRules, "symbol '" + std::string(1, symbol) + "' has two rules");
    }
    if (first_symbol.empty()) first_symbol = std::string(1, symbol);
    i = j;
  }
  if (out.rules.empty()) fail(ErrorCode::BadRules, "no rules in '" + std::string(text) + "'");
  for (const auto& [symbol, image] : out.rules) {
    for (char c : image) {
      if (!out.rules.count(c)) {
        fail(ErrorCode::BadRules, "image of '" + std::string(1, symbol) + "' uses '" +
                                      std::string(1, c) + "', which has no rule");
      }
    }
  }
  out.seeds = seeds.empty() ? first_symbol : std::string(seeds);
  for (char c : out.seeds) {
    if (!out.rules.count(c)) {
      fail(ErrorCode::BadRules, "seed '" + std::string(1, c) + "' has no rule");
    }
  }
  return out;
}

SubstitutionRules chacon_rules() { return parse_rules("0->0010, 1->1", "0"); }
SubstitutionRules fibonacci_rules() { return parse_rules("0->01, 1->0", "0"); }

namespace {

constexpr std::size_t kMaxText = std::size_t{1} << 26;

std::string apply_once(const SubstitutionRules& rules, const std::string& w, std::size_t limit) {
  std::string out;
  for (char c : w) {
    out += rules.rules.at(c);
    if (out.size() >= limit) break;
  }
  return out;
}

/// Orbit text of one seed, at least `target` long. `periodic` reports a
/// seed whose iterates stopped growing.
std::string grow(const SubstitutionRules& rules, char seed, std::size_t target,
                 std::size_t& depth, bool& periodic) {
  std::string w(1, seed);
  depth = 0;
  periodic = false;
  std::size_t stalled = 0;
  while (w.size() < target) {
    std::string next = apply_once(rules, w, target);
    ++depth;
    stalled = next.size() > w.size() ? 0 : stalled + 1;
    w = std::move(next);
    if (stalled > rules.rules.size()) {
      periodic = true;
      const std::string period = w;
      while (w.size() < target) w += period;
      break;
    }
  }
  return w;
}

std::size_t count_factors(const std::string& text, std::size_t len) {
  if (text.size() < len) return 0;
  std::unordered_set<std::string_view> seen;
  const std::string_view view(text);
  for (std::size_t i = 0; i + len <= text.size(); ++i) seen.insert(view.substr(i, len));
  return seen.size();
}

}  // namespace

SubstitutionSystem SubstitutionSystem::build(SubstitutionRules rules, std::size_t length,
                                             std::size_t max_length) {
  if (length == 0) fail(ErrorCode::BadLength, "language length must be positive");
  if (length > max_length) {
    fail(ErrorCode::WindowTooLarge, "language length " + std::to_string(length) +
                                        " exceeds the bound " + std::to_string(max_length));
  }
  if (rules.rules.empty() || rules.seeds.empty()) fail(ErrorCode::BadRules, "no rules or seeds");

  SubstitutionSystem sys;
  sys.rules_ = std::move(rules);
  sys.length_ = length;

  std::set<std::string> words;
  for (char seed : sys.rules_.seeds) {
    // Grow until the number of length-L factors stops changing between two
    // consecutive iterates.
    std::size_t target = 16 * length + 64;
    std::size_t depth = 0;
    bool periodic = false;
    std::string text = grow(sys.rules_, seed, target, depth, periodic);
    std::size_t count = count_factors(text, length);
    while (!periodic) {
      const std::size_t next_target = text.size() * 2 + 1;
      if (next_target > kMaxText) {
        fail(ErrorCode::WindowTooLarge, "factor set of length " + std::to_string(length) +
                                            " did not stabilise below " +
                                            std::to_string(kMaxText) + " symbols");
      }
      std::size_t next_depth = 0;
      std::string next = grow(sys.rules_, seed, next_target, next_depth, periodic);
      const std::size_t next_count = count_factors(next, length);
      const bool stable = next_count == count;
      text = std::move(next);
      depth = next_depth;
      count = next_count;
      if (stable) break;
    }
    sys.depth_ = std::max(sys.depth_, depth);
    const std::string_view view(text);
    for (std::size_t i = 0; i + length <= text.size(); ++i) words.emplace(view.substr(i, length));
    sys.texts_.push_back(std::move(text));
  }
  sys.words_.assign(words.begin(), words.end());
  return sys;
}

std::vector<std::string> SubstitutionSystem::language(std::size_t len) const {
  if (len > length_) {
    fail(ErrorCode::WindowTooLarge, "words of length " + std::to_string(len) +
                                        " exceed the language bound " + std::to_string(length_));
  }
  std::vector<std::string> out;
  for (const auto& w : words_) {
    std::string_view prefix(w.data(), len);
    if (out.empty() || out.back() != prefix) out.emplace_back(prefix);
  }
  return out;
}

bool SubstitutionSystem::admissible(std::string_view word) const {
  if (word.size() > length_) {
    fail(ErrorCode::WindowTooLarge, "word of length " + std::to_string(word.size()) +
                                        " exceeds the language bound " + std::to_string(length_));
  }
  auto it = std::lower_bound(words_.begin(), words_.end(), word,
                             [](const std::string& a, std::string_view b) { return a < b; });
  return it != words_.end() && std::string_view(*it).substr(0, word.size()) == word;
}

std::string SubstitutionSystem::describe() const {
  return "substitution " + rules_.to_string() + "; L=" + std::to_string(length_) +
         "; depth=" + std::to_string(depth_) + "; |L-words|=" + std::to_string(words_.size());
}

MinimalityReport minimality_probe(const SubstitutionSystem& sys, std::size_t ell,
                                  std::size_t max_r) {
  if (ell == 0 || ell > max_r) {
    fail(ErrorCode::InvalidArgument, "need 1 <= ell <= R, got ell=" + std::to_string(ell) +
                                         ", R=" + std::to_string(max_r));
  }
  if (max_r > sys.length()) {
    fail(ErrorCode::WindowTooLarge, "R=" + std::to_string(max_r) + " exceeds the language bound " +
                                        std::to_string(sys.length()));
  }
  MinimalityReport report{ell, max_r, false, 0};
  const auto small = sys.language(ell);
  for (std::size_t r = ell; r <= max_r; ++r) {
    const auto big = sys.language(r);
    const bool all = std::all_of(big.begin(), big.end(), [&](const std::string& w) {
      return std::all_of(small.begin(), small.end(),
                         [&](const std::string& u) { return w.find(u) != std::string::npos; });
    });
    if (all) {
      report.passed = true;
      report.witness_r = r;
      break;
    }
  }
  return report;
}

}  // namespace ipdyn
