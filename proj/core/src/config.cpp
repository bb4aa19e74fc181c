#include "ipdyn/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "ipdyn/errors.hpp"

namespace ipdyn {

std::string SetSpec::to_string() const {
  switch (kind) {
    case Kind::Whole: return "*";
    case Kind::Word: return word;
    case Kind::Arc: return "arc " + arc.to_string();
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const auto comma = s.find(',', start);
    const auto end = comma == std::string_view::npos ? s.size() : comma;
    auto item = trim(s.substr(start, end - start));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::int64_t parse_int(std::string_view text, const std::string& where) {
  const std::string s = trim(text);
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, where + ": '" + s + "' is not an integer");
  }
}

struct Entry {
  std::string key;
  std::string value;
  std::size_t line;
};

class Reader {
 public:
  Reader(std::string section, const Entry& e) : section_(std::move(section)), e_(e) {}

  std::string where() const {
    return "line " + std::to_string(e_.line) + " [" + section_ + "] " + e_.key;
  }
  const std::string& value() const { return e_.value; }

  std::int64_t integer(std::int64_t min_value) const {
    const std::int64_t v = parse_int(e_.value, where());
    if (v < min_value) {
      fail(ErrorCode::ValidationError,
           where() + ": " + std::to_string(v) + " is below the minimum " + std::to_string(min_value));
    }
    return v;
  }

  std::vector<std::int64_t> integers() const {
    std::vector<std::int64_t> out;
    for (const auto& item : split_list(e_.value)) out.push_back(parse_int(item, where()));
    return out;
  }

  [[noreturn]] void invalid(const std::string& message) const {
    fail(ErrorCode::ValidationError, where() + ": " + message);
  }

  /// Re-raise a module error with the location prepended.
  template <typename F>
  auto wrap(F&& f) const {
    try {
      return f();
    } catch (const Error& err) {
      fail(err.code(), where() + ": " + err.detail());
    }
  }

 private:
  std::string section_;
  const Entry& e_;
};

void require_defined(const std::string& section, const std::string& key, const std::string& name,
                     bool defined, const std::string& kind) {
  if (!defined) {
    fail(ErrorCode::ValidationError,
         "[" + section + "] " + key + ": undefined " + kind + " '" + name + "'");
  }
}

}  // namespace

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split_list(text)) out.push_back(parse_int(item, "integer list"));
  return out;
}

Coloring parse_coloring(std::string_view text) {
  Coloring out;
  std::string digits;
  for (char c : text) {
    if (c == ',' || c == '/' || std::isspace(static_cast<unsigned char>(c))) {
      if (!digits.empty()) out.push_back(static_cast<int>(parse_int(digits, "coloring")));
      digits.clear();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits += c;
    } else {
      fail(ErrorCode::ParseError, std::string("coloring: unexpected '") + c + "'");
    }
  }
  if (!digits.empty()) {
    // A bare digit string like "0110" is one color per element.
    if (out.empty() && text.find_first_of(",/ ") == std::string_view::npos) {
      for (char c : digits) out.push_back(c - '0');
    } else {
      out.push_back(static_cast<int>(parse_int(digits, "coloring")));
    }
  }
  if (out.empty()) fail(ErrorCode::ParseError, "coloring: empty");
  return out;
}

ExperimentConfig parse_config(std::string_view text, std::string base_dir) {
  static const std::map<std::string, std::set<std::string>> kKeys = {
      {"system", {"kind", "rules", "seeds", "length", "max_length", "q", "p", "generator_steps"}},
      {"sets", {}},
      {"polynomials", {}},
      {"gammas", {}},
      {"truncations", {}},
      {"query",
       {"U", "V", "polynomials", "gamma", "window", "power", "depth", "chain_window",
        "truncation"}},
      {"pet", {"system", "shifts_per_step", "max_steps"}},
      {"hindman", {"N", "r", "depth", "mode", "coloring", "budget"}},
      {"density", {"set", "lo", "hi", "lengths", "syndetic_gap", "thick_run"}},
  };

  // Pass 1: structure.
  std::map<std::string, std::vector<Entry>> sections;
  std::string current;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": unterminated header '" +
                                        line + "'");
      }
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!kKeys.count(current)) {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": unknown section '" + current + "'");
      }
      if (sections.count(current)) {
        fail(ErrorCode::ParseError,
             "line " + std::to_string(line_no) + ": section [" + current + "] repeated");
      }
      sections[current];
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": expected key = value, got '" + line + "'");
    }
    if (current.empty()) {
      fail(ErrorCode::ParseError,
           "line " + std::to_string(line_no) + ": key outside any [section]");
    }
    Entry e{trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)),
            line_no};
    if (e.key.empty()) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": empty key");
    }
    const auto& allowed = kKeys.at(current);
    if (!allowed.empty() && !allowed.count(e.key)) {
      fail(ErrorCode::ValidationError, "line " + std::to_string(line_no) + " [" + current +
                                           "]: unknown key '" + e.key + "'");
    }
    auto& entries = sections[current];
    if (std::any_of(entries.begin(), entries.end(), [&](const Entry& x) { return x.key == e.key; })) {
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + " [" + current + "] " +
                                      e.key + ": key repeated");
    }
    entries.push_back(std::move(e));
  }

  ExperimentConfig cfg;
  cfg.base_dir = std::move(base_dir);
  auto each = [&](const std::string& section, auto&& fn) {
    if (auto it = sections.find(section); it != sections.end()) {
      for (const auto& e : it->second) fn(Reader(section, e), e.key);
    }
  };

  // Pass 2: values.
  std::string rules_text;
  std::string seeds;
  each("system", [&](const Reader& r, const std::string& key) {
    if (key == "kind") {
      if (r.value() == "substitution") {
        cfg.system.kind = SystemKind::Substitution;
      } else if (r.value() == "rotation") {
        cfg.system.kind = SystemKind::Rotation;
      } else {
        r.invalid("kind must be substitution or rotation, got '" + r.value() + "'");
      }
    } else if (key == "rules") {
      rules_text = r.value();
    } else if (key == "seeds") {
      seeds = r.value();
    } else if (key == "length") {
      if (r.value() != "auto") cfg.system.length = static_cast<std::size_t>(r.integer(1));
    } else if (key == "max_length") {
      cfg.system.max_length = static_cast<std::size_t>(r.integer(1));
    } else if (key == "q") {
      cfg.system.q = r.integer(1);
    } else if (key == "p") {
      cfg.system.p = r.integer(INT64_MIN);
    } else if (key == "generator_steps") {
      cfg.system.generator_steps = r.integers();
    }
  });
  if (!rules_text.empty() || !seeds.empty()) {
    const std::string where = "[system] rules";
    try {
      cfg.system.rules = parse_rules(rules_text.empty() ? "0->0010, 1->1" : rules_text, seeds);
    } catch (const Error& err) {
      fail(err.code(), where + ": " + err.detail());
    }
  }
  if (cfg.system.kind == SystemKind::Rotation) {
    if (cfg.system.q == 0) fail(ErrorCode::ValidationError, "[system] q: required for rotation");
    try {
      Rotation(cfg.system.q, cfg.system.p);
    } catch (const Error& err) {
      fail(err.code(), "[system] p: " + err.detail());
    }
  }

  each("sets", [&](const Reader& r, const std::string& key) {
    SetSpec spec;
    const std::string& v = r.value();
    if (v == "*") {
      spec.kind = SetSpec::Kind::Whole;
    } else if (v.rfind("arc", 0) == 0) {
      std::vector<std::string> fields;
      std::istringstream words(v.substr(3));
      for (std::string w; words >> w;) fields.push_back(w);
      if (fields.size() != 2) r.invalid("arc needs 'arc START END', got '" + v + "'");
      spec.kind = SetSpec::Kind::Arc;
      spec.arc.start = parse_int(fields[0], r.where());
      const std::int64_t end = parse_int(fields[1], r.where());
      if (end < spec.arc.start) r.invalid("arc end precedes its start");
      spec.arc.length = end - spec.arc.start;
    } else {
      spec.kind = SetSpec::Kind::Word;
      spec.word = v;
    }
    cfg.sets.emplace(key, std::move(spec));
  });
  for (const auto& [name, spec] : cfg.sets) {
    const std::string where = "[sets] " + name;
    if (cfg.system.kind == SystemKind::Rotation && spec.kind == SetSpec::Kind::Word) {
      fail(ErrorCode::ValidationError, where + ": rotation sets must be arcs or '*'");
    }
    if (cfg.system.kind == SystemKind::Substitution && spec.kind == SetSpec::Kind::Arc) {
      fail(ErrorCode::ValidationError, where + ": arcs need kind = rotation");
    }
    for (char c : spec.word) {
      if (!cfg.system.rules.rules.count(c)) {
        fail(ErrorCode::ValidationError,
             where + ": symbol '" + std::string(1, c) + "' is not in the alphabet");
      }
    }
  }

  each("polynomials", [&](const Reader& r, const std::string& key) {
    cfg.polynomials.emplace(key, r.wrap([&] { return parse_polynomial(r.value()); }));
  });
  each("gammas", [&](const Reader& r, const std::string& key) {
    cfg.gammas.emplace(key, r.wrap([&] { return parse_gamma_polynomial(r.value()); }));
  });
  each("truncations", [&](const Reader& r, const std::string& key) {
    auto gens = r.integers();
    if (gens.empty()) r.invalid("no generators");
    r.wrap([&] { return FSTruncation::enumerate(gens); });
    cfg.truncations.emplace(key, std::move(gens));
  });

  const bool has_query = sections.count("query") > 0;
  each("query", [&](const Reader& r, const std::string& key) {
    if (key == "U") {
      cfg.query.u = r.value();
    } else if (key == "V") {
      cfg.query.vs = split_list(r.value());
    } else if (key == "polynomials") {
      cfg.query.polynomials = split_list(r.value());
    } else if (key == "gamma") {
      cfg.query.gammas = split_list(r.value());
    } else if (key == "window") {
      cfg.query.window = r.integer(0);
    } else if (key == "power") {
      cfg.query.power = r.integer(INT64_MIN);
      if (cfg.query.power == 0) fail(ErrorCode::ZeroPower, r.where() + ": power must be nonzero");
    } else if (key == "depth") {
      cfg.query.depth = static_cast<std::size_t>(r.integer(0));
    } else if (key == "chain_window") {
      cfg.query.chain_window = r.integer(0);
    } else if (key == "truncation") {
      cfg.query.truncation = r.value();
    }
  });
  if (has_query) {
    require_defined("query", "U", cfg.query.u, cfg.sets.count(cfg.query.u) > 0, "set");
    for (const auto& v : cfg.query.vs) {
      require_defined("query", "V", v, cfg.sets.count(v) > 0, "set");
    }
    for (const auto& p : cfg.query.polynomials) {
      require_defined("query", "polynomials", p, cfg.polynomials.count(p) > 0, "polynomial");
    }
    for (const auto& g : cfg.query.gammas) {
      require_defined("query", "gamma", g, cfg.gammas.count(g) > 0, "Gamma-polynomial");
    }
    if (!cfg.query.truncation.empty()) {
      require_defined("query", "truncation", cfg.query.truncation,
                      cfg.truncations.count(cfg.query.truncation) > 0, "truncation");
    }
  }

  each("pet", [&](const Reader& r, const std::string& key) {
    if (key == "system") {
      cfg.pet.system = r.value();
      r.wrap([&] { return parse_system(r.value()); });
    } else if (key == "shifts_per_step") {
      cfg.pet.shifts_per_step = static_cast<std::size_t>(r.integer(1));
    } else if (key == "max_steps") {
      cfg.pet.max_steps = static_cast<std::size_t>(r.integer(1));
    }
  });

  each("hindman", [&](const Reader& r, const std::string& key) {
    if (key == "N") {
      cfg.hindman.n = static_cast<int>(r.integer(1));
    } else if (key == "r") {
      cfg.hindman.r = static_cast<int>(r.integer(1));
    } else if (key == "depth") {
      cfg.hindman.depth = static_cast<int>(r.integer(1));
    } else if (key == "mode") {
      if (r.value() == "all") {
        cfg.hindman.all = true;
      } else if (r.value() == "single") {
        cfg.hindman.all = false;
      } else {
        r.invalid("mode must be all or single, got '" + r.value() + "'");
      }
    } else if (key == "coloring") {
      cfg.hindman.coloring = r.wrap([&] { return parse_coloring(r.value()); });
    } else if (key == "budget") {
      cfg.hindman.budget = static_cast<std::uint64_t>(r.integer(1));
    }
  });
  if (!cfg.hindman.all) {
    if (cfg.hindman.coloring.empty()) {
      fail(ErrorCode::ValidationError, "[hindman] coloring: required when mode = single");
    }
    cfg.hindman.n = static_cast<int>(cfg.hindman.coloring.size());
  }

  each("density", [&](const Reader& r, const std::string& key) {
    if (key == "set") {
      cfg.density.set = r.value();
      if (cfg.density.set.rfind("csv:", 0) != 0) {
        r.wrap([&] { return catalog_predicate(cfg.density.set); });
      }
    } else if (key == "lo") {
      cfg.density.lo = r.integer(INT64_MIN);
    } else if (key == "hi") {
      cfg.density.hi = r.integer(INT64_MIN);
    } else if (key == "lengths") {
      cfg.density.lengths = r.integers();
    } else if (key == "syndetic_gap") {
      cfg.density.thresholds.syndetic_gap = r.integer(1);
    } else if (key == "thick_run") {
      cfg.density.thresholds.thick_run = r.integer(1);
    }
  });
  if (cfg.density.hi < cfg.density.lo) {
    fail(ErrorCode::ValidationError, "[density] hi: window [" + std::to_string(cfg.density.lo) +
                                         ", " + std::to_string(cfg.density.hi) + "] is empty");
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string dir;
  if (auto slash = path.find_last_of('/'); slash != std::string::npos) dir = path.substr(0, slash);
  return parse_config(buf.str(), dir);
}

}  // namespace ipdyn
