#include "ipdyn/runner.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipdyn/dynamics.hpp"
#include "ipdyn/errors.hpp"
#include "ipdyn/pet.hpp"
#include "ipdyn/rotation.hpp"

namespace ipdyn {

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "pet-trace", "weights",     "fs",       "hindman",       "density",
      "return-set", "poly-return", "lemma213", "mixing-report",
  };
  return names;
}

namespace {

template <typename T>
std::string join(const std::vector<T>& items, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out << sep;
    out << items[i];
  }
  return out.str();
}

std::string big_list(const std::vector<BigInt>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return join(s, " ");
}

[[noreturn]] void missing(const std::string& what) { fail(ErrorCode::ValidationError, what); }

// ---- shared plumbing for the dynamics subcommands ----

OpenSet open_set_of(const SetSpec& spec) {
  if (spec.kind == SetSpec::Kind::Word) return OpenSet::cylinder(spec.word);
  return OpenSet::whole();
}

Arc arc_of(const SetSpec& spec, std::int64_t q) {
  if (spec.kind == SetSpec::Kind::Arc) return spec.arc;
  return Arc::whole(q);
}

const SetSpec& set_named(const ExperimentConfig& cfg, const std::string& name,
                         const std::string& key) {
  auto it = cfg.sets.find(name);
  if (it == cfg.sets.end()) missing("[query] " + key + ": undefined set '" + name + "'");
  return it->second;
}

std::vector<IntegralPolynomial> query_polynomials(const ExperimentConfig& cfg) {
  std::vector<IntegralPolynomial> out;
  for (const auto& name : cfg.query.polynomials) {
    auto it = cfg.polynomials.find(name);
    if (it == cfg.polynomials.end()) {
      missing("[query] polynomials: undefined polynomial '" + name + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

/// Widest coordinate range touched by U together with each V_i shifted by
/// each of its candidate shifts.
std::int64_t required_length(const OpenSet& u,
                             const std::vector<std::pair<const OpenSet*, std::vector<std::int64_t>>>&
                                 placed) {
  std::int64_t best = 1;
  const std::size_t count = placed.empty() ? 0 : placed.front().second.size();
  for (std::size_t k = 0; k < count; ++k) {
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
    for (const auto& [set, shifts] : placed) widen(*set, shifts[k]);
    if (any) best = std::max(best, hi - lo + 1);
  }
  return best;
}

SubstitutionSystem build_system(const ExperimentConfig& cfg, std::int64_t needed) {
  const auto length = cfg.system.length.value_or(static_cast<std::size_t>(needed));
  if (needed > static_cast<std::int64_t>(length)) {
    fail(ErrorCode::WindowTooLarge, "query needs words of length " + std::to_string(needed) +
                                        " but [system] length is " + std::to_string(length));
  }
  return SubstitutionSystem::build(cfg.system.rules, length, cfg.system.max_length);
}

std::string system_header(const ExperimentConfig& cfg) {
  if (cfg.system.kind == SystemKind::Rotation) {
    return Rotation(cfg.system.q, cfg.system.p).describe();
  }
  return "substitution " + cfg.system.rules.to_string();
}

void return_set_table(Report& report, const ReturnSet& rs) {
  report.table.header = {"n", "member"};
  for (std::int64_t n = -rs.window; n <= rs.window; ++n) {
    report.table.add({std::to_string(n), rs.contains(n) ? "1" : "0"});
  }
}

std::string summarize(const ReturnSet& rs) {
  std::ostringstream out;
  out << "query: " << rs.provenance << "\n";
  out << "window: [" << -rs.window << ", " << rs.window << "]\n";
  out << "members: " << rs.members.size() << " of " << 2 * rs.window + 1 << "\n";
  std::vector<std::int64_t> head(rs.members.begin(),
                                 rs.members.begin() + std::min<std::size_t>(rs.members.size(), 40));
  out << "first members: " << (head.empty() ? "none" : join(head, " "))
      << (rs.members.size() > head.size() ? " ..." : "") << "\n";
  return out.str();
}

std::vector<std::int64_t> poly_shifts(const IntegralPolynomial& p, std::int64_t window) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = -window; n <= window; ++n) {
    auto v = to_int64(p(BigInt(n)));
    if (!v) {
      fail(ErrorCode::WindowTooLarge, "p(" + std::to_string(n) + ") overflows 64 bits");
    }
    out.push_back(*v);
  }
  return out;
}

/// Polynomial return set for either system kind; the bare return set is
/// the case of one V with p(n) = kn.
ReturnSet compute_poly_query(const ExperimentConfig& cfg, const std::vector<std::string>& v_names,
                             const std::vector<IntegralPolynomial>& polys, std::int64_t window,
                             std::int64_t* language_length) {
  if (v_names.empty()) missing("[query] V: at least one set is required");
  if (v_names.size() != polys.size()) {
    missing("[query] polynomials: " + std::to_string(polys.size()) + " polynomials for " +
            std::to_string(v_names.size()) + " sets");
  }
  const SetSpec& u_spec = set_named(cfg, cfg.query.u, "U");
  if (cfg.system.kind == SystemKind::Rotation) {
    check_polynomial_hypotheses(polys);
    const Rotation rot(cfg.system.q, cfg.system.p);
    std::vector<Arc> vs;
    for (const auto& name : v_names) vs.push_back(arc_of(set_named(cfg, name, "V"), rot.q()));
    if (language_length) *language_length = 0;
    return rotation_probe(rot, arc_of(u_spec, rot.q()), vs, polys, window);
  }
  const OpenSet u = open_set_of(u_spec);
  std::vector<OpenSet> vs;
  for (const auto& name : v_names) vs.push_back(open_set_of(set_named(cfg, name, "V")));
  check_polynomial_hypotheses(polys);
  std::vector<std::pair<const OpenSet*, std::vector<std::int64_t>>> placed;
  for (std::size_t i = 0; i < vs.size(); ++i) placed.emplace_back(&vs[i], poly_shifts(polys[i], window));
  const auto sys = build_system(cfg, required_length(u, placed));
  if (language_length) *language_length = static_cast<std::int64_t>(sys.length());
  return poly_return_set(sys, u, vs, polys, window);
}

std::string feasibility_line(std::int64_t length) {
  if (length == 0) return "exact arithmetic on Z_q, no language bound\n";
  return "language bound L = " + std::to_string(length) + " (every query fits)\n";
}

std::map<std::string, std::vector<std::int64_t>> truncations_for(const ExperimentConfig& cfg,
                                                                 const Overrides& ov) {
  if (ov.generators) return {{"cli", *ov.generators}};
  if (cfg.truncations.empty()) missing("[truncations]: no FS truncation configured");
  return cfg.truncations;
}

std::string evidence_note(const ExperimentConfig& cfg) {
  if (cfg.system.kind == SystemKind::Rotation) {
    return "note: rotations are not weakly mixing (negative control)\n";
  }
  return "note: window-scale evidence on a candidate system, not a proof of mixing\n";
}

// ---- subcommands ----

PolySystem pet_system(const ExperimentConfig& cfg) {
  if (cfg.pet.system.empty()) missing("[pet] system: required");
  return parse_system(cfg.pet.system);
}

Report pet_trace(const ExperimentConfig& cfg) {
  Report r;
  const PolySystem system = pet_system(cfg);
  ShiftPolicy policy;
  policy.shifts_per_step = cfg.pet.shifts_per_step;
  const auto chain = pet_chain(system, policy, cfg.pet.max_steps);
  r.table.header = {"step", "f", "shifts", "weight_vector", "system"};
  std::ostringstream text;
  text << "PET chain for " << system.to_string() << "\n";
  text << "shifts per step: " << policy.shifts_per_step << ", step bound: " << cfg.pet.max_steps
       << "\n";
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const auto& step = chain[i];
    const std::string f = step.f ? step.f->to_string() : "";
    r.table.add({std::to_string(i), f, big_list(step.shifts), step.weights.to_string(),
                 step.system.to_string()});
    text << "step " << i << ": " << step.system.to_string() << "\n";
    text << "  weight vector " << step.weights.to_string() << "\n";
    if (step.f) {
      text << "  f = " << f << ", shifts " << big_list(step.shifts);
      if (step.collisions) text << " (" << step.collisions << " collisions retried)";
      text << "\n";
    }
  }
  text << "terminated after " << chain.size() - 1 << " reductions; every step strictly precedes\n";
  r.text = text.str();
  return r;
}

Report weights(const ExperimentConfig& cfg) {
  Report r;
  const PolySystem system = pet_system(cfg);
  r.table.header = {"index", "element", "weight", "leading_coefficient"};
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto& g = system.members()[i];
    const auto key = equivalence_key(g);
    r.table.add({std::to_string(i + 1), g.to_string(), key.first.to_string(),
                 format_rational(key.second)});
  }
  std::ostringstream text;
  text << "system " << system.to_string() << "\n";
  text << "weight vector " << (system.empty() ? "()" : weight_vector(system).to_string()) << "\n";
  r.text = text.str();
  return r;
}

Report fs(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  r.table.header = {"truncation", "alpha", "n_alpha"};
  std::ostringstream text;
  for (const auto& [name, gens] : truncations_for(cfg, ov)) {
    const auto t = FSTruncation::enumerate(gens);
    for (IndexSet alpha = 1; alpha <= t.size(); ++alpha) {
      r.table.add({name, format_index_set(alpha), std::to_string(t.sum(alpha))});
    }
    text << name << ": " << t.describe() << ", " << t.size() << " sums, " << t.values().size()
         << " distinct values\n";
  }
  r.text = text.str();
  return r;
}

Report hindman(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  HindmanSpec spec = cfg.hindman;
  if (ov.hindman_n) spec.n = *ov.hindman_n;
  if (ov.hindman_r) spec.r = *ov.hindman_r;
  if (ov.depth) spec.depth = static_cast<int>(*ov.depth);
  if (ov.hindman_all || ov.hindman_n || ov.hindman_r) spec.all = true;
  std::ostringstream text;
  if (spec.all) {
    const auto cert = hindman_all(spec.n, spec.r, spec.depth, spec.budget);
    const std::string verdict = cert.verified ? "Verified" : "Refuted";
    r.table.header = {"N", "r", "depth", "result", "colorings_checked", "failing_coloring"};
    r.table.add({std::to_string(spec.n), std::to_string(spec.r), std::to_string(spec.depth), verdict,
                 std::to_string(cert.colorings_checked),
                 cert.failing ? format_coloring(*cert.failing) : ""});
    text << verdict << "\n";
    text << "every " << spec.r << "-coloring of {1.." << spec.n
         << "} searched for a monochromatic FS of " << spec.depth << " generators\n";
    text << "colorings checked: " << cert.colorings_checked << "\n";
    if (cert.failing) text << "least failing coloring: " << format_coloring(*cert.failing) << "\n";
  } else {
    const auto hit = find_monochromatic_fs(spec.coloring, spec.depth);
    r.table.header = {"coloring", "depth", "result", "cell", "generators"};
    r.table.add({format_coloring(spec.coloring), std::to_string(spec.depth),
                 hit ? "Verified" : "Refuted", hit ? std::to_string(hit->cell) : "",
                 hit ? join(hit->generators, " ") : ""});
    text << (hit ? "Verified" : "Refuted") << "\n";
    text << "coloring " << format_coloring(spec.coloring) << "\n";
    if (hit) text << "cell " << hit->cell << ", generators " << join(hit->generators, " ") << "\n";
  }
  r.text = text.str();
  return r;
}

Report density(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  const DensitySpec& spec = cfg.density;
  const std::int64_t hi = ov.window ? spec.lo + *ov.window - 1 : spec.hi;
  if (hi < spec.lo) missing("[density]: empty window");
  WindowSet set = WindowSet::full(spec.lo, spec.lo);
  if (spec.set.rfind("csv:", 0) == 0) {
    std::filesystem::path path(spec.set.substr(4));
    if (path.is_relative() && !cfg.base_dir.empty()) path = std::filesystem::path(cfg.base_dir) / path;
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    set = parse_window_set_csv(buf.str(), spec.lo, hi);
  } else {
    set = WindowSet::from_predicate(spec.lo, hi, catalog_predicate(spec.set));
  }
  r.table.header = {"length", "upper", "lower"};
  for (std::int64_t len : spec.lengths) {
    if (len > set.length()) continue;
    const auto d = window_density(set, len);
    r.table.add({std::to_string(len), format_rational(d.upper), format_rational(d.lower)});
  }
  const auto s = structure_classify(set, spec.thresholds);
  std::ostringstream text;
  text << "set " << spec.set << " on [" << spec.lo << ", " << hi << "], " << set.members().size()
       << " members\n";
  text << "thresholds: syndetic_gap " << s.thresholds.syndetic_gap << ", thick_run "
       << s.thresholds.thick_run << "\n";
  text << "max gap " << (s.max_gap ? std::to_string(*s.max_gap) : "none") << ", max run "
       << s.max_run << ", thick runs " << s.thick_runs << "\n";
  text << "syndetic " << s.syndetic << ", thick " << s.thick << ", piecewise syndetic "
       << s.piecewise_syndetic << ", thickly syndetic " << s.thickly_syndetic << "\n";
  r.text = text.str();
  return r;
}

Report return_set_cmd(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  if (cfg.query.vs.empty()) missing("[query] V: at least one set is required");
  const std::int64_t window = ov.window.value_or(cfg.query.window);
  const std::int64_t k = cfg.query.power;
  const auto linear = IntegralPolynomial::monomial(1, BigInt(k));
  std::int64_t length = 0;
  const ReturnSet rs = compute_poly_query(cfg, {cfg.query.vs.front()}, {linear}, window, &length);
  return_set_table(r, rs);
  r.text = "return set N(U,V)" + (k == 1 ? std::string() : " for T^" + std::to_string(k)) +
           " on " + system_header(cfg) + "\n" + summarize(rs) + feasibility_line(length);
  return r;
}

Report poly_return(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  const std::int64_t window = ov.window.value_or(cfg.query.window);
  std::int64_t length = 0;
  const ReturnSet rs = compute_poly_query(cfg, cfg.query.vs, query_polynomials(cfg), window, &length);
  return_set_table(r, rs);
  r.text = "polynomial return set on " + system_header(cfg) + "\n" + summarize(rs) +
           feasibility_line(length) + evidence_note(cfg);
  return r;
}

Report lemma213(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  if (cfg.system.kind != SystemKind::Substitution) {
    missing("[system] kind: lemma213 needs a substitution system");
  }
  if (cfg.query.vs.empty()) missing("[query] V: at least one set is required");
  std::vector<OpenSet> vs;
  for (const auto& name : cfg.query.vs) vs.push_back(open_set_of(set_named(cfg, name, "V")));
  std::vector<GammaPolynomial> gs;
  for (const auto& name : cfg.query.gammas) gs.push_back(cfg.gammas.at(name));
  if (gs.empty()) {
    gs.assign(vs.size(), GammaPolynomial::generator_power(1, 1, IntegralPolynomial::monomial(1, 1)));
  }
  if (gs.size() != vs.size()) {
    missing("[query] gamma: " + std::to_string(gs.size()) + " Gamma-polynomials for " +
            std::to_string(vs.size()) + " sets");
  }
  std::vector<std::int64_t> gens;
  std::string truncation_name;
  if (ov.generators) {
    gens = *ov.generators;
    truncation_name = "cli";
  } else if (!cfg.query.truncation.empty()) {
    truncation_name = cfg.query.truncation;
    gens = cfg.truncations.at(truncation_name);
  } else if (!cfg.truncations.empty()) {
    truncation_name = cfg.truncations.begin()->first;
    gens = cfg.truncations.begin()->second;
  } else {
    missing("[query] truncation: lemma213 needs an FS truncation");
  }
  const auto truncation = FSTruncation::enumerate(gens);
  const std::size_t depth = ov.depth.value_or(cfg.query.depth);
  const std::int64_t window = ov.window.value_or(cfg.query.chain_window);

  std::int64_t widest = 0;
  for (const auto& v : vs) {
    if (auto e = v.extent()) widest = std::max(widest, e->second - e->first + 1);
  }
  const auto sys = build_system(cfg, 2 * window + std::max<std::int64_t>(widest, 1));
  const auto chain = lemma213_chain(sys, vs, gs, truncation, depth, window,
                                    cfg.system.generator_steps);
  const auto check = verify_chain(sys, vs, chain);

  r.table.header = {"step", "alpha", "n_alpha", "set", "shift", "pattern", "verified"};
  for (std::size_t n = 0; n < chain.steps.size(); ++n) {
    const auto& step = chain.steps[n];
    for (std::size_t i = 0; i < vs.size(); ++i) {
      r.table.add({std::to_string(n), format_index_set(step.alpha), std::to_string(step.n_alpha),
                   cfg.query.vs[i], std::to_string(step.shifts[i]), step.sets[i].to_string(),
                   check.ok ? "1" : "0"});
    }
  }
  std::ostringstream text;
  text << "descending chain on " << sys.describe() << "\n";
  text << "truncation " << truncation_name << " = " << truncation.describe() << ", depth " << depth
       << ", shift window " << window << "\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    text << "V" << i + 1 << " = " << vs[i].to_string() << ", g" << i + 1 << " = "
         << gs[i].to_string() << "\n";
  }
  for (std::size_t n = 0; n < chain.steps.size(); ++n) {
    const auto& step = chain.steps[n];
    text << "step " << n << ": alpha " << format_index_set(step.alpha) << ", n_alpha "
         << step.n_alpha << ", shifts " << join(step.shifts, " ") << "\n";
  }
  text << "containments re-verified: " << (check.ok ? "yes" : "NO") << "\n";
  for (const auto& f : check.failures) text << "  failure: " << f << "\n";
  if (chain.exhausted_at) {
    text << "WitnessExhausted: no admissible alpha at depth " << *chain.exhausted_at << "\n";
    r.status = 3;
  }
  if (!check.ok) r.status = 1;
  r.text = text.str();
  return r;
}

Report mixing_report(const ExperimentConfig& cfg, const Overrides& ov) {
  Report r;
  const std::int64_t window = ov.window.value_or(cfg.query.window);
  std::int64_t length = 0;
  const ReturnSet rs = compute_poly_query(cfg, cfg.query.vs, query_polynomials(cfg), window, &length);
  r.table.header = {"truncation", "generators", "witness_alpha", "witness_n", "status"};
  std::ostringstream text;
  text << "mixing report on " << system_header(cfg) << "\n" << summarize(rs)
       << feasibility_line(length);
  const auto member = rs.as_window_set().predicate();
  for (const auto& [name, gens] : truncations_for(cfg, ov)) {
    const auto t = FSTruncation::enumerate(gens);
    const auto hit = ip_witness(member, t);
    r.table.add({name, join(gens, " "), hit ? format_index_set(hit->alpha) : "",
                 hit ? std::to_string(hit->value) : "", hit ? "witness" : "inconclusive"});
    text << name << " " << t.describe() << ": ";
    if (hit) {
      text << "witness alpha " << format_index_set(hit->alpha) << ", n_alpha " << hit->value << "\n";
    } else {
      text << "inconclusive (no n_alpha in the return set within the window)\n";
    }
  }
  text << evidence_note(cfg);
  r.text = text.str();
  return r;
}

}  // namespace

Report run(std::string_view subcommand, const ExperimentConfig& config, const Overrides& overrides) {
  Report report;
  if (subcommand == "pet-trace") {
    report = pet_trace(config);
  } else if (subcommand == "weights") {
    report = weights(config);
  } else if (subcommand == "fs") {
    report = fs(config, overrides);
  } else if (subcommand == "hindman") {
    report = hindman(config, overrides);
  } else if (subcommand == "density") {
    report = density(config, overrides);
  } else if (subcommand == "return-set") {
    report = return_set_cmd(config, overrides);
  } else if (subcommand == "poly-return") {
    report = poly_return(config, overrides);
  } else if (subcommand == "lemma213") {
    report = lemma213(config, overrides);
  } else if (subcommand == "mixing-report") {
    report = mixing_report(config, overrides);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown subcommand '" + std::string(subcommand) + "'");
  }
  report.name = std::string(subcommand);
  return report;
}

}  // namespace ipdyn
