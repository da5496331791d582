#include "abvortex/cli/config.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>

namespace abvortex::cli {

namespace {

std::string format_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
}

SweepRange parse_range(const std::string& text, const std::string& what) {
  const auto a = text.find(':');
  const auto b = a == std::string::npos ? a : text.find(':', a + 1);
  if (b == std::string::npos)
    throw UsageError(what + ": expected FROM:TO:COUNT, got '" + text + "'");
  SweepRange r;
  r.from = parse_double(text.substr(0, a), what);
  r.to = parse_double(text.substr(a + 1, b - a - 1), what);
  const std::string count = text.substr(b + 1);
  if (count.empty() || !std::all_of(count.begin(), count.end(), ::isdigit))
    throw UsageError(what + ": COUNT must be a positive integer, got '" + count + "'");
  r.count = std::stoul(count);
  if (r.count == 0) throw UsageError(what + ": COUNT must be positive");
  return r;
}

std::string range_text(const SweepRange& r) {
  return format_exact(r.from) + ":" + format_exact(r.to) + ":" + std::to_string(r.count);
}

struct Flags {
  std::optional<double> alpha, energy, e_bound_n, e_bound_n1, n_v, n_e;
  std::optional<double> phi_min, phi_max;
  std::optional<std::size_t> phi_steps;
  std::string format = "csv";
  std::optional<std::string> output;
  std::string units = "natural";
  std::optional<double> mass, hbar, hall_unit;
  std::optional<long> l_min, l_max;
  std::optional<std::size_t> quadrature_steps;
  std::optional<double> bracket_lo, bracket_hi;
  std::optional<std::string> sweep_alpha, sweep_energy;
  std::string spec_rule = "fixed";
  std::optional<std::string> report;
  bool update_report = false;
};

void add_physics(CLI::App* sub, Flags& f, bool needs_energy) {
  sub->add_option("--alpha", f.alpha, "Flux in units of the flux quantum")->required();
  auto* e = sub->add_option("--energy", f.energy, "Scattering energy")
                ->check(CLI::PositiveNumber);
  if (needs_energy) e->required();
  sub->add_option("--e-bound-n", f.e_bound_n, "Bound-state energy |E_-n|")
      ->check(CLI::PositiveNumber);
  sub->add_option("--e-bound-n1", f.e_bound_n1, "Bound-state energy |E_-n-1|")
      ->check(CLI::PositiveNumber);
}

void add_output(CLI::App* sub, Flags& f) {
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output,-o", f.output, "Output file (stdout when omitted)");
  sub->add_option("--units", f.units, "Unit system")
      ->check(CLI::IsMember({"natural", "explicit"}));
  sub->add_option("--mass", f.mass, "Particle mass (explicit units)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--hbar", f.hbar, "Reduced Planck constant (explicit units)")
      ->check(CLI::PositiveNumber);
}

void add_densities(CLI::App* sub, Flags& f, bool required) {
  auto* v = sub->add_option("--n-v", f.n_v, "Vortex density")->check(CLI::PositiveNumber);
  auto* e = sub->add_option("--n-e", f.n_e, "Electron density")->check(CLI::PositiveNumber);
  if (required) {
    v->required();
    e->required();
  }
  sub->add_option("--hall-unit", f.hall_unit, "Value of hc^2/e^2 in output units")
      ->check(CLI::PositiveNumber);
  sub->add_option("--quadrature-steps", f.quadrature_steps,
                  "Simpson intervals for the transverse cross section")
      ->check(CLI::Range(std::size_t{64}, std::size_t{1} << 26));
}

}  // namespace

std::vector<double> SweepRange::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i)
    v[i] = count == 1 ? from
                      : from + (to - from) * static_cast<double>(i) /
                                   static_cast<double>(count - 1);
  return v;
}

const char* to_string(Subcommand s) {
  switch (s) {
    case Subcommand::PhaseShift: return "phase-shift";
    case Subcommand::CrossSection: return "cross-section";
    case Subcommand::Resonance: return "resonance";
    case Subcommand::Hall: return "hall";
    case Subcommand::Sweep: return "sweep";
    case Subcommand::Verify: return "verify";
  }
  return "unknown";
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Aharonov-Bohm scattering with nonstandard boundary conditions",
               kToolName};
  app.require_subcommand(1);
  Flags f;

  auto* phase = app.add_subcommand("phase-shift", "Per-channel phase shifts");
  add_physics(phase, f, true);
  add_output(phase, f);
  phase->add_option("--l-min", f.l_min, "Smallest angular momentum (default -n-2)");
  phase->add_option("--l-max", f.l_max, "Largest angular momentum (default -n+1)");

  auto* cross = app.add_subcommand("cross-section", "Differential cross section on a phi grid");
  add_physics(cross, f, true);
  add_output(cross, f);
  cross->add_option("--phi-min", f.phi_min, "Forward window half-width (rad)");
  cross->add_option("--phi-max", f.phi_max, "Largest |phi| (rad)");
  cross->add_option("--phi-steps", f.phi_steps, "Grid points, split evenly over phi<0 and phi>0");

  auto* res = app.add_subcommand("resonance", "Resonance energy, closed form and numeric");
  add_physics(res, f, false);
  add_output(res, f);
  res->add_option("--bracket-lo", f.bracket_lo, "Lower end of the search bracket")
      ->check(CLI::PositiveNumber);
  res->add_option("--bracket-hi", f.bracket_hi, "Upper end of the search bracket")
      ->check(CLI::PositiveNumber);

  auto* hall = app.add_subcommand("hall", "Dilute-vortex Hall resistivity");
  add_physics(hall, f, true);
  add_output(hall, f);
  add_densities(hall, f, true);

  auto* sweep = app.add_subcommand("sweep", "Cartesian sweep over flux and/or energy");
  sweep->add_option("--alpha", f.alpha, "Fixed flux when not swept");
  sweep->add_option("--energy", f.energy, "Fixed energy when not swept")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--e-bound-n", f.e_bound_n, "Bound-state energy |E_-n| (or base for eta-scaled)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--e-bound-n1", f.e_bound_n1, "Bound-state energy |E_-n-1| (or base)")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--sweep-alpha", f.sweep_alpha, "FROM:TO:COUNT");
  sweep->add_option("--sweep-energy", f.sweep_energy, "FROM:TO:COUNT");
  sweep->add_option("--spec-rule", f.spec_rule, "How bound energies follow the flux")
      ->check(CLI::IsMember({"fixed", "eta-scaled"}));
  add_output(sweep, f);
  add_densities(sweep, f, false);

  auto* verify = app.add_subcommand("verify", "Run the invariant and oracle suite");
  verify->add_option("--report", f.report, "Reconciliation report to check");
  verify->add_flag("--update-report", f.update_report, "Regenerate the report instead of checking it");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    std::string where;
    for (auto* sub : app.get_subcommands()) where = sub->get_name() + ": ";
    throw UsageError(where + e.what());
  }

  RunConfig cfg;
  const auto* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  if (name == "phase-shift") cfg.subcommand = Subcommand::PhaseShift;
  else if (name == "cross-section") cfg.subcommand = Subcommand::CrossSection;
  else if (name == "resonance") cfg.subcommand = Subcommand::Resonance;
  else if (name == "hall") cfg.subcommand = Subcommand::Hall;
  else if (name == "sweep") cfg.subcommand = Subcommand::Sweep;
  else cfg.subcommand = Subcommand::Verify;

  cfg.alpha = f.alpha;
  cfg.energy = f.energy;
  cfg.e_bound_n = f.e_bound_n;
  cfg.e_bound_n1 = f.e_bound_n1;
  if (f.phi_min) cfg.phi_min = *f.phi_min;
  if (f.phi_max) cfg.phi_max = *f.phi_max;
  if (f.phi_steps) cfg.phi_steps = *f.phi_steps;
  cfg.n_v = f.n_v;
  cfg.n_e = f.n_e;
  cfg.format = f.format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  cfg.output_path = f.output;
  cfg.l_min = f.l_min;
  cfg.l_max = f.l_max;
  if (f.quadrature_steps) cfg.quadrature_steps = *f.quadrature_steps;
  if (f.hall_unit) cfg.hall_unit = *f.hall_unit;
  cfg.bracket_lo = f.bracket_lo;
  cfg.bracket_hi = f.bracket_hi;
  if (f.sweep_alpha) cfg.sweep_alpha = parse_range(*f.sweep_alpha, "--sweep-alpha");
  if (f.sweep_energy) cfg.sweep_energy = parse_range(*f.sweep_energy, "--sweep-energy");
  cfg.spec_rule = f.spec_rule == "eta-scaled" ? SpecRuleKind::EtaScaled : SpecRuleKind::Fixed;
  cfg.report_path = f.report;
  cfg.update_report = f.update_report;

  if (f.units == "explicit") {
    if (!f.mass || !f.hbar)
      throw UsageError(name + ": --units explicit requires --mass and --hbar");
    cfg.units = UnitSystem::Explicit;
    cfg.mass = *f.mass;
    cfg.hbar = *f.hbar;
  } else if (f.mass || f.hbar) {
    throw UsageError(name + ": --mass/--hbar only apply with --units explicit");
  }

  if (cfg.alpha && !std::isfinite(*cfg.alpha))
    throw UsageError(name + ": --alpha must be finite");
  if (!(cfg.phi_min > 0.0))
    throw UsageError(name + ": --phi-min must be positive (forward direction is singular)");
  if (!(cfg.phi_max <= kPi) || !(cfg.phi_max >= cfg.phi_min))
    throw UsageError(name + ": --phi-max must lie in [phi-min, pi]");
  if (cfg.phi_steps < 2 || cfg.phi_steps % 2 != 0)
    throw UsageError(name + ": --phi-steps must be an even number >= 2");
  if (cfg.quadrature_steps % 2 != 0)
    throw UsageError(name + ": --quadrature-steps must be even");
  if (cfg.l_min && cfg.l_max && *cfg.l_min > *cfg.l_max)
    throw UsageError(name + ": --l-min exceeds --l-max");
  if (cfg.bracket_lo.has_value() != cfg.bracket_hi.has_value())
    throw UsageError(name + ": --bracket-lo and --bracket-hi go together");
  if (cfg.bracket_lo && !(*cfg.bracket_lo < *cfg.bracket_hi))
    throw UsageError(name + ": --bracket-lo must be below --bracket-hi");

  if (cfg.subcommand == Subcommand::Resonance && !cfg.e_bound_n && !cfg.e_bound_n1)
    throw UsageError(name + ": a resonance needs --e-bound-n or --e-bound-n1");
  if (cfg.subcommand == Subcommand::Sweep) {
    if (!cfg.sweep_alpha && !cfg.sweep_energy)
      throw UsageError(name + ": give --sweep-alpha and/or --sweep-energy");
    if (!cfg.sweep_alpha && !cfg.alpha)
      throw UsageError(name + ": --alpha is required unless --sweep-alpha is given");
    if (!cfg.sweep_energy && !cfg.energy)
      throw UsageError(name + ": --energy is required unless --sweep-energy is given");
    if (cfg.sweep_energy && (!(cfg.sweep_energy->from > 0.0) || !(cfg.sweep_energy->to > 0.0)))
      throw UsageError(name + ": swept energies must be positive");
  }
  return cfg;
}

std::vector<std::pair<std::string, std::string>> config_metadata(const RunConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> m;
  auto put = [&](const char* key, const std::string& v) { m.emplace_back(key, v); };
  auto put_opt = [&](const char* key, const std::optional<double>& v) {
    if (v) put(key, format_exact(*v));
  };
  put("tool", kToolName);
  put("version", kToolVersion);
  put("subcommand", to_string(cfg.subcommand));
  put("unit_system", cfg.units == UnitSystem::Natural ? "natural" : "explicit");
  put("mass", format_exact(cfg.mass));
  put("hbar", format_exact(cfg.hbar));
  put_opt("alpha", cfg.alpha);
  put_opt("energy", cfg.energy);
  put_opt("e_bound_n", cfg.e_bound_n);
  put_opt("e_bound_n1", cfg.e_bound_n1);
  put("phi_min", format_exact(cfg.phi_min));
  put("phi_max", format_exact(cfg.phi_max));
  put("phi_steps", std::to_string(cfg.phi_steps));
  put_opt("n_v", cfg.n_v);
  put_opt("n_e", cfg.n_e);
  put("hall_unit", format_exact(cfg.hall_unit));
  if (cfg.l_min) put("l_min", std::to_string(*cfg.l_min));
  if (cfg.l_max) put("l_max", std::to_string(*cfg.l_max));
  put("quadrature_steps", std::to_string(cfg.quadrature_steps));
  put_opt("bracket_lo", cfg.bracket_lo);
  put_opt("bracket_hi", cfg.bracket_hi);
  if (cfg.sweep_alpha) put("sweep_alpha", range_text(*cfg.sweep_alpha));
  if (cfg.sweep_energy) put("sweep_energy", range_text(*cfg.sweep_energy));
  put("spec_rule", cfg.spec_rule == SpecRuleKind::Fixed ? "fixed" : "eta-scaled");
  put("output_format", cfg.format == OutputFormat::Csv ? "csv" : "json");
  return m;
}

RunConfig config_from_metadata(const std::map<std::string, std::string>& meta) {
  RunConfig cfg;
  auto get = [&](const char* key) -> const std::string* {
    auto it = meta.find(key);
    return it == meta.end() ? nullptr : &it->second;
  };
  auto num = [&](const char* key) -> std::optional<double> {
    if (const auto* v = get(key)) return parse_double(*v, key);
    return std::nullopt;
  };
  if (const auto* s = get("subcommand")) {
    for (auto sub : {Subcommand::PhaseShift, Subcommand::CrossSection, Subcommand::Resonance,
                     Subcommand::Hall, Subcommand::Sweep, Subcommand::Verify})
      if (*s == to_string(sub)) cfg.subcommand = sub;
  }
  if (const auto* u = get("unit_system"))
    cfg.units = *u == "explicit" ? UnitSystem::Explicit : UnitSystem::Natural;
  if (auto v = num("mass")) cfg.mass = *v;
  if (auto v = num("hbar")) cfg.hbar = *v;
  cfg.alpha = num("alpha");
  cfg.energy = num("energy");
  cfg.e_bound_n = num("e_bound_n");
  cfg.e_bound_n1 = num("e_bound_n1");
  if (auto v = num("phi_min")) cfg.phi_min = *v;
  if (auto v = num("phi_max")) cfg.phi_max = *v;
  if (const auto* v = get("phi_steps")) cfg.phi_steps = std::stoul(*v);
  cfg.n_v = num("n_v");
  cfg.n_e = num("n_e");
  if (auto v = num("hall_unit")) cfg.hall_unit = *v;
  if (const auto* v = get("l_min")) cfg.l_min = std::stol(*v);
  if (const auto* v = get("l_max")) cfg.l_max = std::stol(*v);
  if (const auto* v = get("quadrature_steps")) cfg.quadrature_steps = std::stoul(*v);
  cfg.bracket_lo = num("bracket_lo");
  cfg.bracket_hi = num("bracket_hi");
  if (const auto* v = get("sweep_alpha")) cfg.sweep_alpha = parse_range(*v, "sweep_alpha");
  if (const auto* v = get("sweep_energy")) cfg.sweep_energy = parse_range(*v, "sweep_energy");
  if (const auto* v = get("spec_rule"))
    cfg.spec_rule = *v == "eta-scaled" ? SpecRuleKind::EtaScaled : SpecRuleKind::Fixed;
  if (const auto* v = get("output_format"))
    cfg.format = *v == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (const auto* v = get("output_path")) cfg.output_path = *v;
  return cfg;
}

}  // namespace abvortex::cli
