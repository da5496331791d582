#include "abvortex/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>
#include <vector>

#include "abvortex/cli/verification.hpp"
#include "abvortex/cross_section.hpp"
#include "abvortex/error.hpp"
#include "abvortex/hall.hpp"
#include "abvortex/phase_shifts.hpp"

namespace abvortex::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string error_status(const std::exception& e) {
  std::string s = "error: ";
  if (const auto* err = dynamic_cast<const Error*>(&e)) s += std::string(to_string(err->kind())) + ": ";
  s += e.what();
  std::replace_if(s.begin(), s.end(), [](char c) { return c == ',' || c == '\n' || c == '"'; }, ';');
  return s;
}

bool is_error_status(const std::string& s) { return s.rfind("error", 0) == 0; }

Kinematics kinematics(const RunConfig& cfg, double energy) {
  if (cfg.units == UnitSystem::Explicit) return Kinematics::explicit_units(energy, cfg.mass, cfg.hbar);
  return Kinematics::natural(energy);
}

ExtensionSpec spec_of(const RunConfig& cfg) { return {cfg.e_bound_n, cfg.e_bound_n1}; }

Densities densities_of(const RunConfig& cfg) {
  return {cfg.n_v.value_or(1.0), cfg.n_e.value_or(1.0)};
}

const char* length_unit(const RunConfig& cfg) {
  return cfg.units == UnitSystem::Natural ? "hbar/sqrt(2m E0)" : "length";
}

ResultTable base_table(const RunConfig& cfg, std::vector<Column> columns) {
  ResultTable t;
  t.columns = std::move(columns);
  t.metadata = config_metadata(cfg);
  return t;
}

// Rows computed by index on worker threads, then appended in order.
template <class Fn>
void fill_rows(ResultTable& t, std::size_t n, Fn&& compute) {
  std::vector<Row> rows(n);
  parallel_for(n, thread_cap(), [&](std::size_t i) {
    try {
      rows[i] = compute(i);
    } catch (const std::exception& e) {
      rows[i].values.assign(t.columns.size(), kNaN);
      rows[i].status = error_status(e);
    }
  });
  for (auto& r : rows) t.add_row(std::move(r));
}

ResultTable run_phase_shift(const RunConfig& cfg) {
  const auto flux = decompose_flux(*cfg.alpha);
  const auto spec = spec_of(cfg);
  validate_extension(spec, flux);
  const long l_min = cfg.l_min.value_or(flux.channel_n1() - 1);
  const long l_max = cfg.l_max.value_or(flux.channel_n() + 1);
  auto t = base_table(cfg, {{"l", "1"}, {"delta0", "rad"}, {"correction", "rad"}, {"total", "rad"}});
  fill_rows(t, static_cast<std::size_t>(l_max - l_min + 1), [&](std::size_t i) {
    const long l = l_min + static_cast<long>(i);
    const auto p = total_phase_shift(l, flux, *cfg.energy, spec);
    return Row{{static_cast<double>(l), p.delta0, p.correction, p.total}};
  });
  return t;
}

ResultTable run_cross_section(const RunConfig& cfg) {
  const auto flux = decompose_flux(*cfg.alpha);
  const auto spec = spec_of(cfg);
  validate_extension(spec, flux);
  const auto kin = kinematics(cfg, *cfg.energy);
  const double k = wavenumber(kin);
  const auto d = corrections(flux, kin.energy, spec);
  const auto grid = make_phi_grid(cfg.phi_min, cfg.phi_max, cfg.phi_steps);
  const std::string per_rad = std::string(length_unit(cfg)) + "/rad";
  auto t = base_table(cfg, {{"phi", "rad"},
                            {"dsigma_total", per_rad},
                            {"dsigma_standard", per_rad},
                            {"dsigma_oracle", per_rad},
                            {"asymmetry", per_rad}});
  fill_rows(t, grid.size(), [&](std::size_t i) {
    const double phi = grid[i];
    const double total = cross_section_from_corrections(k, phi, flux.alpha, d);
    Row row{{phi, total, standard_cross_section(k, phi, flux.alpha),
             amplitude_from_corrections(k, phi, flux, d).cross_section(),
             asymmetry_from_corrections(k, phi, flux.alpha, d)}};
    if (total < 0.0) row.status = "negative-closed-form";
    return row;
  });
  return t;
}

ResultTable run_resonance(const RunConfig& cfg) {
  const auto flux = decompose_flux(*cfg.alpha);
  const auto spec = spec_of(cfg);
  validate_extension(spec, flux);
  auto t = base_table(cfg, {{"eta", "1"}, {"e_bound", "energy"}, {"e_res_closed", "energy"},
                            {"e_res_numeric", "energy"}});
  // Below eta = 1/2 the resonance lives in l = -n, above it in l = -n-1.
  const bool upper = flux.eta > 0.5;
  const long channel = upper ? flux.channel_n1() : flux.channel_n();
  const auto& e_bound = upper ? spec.e_bound_n1 : spec.e_bound_n;

  Row row{{flux.eta, e_bound.value_or(kNaN), kNaN, kNaN}};
  const auto closed = resonance_energy(flux, spec);
  if (closed.energy) row.values[2] = *closed.energy;

  std::optional<EnergyBracket> bracket;
  if (cfg.bracket_lo) bracket = EnergyBracket{*cfg.bracket_lo, *cfg.bracket_hi};
  else if (e_bound) bracket = resonance_bracket(flux, spec, channel);

  std::vector<std::string> notes;
  if (!bracket) {
    notes.push_back("no-resonance");
  } else {
    try {
      row.values[3] = find_resonance_numeric(flux, spec, channel, *bracket);
    } catch (const std::exception& e) {
      notes.push_back(error_status(e));
    }
  }
  if (!closed.energy && bracket) notes.push_back("closed-form-unsupported");
  if (!notes.empty()) {
    row.status.clear();
    for (const auto& n : notes) row.status += (row.status.empty() ? "" : ";") + n;
  }
  t.add_row(std::move(row));
  return t;
}

ResultTable run_hall(const RunConfig& cfg) {
  const auto flux = decompose_flux(*cfg.alpha);
  const auto spec = spec_of(cfg);
  validate_extension(spec, flux);
  const auto r = hall_resistivity(densities_of(cfg), kinematics(cfg, *cfg.energy), flux, spec,
                                  {cfg.quadrature_steps, cfg.hall_unit});
  const std::string unit = cfg.hall_unit == 1.0 ? "hc^2/e^2" : "user";
  auto t = base_table(cfg, {{"alpha", "1"}, {"rho_xy", unit}, {"rho_xy_quadrature", unit}});
  t.add_row({{flux.alpha, r.rho_xy, r.rho_xy_quadrature}});
  return t;
}

ResultTable run_sweep(const RunConfig& cfg) {
  const auto alphas = cfg.sweep_alpha ? cfg.sweep_alpha->values() : std::vector<double>{*cfg.alpha};
  const auto energies =
      cfg.sweep_energy ? cfg.sweep_energy->values() : std::vector<double>{*cfg.energy};
  const SpecRule rule = cfg.spec_rule == SpecRuleKind::Fixed
                            ? fixed_spec_rule(spec_of(cfg))
                            : eta_scaled_spec_rule(cfg.e_bound_n, cfg.e_bound_n1);
  const std::string unit = cfg.hall_unit == 1.0 ? "hc^2/e^2" : "user";
  auto t = base_table(cfg, {{"alpha", "1"},
                            {"energy", "energy"},
                            {"e_bound_n", "energy"},
                            {"e_bound_n1", "energy"},
                            {"correction_n", "rad"},
                            {"correction_n1", "rad"},
                            {"e_res_closed", "energy"},
                            {"rho_xy", unit},
                            {"rho_xy_quadrature", unit}});
  // Flux-major order.
  fill_rows(t, alphas.size() * energies.size(), [&](std::size_t i) {
    const double alpha = alphas[i / energies.size()];
    const double energy = energies[i % energies.size()];
    const auto flux = decompose_flux(alpha);
    const auto spec = rule(flux);
    validate_extension(spec, flux);
    const auto kin = kinematics(cfg, energy);
    const auto d = corrections(flux, energy, spec);
    const auto hall = hall_from_corrections(wavenumber(kin), alpha, d, densities_of(cfg),
                                            {cfg.quadrature_steps, cfg.hall_unit});
    const auto res = resonance_energy(flux, spec);
    return Row{{alpha, energy, spec.e_bound_n.value_or(kNaN), spec.e_bound_n1.value_or(kNaN),
                d.minus_n, d.minus_n1, res.energy.value_or(kNaN), hall.rho_xy,
                hall.rho_xy_quadrature}};
  });
  return t;
}

}  // namespace

std::size_t thread_cap() {
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("AB_VORTEX_THREADS");
  if (!env) return hw;
  const std::string text(env);
  if (text.empty() || !std::all_of(text.begin(), text.end(), ::isdigit) ||
      std::stoul(text) == 0)
    throw UsageError("AB_VORTEX_THREADS must be a positive integer, got '" + text + "'");
  return std::stoul(text);
}

void parallel_for(std::size_t n, std::size_t threads,
                  const std::function<void(std::size_t)>& body) {
  threads = std::min(std::max<std::size_t>(threads, 1), n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

RunOutput run(const RunConfig& cfg) {
  RunOutput out;
  thread_cap();
  switch (cfg.subcommand) {
    case Subcommand::PhaseShift: out.table = run_phase_shift(cfg); break;
    case Subcommand::CrossSection: out.table = run_cross_section(cfg); break;
    case Subcommand::Resonance: out.table = run_resonance(cfg); break;
    case Subcommand::Hall: out.table = run_hall(cfg); break;
    case Subcommand::Sweep: out.table = run_sweep(cfg); break;
    case Subcommand::Verify: {
      const std::string path = cfg.report_path.value_or(AB_VORTEX_DEFAULT_REPORT);
      if (cfg.update_report) {
        write_report(path);
        out.text = "wrote " + path + "\n";
        return out;
      }
      const auto checks = run_verification(path);
      std::ostringstream text;
      bool ok = true;
      for (const auto& c : checks) {
        text << (c.passed ? "PASS " : "FAIL ") << c.name << "  measured=" << format_real(c.measured)
             << " tolerance=" << format_real(c.tolerance);
        if (!c.detail.empty()) text << "  (" << c.detail << ")";
        text << '\n';
        ok = ok && c.passed;
      }
      out.text = text.str();
      out.exit_code = ok ? kExitOk : kExitVerifyFailed;
      return out;
    }
  }
  for (const auto& row : out.table.rows)
    if (is_error_status(row.status)) out.exit_code = kExitNumeric;
  return out;
}

std::string render(const RunConfig& cfg, const ResultTable& table) {
  return cfg.format == OutputFormat::Json ? to_json(table) : to_csv(table);
}

int main_entry(const std::vector<std::string>& args, std::string& out, std::string& err) {
  RunConfig cfg;
  try {
    cfg = parse_config(args);
  } catch (const HelpRequested& h) {
    out = h.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err = std::string("usage error: ") + e.what() + "\nrun with --help for the flag list\n";
    return kExitUsage;
  }

  RunOutput result;
  try {
    result = run(cfg);
  } catch (const UsageError& e) {
    err = std::string("usage error: ") + e.what() + "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err = std::string("error: ") + e.what() + "\n";
    return kExitNumeric;
  }

  if (cfg.subcommand == Subcommand::Verify) {
    out = result.text;
    return result.exit_code;
  }
  const std::string body = render(cfg, result.table);
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err = "error: cannot open " + *cfg.output_path + " for writing\n";
      return kExitNumeric;
    }
    file << body;
  } else {
    out = body;
  }
  return result.exit_code;
}

}  // namespace abvortex::cli
