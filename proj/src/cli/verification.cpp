#include "abvortex/cli/verification.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "abvortex/cross_section.hpp"
#include "abvortex/error.hpp"
#include "abvortex/hall.hpp"
#include "abvortex/phase_shifts.hpp"
#include "abvortex/reconciliation.hpp"

namespace abvortex::cli {

namespace {

double rel(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

CheckResult check_max(std::string name, double measured, double tolerance,
                      std::string detail = {}) {
  return {std::move(name), measured <= tolerance, measured, tolerance, std::move(detail)};
}

const std::vector<double>& default_grid() {
  static const auto grid = make_phi_grid(kPi / 180.0, kPi, 720);
  return grid;
}

CheckResult resonance_check() {
  double worst = 0.0;
  for (double eta : {0.05, 0.1, 0.15, 0.2, 0.25, 1.0 / 3.0, 0.35, 0.4, 0.45}) {
    for (double e_bound : {0.5, 1.0, 2.0}) {
      const auto flux = decompose_flux(eta);
      const ExtensionSpec spec{e_bound, std::nullopt};
      const double closed = *resonance_energy(flux, spec).energy;
      const auto bracket = resonance_bracket(flux, spec, flux.channel_n());
      const double numeric = find_resonance_numeric(flux, spec, flux.channel_n(), *bracket);
      worst = std::max(worst, rel(numeric, closed));
    }
  }
  return check_max("resonance closed form vs bracketing root", worst, 1e-8);
}

CheckResult reduction_check(double ratio, double tolerance, const char* name) {
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double energy = 2.0;
    const auto flux = decompose_flux(alpha);
    const ExtensionSpec spec = ratio > 0.0 ? ExtensionSpec{ratio * energy, ratio * energy}
                                           : ExtensionSpec::conventional();
    const auto kin = Kinematics::natural(energy);
    for (double phi : default_grid()) {
      const double standard = standard_cross_section(wavenumber(kin), phi, alpha);
      worst = std::max(worst, rel(modified_cross_section(kin, phi, flux, spec), standard));
    }
  }
  return check_max(name, worst, tolerance);
}

CheckResult flip_check() {
  double worst = 0.0;
  for (double alpha : {0.25, 0.5, 0.75}) {
    const double energy = 2.0;
    const auto flux = decompose_flux(alpha);
    const ExtensionSpec spec{1e-12 * energy, 1e-12 * energy};
    for (long l : {flux.channel_n(), flux.channel_n1()}) {
      const auto p = total_phase_shift(l, flux, energy, spec);
      worst = std::max(worst, std::abs(p.s_element - std::polar(1.0, -2.0 * p.delta0)));
    }
  }
  return check_max("phase-shift flip at |E_l| = 1e-12 E", worst, 1e-4);
}

CheckResult periodicity_check() {
  struct Point { double alpha, energy; ExtensionSpec spec; };
  const Point points[] = {{0.25, 2.0, {1.0, std::nullopt}},
                          {0.6, 1.5, {0.7, 2.5}},
                          {-1.3, 3.0, {2.0, 0.4}}};
  double worst = 0.0;
  for (const auto& p : points) {
    const auto kin = Kinematics::natural(p.energy);
    const auto a = decompose_flux(p.alpha);
    const auto b = decompose_flux(p.alpha + 1.0);
    for (double phi : default_grid())
      worst = std::max(worst, rel(modified_cross_section(kin, phi, b, p.spec),
                                  modified_cross_section(kin, phi, a, p.spec)));
    const Densities rho{0.01, 1.0};
    worst = std::max(worst, rel(hall_resistivity(rho, kin, b, p.spec).rho_xy,
                                hall_resistivity(rho, kin, a, p.spec).rho_xy));
  }
  return check_max("periodicity alpha -> alpha + 1", worst, 1e-12);
}

std::vector<CheckResult> asymmetry_checks() {
  std::vector<CheckResult> out;
  const auto kin = Kinematics::natural(2.0);
  const double k = wavenumber(kin);

  double worst = 0.0;
  const auto flux = decompose_flux(0.25);
  for (double phi : default_grid())
    worst = std::max(worst, std::abs(asymmetry(kin, phi, flux, ExtensionSpec::conventional())));
  out.push_back(check_max("asymmetry vanishes without corrections", worst, 1e-12));

  const double generic = asymmetry(kin, 0.5 * kPi, flux, {1.0, std::nullopt});
  out.push_back({"asymmetry nonzero at generic point", std::abs(generic) > 0.0,
                 std::abs(generic), 0.0, "must be strictly positive"});

  // D_-n + D_-n-1 = pi, supplied directly.
  const CorrectionPair symmetric{0.7, kPi - 0.7};
  worst = 0.0;
  for (double phi : default_grid())
    worst = std::max(worst, std::abs(asymmetry_from_corrections(k, phi, 0.25, symmetric)));
  out.push_back(check_max("asymmetry vanishes when D_-n + D_-n-1 = 0 mod pi", worst, 1e-10));
  return out;
}

CheckResult branch_check() {
  const auto kin = Kinematics::natural(2.0);
  const double k = wavenumber(kin);
  const auto flux = decompose_flux(0.25);
  const auto d = corrections(flux, 2.0, {1.0, 3.0});
  const Densities rho{0.01, 1.0};
  double worst = 0.0;
  for (const CorrectionPair shifted : {CorrectionPair{d.minus_n + kPi, d.minus_n1},
                                       CorrectionPair{d.minus_n, d.minus_n1 + kPi},
                                       CorrectionPair{d.minus_n - kPi, d.minus_n1 + kPi}}) {
    for (double phi : default_grid())
      worst = std::max(worst, rel(cross_section_from_corrections(k, phi, flux.alpha, shifted),
                                  cross_section_from_corrections(k, phi, flux.alpha, d)));
    worst = std::max(worst, rel(hall_closed_form(flux.alpha, shifted, rho),
                                hall_closed_form(flux.alpha, d, rho)));
  }
  return check_max("branch invariance D -> D + pi", worst, 1e-12);
}

CheckResult hall_quadrature_check() {
  double worst = 0.0;
  const Densities rho{0.01, 1.0};
  for (double eta : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    for (double energy : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      const auto r = hall_resistivity(rho, Kinematics::natural(energy), decompose_flux(eta),
                                      {1.0, 1.5});
      worst = std::max(worst, rel(r.rho_xy_quadrature, r.rho_xy));
    }
  }
  return check_max("Hall closed form vs transverse quadrature", worst, 1e-6);
}

CheckResult oracle_standard_check() {
  double worst = 0.0;
  for (double alpha : {0.25, 1.4, -0.6}) {
    const auto flux = decompose_flux(alpha);
    for (double phi : default_grid()) {
      const auto a = amplitude_from_corrections(1.3, phi, flux, {});
      worst = std::max(worst, rel(std::norm(a.f_standard), standard_cross_section(1.3, phi, alpha)));
    }
  }
  return check_max("|f_standard|^2 reproduces the standard cross section", worst, 1e-12);
}

CheckResult report_check(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return {"reconciliation report is current", false, 1.0, 0.0, "cannot read " + path};
  std::stringstream buf;
  buf << in.rdbuf();
  const auto fresh = reconcile_default();
  const std::string diff = compare_report(fresh, buf.str());
  return {"reconciliation report is current", diff.empty(), diff.empty() ? 0.0 : 1.0, 0.0,
          diff.empty() ? fresh.verdict() : "stale: " + diff};
}

}  // namespace

std::vector<CheckResult> run_verification(const std::string& report_path) {
  std::vector<CheckResult> out;
  auto guarded = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      out.push_back({name, false, NAN, 0.0, e.what()});
    }
  };
  guarded("resonance", [&] { out.push_back(resonance_check()); });
  guarded("reduction", [&] {
    out.push_back(reduction_check(1e8, 1e-5, "conventional reduction at |E_l| = 1e8 E"));
    out.push_back(reduction_check(0.0, 1e-14, "conventional reduction without bound states"));
  });
  guarded("flip", [&] { out.push_back(flip_check()); });
  guarded("periodicity", [&] { out.push_back(periodicity_check()); });
  guarded("asymmetry", [&] {
    for (auto& c : asymmetry_checks()) out.push_back(std::move(c));
  });
  guarded("branch", [&] { out.push_back(branch_check()); });
  guarded("hall", [&] { out.push_back(hall_quadrature_check()); });
  guarded("oracle", [&] { out.push_back(oracle_standard_check()); });
  guarded("report", [&] { out.push_back(report_check(report_path)); });
  return out;
}

void write_report(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << report_to_json(reconcile_default());
}

}  // namespace abvortex::cli
