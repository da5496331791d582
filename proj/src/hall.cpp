#include "abvortex/hall.hpp"

#include <cmath>

#include "abvortex/cross_section.hpp"
#include "abvortex/error.hpp"

namespace abvortex {

namespace {

void require_positive(Densities rho) {
  if (!(rho.vortices > 0.0) || !(rho.electrons > 0.0))
    throw Error(ErrorKind::InvalidInput, "vortex and electron densities must be positive");
}

}  // namespace

double hall_closed_form(double alpha, CorrectionPair d, Densities rho) {
  require_positive(rho);
  const double pa = kPi * alpha;
  const double bracket = std::sin(d.minus_n) * std::cos(d.minus_n - pa) +
                         std::sin(d.minus_n1) * std::cos(d.minus_n1 + pa);
  return 4.0 * rho.vortices / rho.electrons * std::sin(pa) * bracket;
}

double hall_from_transverse(double k, double sigma_perp, Densities rho) {
  require_positive(rho);
  return rho.vortices * k / (2.0 * kPi * rho.electrons) * sigma_perp;
}

HallResult hall_from_corrections(double k, double alpha, CorrectionPair d,
                                 Densities rho, HallOptions opts) {
  HallResult r;
  r.densities = rho;
  r.rho_xy = opts.hall_unit * hall_closed_form(alpha, d, rho);
  const double sigma_perp =
      transverse_from_corrections(k, alpha, d, opts.quadrature_steps);
  r.rho_xy_quadrature = opts.hall_unit * hall_from_transverse(k, sigma_perp, rho);
  return r;
}

HallResult hall_resistivity(Densities rho, const Kinematics& kin,
                            const FluxDecomposition& flux,
                            const ExtensionSpec& spec, HallOptions opts) {
  require_positive(rho);
  const double k = wavenumber(kin);
  return hall_from_corrections(k, flux.alpha, corrections(flux, kin.energy, spec),
                               rho, opts);
}

SpecRule fixed_spec_rule(ExtensionSpec spec) {
  return [spec](const FluxDecomposition&) { return spec; };
}

SpecRule eta_scaled_spec_rule(std::optional<double> base_n,
                              std::optional<double> base_n1) {
  return [base_n, base_n1](const FluxDecomposition& flux) {
    ExtensionSpec s;
    // At integer flux the scaled energy would vanish; the channel is forced
    // conventional there anyway.
    if (base_n && flux.eta > 0.0) s.e_bound_n = *base_n * flux.eta;
    if (base_n1) s.e_bound_n1 = *base_n1 * (1.0 - flux.eta);
    return s;
  };
}

std::vector<std::pair<double, HallResult>> hall_sweep(
    Densities rho, const std::vector<double>& alphas, const Kinematics& kin,
    const SpecRule& rule, HallOptions opts) {
  if (alphas.empty())
    throw Error(ErrorKind::InvalidInput, "flux range must not be empty");
  std::vector<std::pair<double, HallResult>> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    const auto flux = decompose_flux(alpha);
    out.emplace_back(alpha, hall_resistivity(rho, kin, flux, rule(flux), opts));
  }
  return out;
}

}  // namespace abvortex
