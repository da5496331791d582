#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "abvortex/flux.hpp"
#include "abvortex/phase_shifts.hpp"

namespace abvortex {

struct Densities {
  double vortices = 1.0;   // n_v, per area
  double electrons = 1.0;  // n_e, per area
};

/// Hall resistivity in the dilute-vortex limit. Values are in units of
/// hc^2/e^2 unless a different `hall_unit` was supplied.
struct HallResult {
  double rho_xy = 0.0;
  double rho_xy_quadrature = 0.0;
  Densities densities;
};

struct HallOptions {
  std::size_t quadrature_steps = 1u << 14;
  // Value of hc^2/e^2 in the caller's units; 1 reports in units of hc^2/e^2.
  double hall_unit = 1.0;
};

/// (4 n_v/n_e) sin(pi alpha) [sin D_-n cos(D_-n - pi alpha)
///                            + sin D_-n-1 cos(D_-n-1 + pi alpha)]
double hall_closed_form(double alpha, CorrectionPair d, Densities rho);

/// (n_v k / 2 pi n_e) * sigma_perp.
double hall_from_transverse(double k, double sigma_perp, Densities rho);

HallResult hall_from_corrections(double k, double alpha, CorrectionPair d,
                                 Densities rho, HallOptions opts = {});

HallResult hall_resistivity(Densities rho, const Kinematics& kin,
                            const FluxDecomposition& flux,
                            const ExtensionSpec& spec, HallOptions opts = {});

/// Assigns the extension for each flux value of a sweep.
using SpecRule = std::function<ExtensionSpec(const FluxDecomposition&)>;

SpecRule fixed_spec_rule(ExtensionSpec spec);

/// |E_-n| = base_n * eta and |E_-n-1| = base_n1 * (1 - eta); a channel whose
/// base is absent stays conventional.
SpecRule eta_scaled_spec_rule(std::optional<double> base_n,
                              std::optional<double> base_n1);

std::vector<std::pair<double, HallResult>> hall_sweep(
    Densities rho, const std::vector<double>& alphas, const Kinematics& kin,
    const SpecRule& rule, HallOptions opts = {});

}  // namespace abvortex
