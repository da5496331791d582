#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "abvortex/flux.hpp"
#include "abvortex/phase_shifts.hpp"

namespace abvortex {

/// Scattering amplitude at one angle, split into the conventional AB part and
/// the two-channel correction.
struct AmplitudeSample {
  double phi = 0.0;
  std::complex<double> f;
  std::complex<double> f_standard;
  std::complex<double> f_correction;

  double cross_section() const { return std::norm(f); }
};

struct AngularProfile {
  std::vector<double> phi_grid;
  std::vector<double> dsigma_total;
  std::vector<double> dsigma_standard;
  // Number of grid points where the closed-form cross section came out
  // negative. Flagged, never clamped.
  std::size_t negative_count = 0;

  double k = 0.0;
  double energy = 0.0;
  FluxDecomposition flux;
  ExtensionSpec spec;
};

/// sin^2(pi alpha) / (2 pi k sin^2(phi/2)).
double standard_cross_section(double k, double phi, double alpha);

/// The closed-form differential cross section with the corrections supplied
/// directly. This is the entry point for constructed correction values
/// (branch shifts, symmetric configurations) that no bound-state pair reaches.
double cross_section_from_corrections(double k, double phi, double alpha,
                                      CorrectionPair d);

double modified_cross_section(const Kinematics& kin, double phi,
                              const FluxDecomposition& flux,
                              const ExtensionSpec& spec);

/// Partial-wave amplitude f = (2 pi i k)^{-1/2} sum_l (e^{2i delta_l} - 1) e^{il phi}
/// with the conventional series summed in closed form and the two modified
/// channels added exactly.
AmplitudeSample amplitude_from_corrections(double k, double phi,
                                           const FluxDecomposition& flux,
                                           CorrectionPair d);

AmplitudeSample amplitude_oracle(const Kinematics& kin, double phi,
                                 const FluxDecomposition& flux,
                                 const ExtensionSpec& spec);

double asymmetry_from_corrections(double k, double phi, double alpha,
                                  CorrectionPair d);

/// dsigma(phi) - dsigma(-phi).
double asymmetry(const Kinematics& kin, double phi,
                 const FluxDecomposition& flux, const ExtensionSpec& spec);

/// Integral over (-pi, pi) of sin(phi) * dsigma(phi), given the asymmetry
/// function of the cross section. Composite Simpson on `steps` uniform
/// intervals; the phi = 0 node uses the continuous limit of the symmetrized
/// integrand.
double transverse_integral(const std::function<double(double)>& asym,
                           std::size_t steps);

double transverse_from_corrections(double k, double alpha, CorrectionPair d,
                                   std::size_t steps);

double transverse_cross_section(const Kinematics& kin,
                                const FluxDecomposition& flux,
                                const ExtensionSpec& spec,
                                std::size_t quadrature_steps = 1u << 14);

/// Ascending grid with steps/2 points on each of [-phi_max, -phi_min] and
/// [phi_min, phi_max]. `steps` must be even.
std::vector<double> make_phi_grid(double phi_min, double phi_max,
                                  std::size_t steps);

AngularProfile angular_profile(const Kinematics& kin,
                               const FluxDecomposition& flux,
                               const ExtensionSpec& spec,
                               const std::vector<double>& phi_grid);

}  // namespace abvortex
