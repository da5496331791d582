#include "abvortex/cross_section.hpp"

#include <cmath>
#include <string>

#include "abvortex/error.hpp"
#include "abvortex/numeric.hpp"

namespace abvortex {

namespace {

using namespace std::complex_literals;

void require_off_forward(double phi) {
  if (!std::isfinite(phi))
    throw Error(ErrorKind::InvalidInput, "scattering angle must be finite");
  if (std::remainder(phi, 2.0 * kPi) == 0.0)
    throw Error(ErrorKind::ForwardSingularity,
                "cross section is singular in the forward direction (phi = 0 mod 2pi)");
}

void require_positive_k(double k) {
  if (!(k > 0.0)) throw Error(ErrorKind::NonpositiveEnergy, "wavenumber must be positive");
}

// (2 pi i k)^{-1/2}, principal branch.
std::complex<double> amplitude_prefactor(double k) {
  return 1.0 / std::sqrt(2.0i * kPi * k);
}

}  // namespace

double standard_cross_section(double k, double phi, double alpha) {
  require_positive_k(k);
  require_off_forward(phi);
  const double s = std::sin(kPi * alpha);
  const double h = std::sin(0.5 * phi);
  return s * s / (2.0 * kPi * k * h * h);
}

double cross_section_from_corrections(double k, double phi, double alpha,
                                      CorrectionPair d) {
  const double standard = standard_cross_section(k, phi, alpha);
  const double pa = kPi * alpha;
  const double sa = std::sin(d.minus_n);
  const double sb = std::sin(d.minus_n1);
  const double bracket = sa * std::cos(d.minus_n - pa + 0.5 * phi) +
                         sb * std::cos(d.minus_n1 + pa - 0.5 * phi);
  return standard + 8.0 * kPi / k * (sa * sa + sb * sb) +
         4.0 / k * std::sin(pa) / std::sin(0.5 * phi) * bracket;
}

double modified_cross_section(const Kinematics& kin, double phi,
                              const FluxDecomposition& flux,
                              const ExtensionSpec& spec) {
  const double k = wavenumber(kin);
  return cross_section_from_corrections(k, phi, flux.alpha,
                                        corrections(flux, kin.energy, spec));
}

AmplitudeSample amplitude_from_corrections(double k, double phi,
                                           const FluxDecomposition& flux,
                                           CorrectionPair d) {
  require_positive_k(k);
  require_off_forward(phi);
  const auto pre = amplitude_prefactor(k);

  AmplitudeSample a;
  a.phi = phi;
  // sum_l e^{i pi (|l|-|l+alpha|)} e^{il phi}, Abel-summed, for phi != 0.
  a.f_standard = pre * std::sin(kPi * flux.alpha) *
                 std::polar(1.0, -(static_cast<double>(flux.n) + 0.5) * phi) /
                 std::sin(0.5 * phi);

  auto channel_term = [&](long l, double correction) {
    const double delta0 = standard_phase_shift(l, flux.alpha);
    return std::polar(1.0, 2.0 * delta0) * (std::polar(1.0, 2.0 * correction) - 1.0) *
           std::polar(1.0, static_cast<double>(l) * phi);
  };
  a.f_correction = pre * (channel_term(flux.channel_n(), d.minus_n) +
                          channel_term(flux.channel_n1(), d.minus_n1));
  a.f = a.f_standard + a.f_correction;
  return a;
}

AmplitudeSample amplitude_oracle(const Kinematics& kin, double phi,
                                 const FluxDecomposition& flux,
                                 const ExtensionSpec& spec) {
  return amplitude_from_corrections(wavenumber(kin), phi, flux,
                                    corrections(flux, kin.energy, spec));
}

double asymmetry_from_corrections(double k, double phi, double alpha,
                                  CorrectionPair d) {
  return cross_section_from_corrections(k, phi, alpha, d) -
         cross_section_from_corrections(k, -phi, alpha, d);
}

double asymmetry(const Kinematics& kin, double phi,
                 const FluxDecomposition& flux, const ExtensionSpec& spec) {
  return modified_cross_section(kin, phi, flux, spec) -
         modified_cross_section(kin, -phi, flux, spec);
}

double transverse_integral(const std::function<double(double)>& asym,
                           std::size_t steps) {
  if (steps < 64 || steps % 2 != 0)
    throw Error(ErrorKind::InvalidInput,
                "quadrature needs an even step count of at least 64, got " +
                    std::to_string(steps));
  // Pair the nodes +-phi: sin(phi) dsigma(phi) + sin(-phi) dsigma(-phi)
  // = sin(phi) asym(phi). The forward pole of the standard term cancels
  // exactly between the pair, leaving a smooth even integrand.
  auto paired = [&](double phi) { return std::sin(phi) * asym(phi); };

  const std::size_t half = steps / 2;
  const double h = 2.0 * kPi / static_cast<double>(steps);
  auto weight = [&](std::size_t i) {
    if (i == 0 || i == steps) return 1.0;
    return i % 2 == 1 ? 4.0 : 2.0;
  };

  double sum = 0.0;
  for (std::size_t i = 0; i < half; ++i) {
    const double phi = kPi - h * static_cast<double>(i);
    sum += weight(i) * paired(phi);
  }
  // Continuous limit at phi = 0 of the symmetrized integrand paired/2,
  // Richardson-extrapolated from two small angles.
  const double eps = 1e-3;
  const double limit = (4.0 * paired(eps) - paired(2.0 * eps)) / 3.0 * 0.5;
  sum += weight(half) * limit;
  return sum * h / 3.0;
}

double transverse_from_corrections(double k, double alpha, CorrectionPair d,
                                   std::size_t steps) {
  return transverse_integral(
      [&](double phi) { return asymmetry_from_corrections(k, phi, alpha, d); },
      steps);
}

double transverse_cross_section(const Kinematics& kin,
                                const FluxDecomposition& flux,
                                const ExtensionSpec& spec,
                                std::size_t quadrature_steps) {
  const double k = wavenumber(kin);
  return transverse_from_corrections(k, flux.alpha,
                                     corrections(flux, kin.energy, spec),
                                     quadrature_steps);
}

std::vector<double> make_phi_grid(double phi_min, double phi_max,
                                  std::size_t steps) {
  if (!(phi_min > 0.0) || !(phi_max <= kPi) || !(phi_min <= phi_max))
    throw Error(ErrorKind::InvalidInput, "phi grid needs 0 < phi_min <= phi_max <= pi");
  if (steps < 2 || steps % 2 != 0)
    throw Error(ErrorKind::InvalidInput, "phi grid needs an even number of points >= 2");
  const std::size_t per_side = steps / 2;
  std::vector<double> side(per_side);
  for (std::size_t i = 0; i < per_side; ++i)
    side[i] = per_side == 1 ? phi_min
                            : phi_min + (phi_max - phi_min) * static_cast<double>(i) /
                                            static_cast<double>(per_side - 1);
  std::vector<double> grid;
  grid.reserve(steps);
  for (auto it = side.rbegin(); it != side.rend(); ++it) grid.push_back(-*it);
  grid.insert(grid.end(), side.begin(), side.end());
  return grid;
}

AngularProfile angular_profile(const Kinematics& kin,
                               const FluxDecomposition& flux,
                               const ExtensionSpec& spec,
                               const std::vector<double>& phi_grid) {
  AngularProfile p;
  p.k = wavenumber(kin);
  p.energy = kin.energy;
  p.flux = flux;
  p.spec = spec;
  p.phi_grid = phi_grid;
  const auto d = corrections(flux, kin.energy, spec);
  p.dsigma_total.reserve(phi_grid.size());
  p.dsigma_standard.reserve(phi_grid.size());
  for (double phi : phi_grid) {
    const double total = cross_section_from_corrections(p.k, phi, flux.alpha, d);
    if (total < 0.0) ++p.negative_count;
    p.dsigma_total.push_back(total);
    p.dsigma_standard.push_back(standard_cross_section(p.k, phi, flux.alpha));
  }
  return p;
}

}  // namespace abvortex
