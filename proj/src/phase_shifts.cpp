#include "abvortex/phase_shifts.hpp"

#include <cmath>

#include "abvortex/error.hpp"
#include "abvortex/numeric.hpp"

namespace abvortex {

namespace {

void require_positive_energy(double energy) {
  if (!(energy > 0.0))
    throw Error(ErrorKind::NonpositiveEnergy, "scattering energy must be positive");
}

const std::optional<double>& bound_energy(long l, const FluxDecomposition& flux,
                                          const ExtensionSpec& spec) {
  return l == flux.channel_n() ? spec.e_bound_n : spec.e_bound_n1;
}

}  // namespace

double standard_phase_shift(long l, double alpha) {
  return 0.5 * kPi * (std::abs(static_cast<double>(l)) - std::abs(l + alpha));
}

double channel_exponent(long l, const FluxDecomposition& flux) {
  if (l == flux.channel_n()) return flux.eta;
  if (l == flux.channel_n1()) return 1.0 - flux.eta;
  throw Error(ErrorKind::WrongChannel,
              "channel l=" + std::to_string(l) + " carries no extension (modified channels are " +
                  std::to_string(flux.channel_n()) + " and " +
                  std::to_string(flux.channel_n1()) + ")");
}

std::optional<double> bound_state_factor(long l, const FluxDecomposition& flux,
                                         double energy,
                                         const ExtensionSpec& spec) {
  require_positive_energy(energy);
  const double exponent = channel_exponent(l, flux);
  validate_extension(spec, flux);
  const auto& e_bound = bound_energy(l, flux, spec);
  if (!e_bound) return std::nullopt;
  return std::pow(energy / *e_bound, exponent);
}

double resonance_denominator(long l, const FluxDecomposition& flux,
                             double energy, const ExtensionSpec& spec) {
  const auto factor = bound_state_factor(l, flux, energy, spec);
  if (!factor)
    throw Error(ErrorKind::InvalidExtension,
                "channel l=" + std::to_string(l) + " has no bound state");
  return std::cos(channel_exponent(l, flux) * kPi) - 1.0 / *factor;
}

double delta_correction(long l, const FluxDecomposition& flux, double energy,
                        const ExtensionSpec& spec) {
  require_positive_energy(energy);
  if (!flux.is_modified_channel(l)) return 0.0;
  const auto checked = validate_extension(spec, flux);
  if (checked.forced_conventional) return 0.0;

  const auto factor = bound_state_factor(l, flux, energy, spec);
  if (!factor) return 0.0;
  const double x = channel_exponent(l, flux) * kPi;
  return std::atan2(std::sin(x), std::cos(x) - 1.0 / *factor);
}

ChannelPhase total_phase_shift(long l, const FluxDecomposition& flux,
                               double energy, const ExtensionSpec& spec) {
  ChannelPhase p;
  p.l = l;
  p.delta0 = standard_phase_shift(l, flux.alpha);
  p.correction = delta_correction(l, flux, energy, spec);
  p.total = p.delta0 + p.correction;
  p.s_element = std::polar(1.0, 2.0 * p.total);
  return p;
}

CorrectionPair corrections(const FluxDecomposition& flux, double energy,
                           const ExtensionSpec& spec) {
  return {delta_correction(flux.channel_n(), flux, energy, spec),
          delta_correction(flux.channel_n1(), flux, energy, spec)};
}

ResonanceEstimate resonance_energy(const FluxDecomposition& flux,
                                   const ExtensionSpec& spec) {
  validate_extension(spec, flux);
  if (!(flux.eta > 0.0 && flux.eta < 0.5))
    return {std::nullopt, "closed form only covers 0 < eta < 1/2 (channel l=-n)"};
  if (!spec.e_bound_n)
    return {std::nullopt, "no bound state in channel l=-n"};
  return {*spec.e_bound_n / std::pow(std::cos(flux.eta * kPi), 1.0 / flux.eta), {}};
}

double find_resonance_numeric(const FluxDecomposition& flux,
                              const ExtensionSpec& spec, long channel,
                              EnergyBracket bracket) {
  channel_exponent(channel, flux);
  if (!(bracket.lo > 0.0 && bracket.hi > bracket.lo))
    throw Error(ErrorKind::InvalidInput, "energy bracket must satisfy 0 < lo < hi");
  if (flux.is_integer())
    throw Error(ErrorKind::NoRoot, "integer flux: no resonance");
  auto denominator = [&](double e) {
    return resonance_denominator(channel, flux, e, spec);
  };
  return numeric::find_root(denominator, bracket.lo, bracket.hi);
}

std::optional<EnergyBracket> resonance_bracket(const FluxDecomposition& flux,
                                               const ExtensionSpec& spec,
                                               long channel) {
  const double x = channel_exponent(channel, flux);
  if (flux.is_integer() || std::cos(x * kPi) <= 0.0) return std::nullopt;
  const auto& e_bound = channel == flux.channel_n() ? spec.e_bound_n : spec.e_bound_n1;
  if (!e_bound) return std::nullopt;
  validate_extension(spec, flux);

  // The denominator is negative for E <= |E_l| and increases with E.
  EnergyBracket b{*e_bound, 2.0 * *e_bound};
  for (int i = 0; i < 2048; ++i) {
    if (resonance_denominator(channel, flux, b.hi, spec) > 0.0) return b;
    b.lo = b.hi;
    b.hi *= 2.0;
    if (!std::isfinite(b.hi)) break;
  }
  return std::nullopt;
}

}  // namespace abvortex
