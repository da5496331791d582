#pragma once

#include <complex>
#include <optional>
#include <string>

#include "abvortex/flux.hpp"

namespace abvortex {

/// Phase data of one partial wave.
struct ChannelPhase {
  long l = 0;
  double delta0 = 0.0;      // conventional AB shift
  double correction = 0.0;  // extension-induced part
  double total = 0.0;       // delta0 + correction
  std::complex<double> s_element{1.0, 0.0};  // exp(2i total)
};

/// The corrections in the two modified channels, in the atan2 branch (0, pi)
/// for nonintegral flux. Observables only depend on them modulo pi.
struct CorrectionPair {
  double minus_n = 0.0;   // channel l = -n
  double minus_n1 = 0.0;  // channel l = -n-1
};

struct EnergyBracket {
  double lo = 0.0;
  double hi = 0.0;
};

/// Closed-form resonance energy, or the reason none is given.
struct ResonanceEstimate {
  std::optional<double> energy;
  std::string reason;
};

double standard_phase_shift(long l, double alpha);

/// |l + alpha| for a modified channel, taken from the decomposition so that it
/// is exactly eta for l = -n and 1 - eta for l = -n-1.
double channel_exponent(long l, const FluxDecomposition& flux);

/// A_l = (E/|E_l|)^{|l+alpha|}; absent when the channel has no bound state.
std::optional<double> bound_state_factor(long l, const FluxDecomposition& flux,
                                         double energy,
                                         const ExtensionSpec& spec);

/// cos(|l+alpha| pi) - 1/A_l. Its zero is the resonance in that channel.
double resonance_denominator(long l, const FluxDecomposition& flux,
                             double energy, const ExtensionSpec& spec);

double delta_correction(long l, const FluxDecomposition& flux, double energy,
                        const ExtensionSpec& spec);

ChannelPhase total_phase_shift(long l, const FluxDecomposition& flux,
                               double energy, const ExtensionSpec& spec);

CorrectionPair corrections(const FluxDecomposition& flux, double energy,
                           const ExtensionSpec& spec);

/// |E_-n| / cos(eta pi)^{1/eta}, only for 0 < eta < 1/2 with |E_-n| given.
ResonanceEstimate resonance_energy(const FluxDecomposition& flux,
                                   const ExtensionSpec& spec);

/// Root of resonance_denominator in `channel` inside `bracket`.
double find_resonance_numeric(const FluxDecomposition& flux,
                              const ExtensionSpec& spec, long channel,
                              EnergyBracket bracket);

/// A bracket that contains the resonance of `channel`, found by doubling
/// upward from |E_l|. Absent when the channel cannot resonate
/// (no bound state, or cos(|l+alpha| pi) <= 0).
std::optional<EnergyBracket> resonance_bracket(const FluxDecomposition& flux,
                                               const ExtensionSpec& spec,
                                               long channel);

}  // namespace abvortex
