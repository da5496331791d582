#pragma once

#include <optional>

namespace abvortex {

inline constexpr double kPi = 3.14159265358979323846;

/// Flux through the tube in units of the flux quantum hc/|e|, split as
/// alpha = n + eta with integer n and 0 <= eta < 1. The two channels that can
/// carry a nonstandard boundary condition are l = -n and l = -n-1.
struct FluxDecomposition {
  double alpha = 0.0;
  long n = 0;
  double eta = 0.0;

  long channel_n() const noexcept { return -n; }
  long channel_n1() const noexcept { return -n - 1; }
  bool is_modified_channel(long l) const noexcept {
    return l == channel_n() || l == channel_n1();
  }
  bool is_integer() const noexcept { return eta == 0.0; }

  bool operator==(const FluxDecomposition&) const = default;
};

/// Bound-state energy magnitudes |E_{-n}| and |E_{-n-1}| of the rotationally
/// invariant extension. The energies attach to the channels of whatever
/// decomposition they are used with, so shifting alpha by one relabels them
/// automatically. An absent value means the conventional condition.
struct ExtensionSpec {
  std::optional<double> e_bound_n;
  std::optional<double> e_bound_n1;

  static ExtensionSpec conventional() { return {}; }
  bool is_conventional() const noexcept {
    return !e_bound_n && !e_bound_n1;
  }

  bool operator==(const ExtensionSpec&) const = default;
};

struct CheckedExtension {
  ExtensionSpec spec;
  // Integer flux: both channels are treated as conventional whatever the
  // supplied energies are.
  bool forced_conventional = false;
};

enum class UnitSystem { Natural, Explicit };

/// Natural units are hbar = 2m = 1, so k = sqrt(E).
struct Kinematics {
  double energy = 1.0;
  double mass = 0.5;
  double hbar = 1.0;
  UnitSystem units = UnitSystem::Natural;

  static Kinematics natural(double energy) { return {energy, 0.5, 1.0, UnitSystem::Natural}; }
  static Kinematics explicit_units(double energy, double mass, double hbar) {
    return {energy, mass, hbar, UnitSystem::Explicit};
  }
};

FluxDecomposition decompose_flux(double alpha);

double wavenumber(const Kinematics& kin);

CheckedExtension validate_extension(const ExtensionSpec& spec,
                                    const FluxDecomposition& flux);

}  // namespace abvortex
