#include "abvortex/flux.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "abvortex/error.hpp"

namespace abvortex {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NonpositiveEnergy: return "nonpositive-energy";
    case ErrorKind::InvalidExtension: return "invalid-extension";
    case ErrorKind::WrongChannel: return "wrong-channel";
    case ErrorKind::NoRoot: return "no-root";
    case ErrorKind::ForwardSingularity: return "forward-singularity";
  }
  return "unknown";
}

FluxDecomposition decompose_flux(double alpha) {
  if (!std::isfinite(alpha))
    throw Error(ErrorKind::InvalidInput, "flux alpha must be finite");
  const double floor_alpha = std::floor(alpha);
  double eta = alpha - floor_alpha;
  // alpha slightly below an integer can round eta up to exactly 1.
  if (eta >= 1.0) eta = std::nextafter(1.0, 0.0);
  return {alpha, static_cast<long>(floor_alpha), eta};
}

double wavenumber(const Kinematics& kin) {
  if (!(kin.energy > 0.0))
    throw Error(ErrorKind::NonpositiveEnergy,
                "energy must be positive, got " + std::to_string(kin.energy));
  if (!(kin.mass > 0.0) || !(kin.hbar > 0.0))
    throw Error(ErrorKind::InvalidInput, "mass and hbar must be positive");
  return std::sqrt(2.0 * kin.mass * kin.energy) / kin.hbar;
}

CheckedExtension validate_extension(const ExtensionSpec& spec,
                                    const FluxDecomposition& flux) {
  auto check = [](const std::optional<double>& e, const char* name) {
    if (e && !(*e > 0.0 && std::isfinite(*e)))
      throw Error(ErrorKind::InvalidExtension,
                  std::string(name) + " must be a positive finite energy");
  };
  check(spec.e_bound_n, "|E_-n|");
  check(spec.e_bound_n1, "|E_-n-1|");
  return {spec, flux.is_integer()};
}

}  // namespace abvortex
