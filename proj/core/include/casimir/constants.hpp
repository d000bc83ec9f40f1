#pragma once

#include <casimir/errors.hpp>

#include <cmath>

// Single source of truth for physical constants. Every other module obtains
// hbar, k_B and c from here; an audit test enforces that the numeric literals
// below appear nowhere else in the library.
namespace casimir::constants {

// CODATA defined values, SI units.
inline constexpr double hbar = 1.054571817e-34;  // J*s
inline constexpr double k_B = 1.380649e-23;      // J/K
inline constexpr double c = 2.99792458e8;        // m/s

// Riemann zeta(3), used by the classical large-separation limits.
inline constexpr double zeta3 = 1.2020569031595942854;

inline constexpr double pi = 3.14159265358979323846;

}  // namespace casimir::constants

namespace casimir {

/// k_B * T for a valid absolute temperature.
inline double thermal_energy(double temperature_K) {
  if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
    throw DomainError("thermal_energy: temperature must be positive and finite");
  }
  return constants::k_B * temperature_K;
}

}  // namespace casimir
