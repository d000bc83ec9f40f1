#pragma once

#include <casimir/matsubara.hpp>

namespace casimir {

struct EvanescentResult {
  double value = 0.0;             // Pa
  double est_error = 0.0;         // Pa; includes window-tail bounds
  double omega_cutoff_low = 0.0;  // rad/s, actually integrated window
  double omega_cutoff_high = 0.0; // rad/s
};

/// Evanescent-wave pressure on the real frequency axis:
///   P = -(hbar/2 pi^2) Int_0^inf dw coth(hbar w / 2 k_B T)
///         Int_{w/c}^inf dk k q Im[r^2 e^{-2aq} / (1 - r^2 e^{-2aq})],
/// with the inner integral transformed to q in (0, q_max], q_max = 60/(2a).
/// The outer integral runs on an adaptive logarithmic grid; the strip below
/// the lower cutoff is added by power-law extrapolation from the two smallest
/// grid points and bounded in est_error.
///
/// Plasma-model output is identically zero (real reflection coefficients).
/// Tabulated models are evaluated on their extrapolation tail; if the window
/// cannot close below the first table sample a CapabilityError is thrown.
EvanescentResult evanescent_pressure(const DielectricModel& model, Polarization pol,
                                     const GeometryThermal& g,
                                     const QuadratureConfig& cfg = {});

/// Spectral density in (omega, q) such that the pressure is its double
/// integral: -(hbar/2 pi^2) coth(hbar w/2 k_B T) q^2 Im[N/(1-N)] with
/// N = r^2 e^{-2aq} and k_perp = sqrt(q^2 + w^2/c^2). Units Pa*s*m.
double evanescent_integrand(const DielectricModel& model, Polarization pol,
                            double omega, double q, const GeometryThermal& g);

}  // namespace casimir
