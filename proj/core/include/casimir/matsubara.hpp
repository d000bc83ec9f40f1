#pragma once

#include <casimir/dielectric.hpp>
#include <casimir/reflection.hpp>

namespace casimir {

/// One physical configuration: plate separation and temperature.
struct GeometryThermal {
  double separation = 1e-6;   // m
  double temperature = 300.0; // K
};

void validate(const GeometryThermal& g);

/// Tolerances, truncation and grid policies shared by all sums and integrals.
/// Defaults are chosen so that est_error lands at least 10x below the smallest
/// quantity the acceptance suite resolves (a 0.04% pressure deviation).
struct QuadratureConfig {
  double rel_tol = 1e-6;
  double abs_tol = 1e-12;               // Pa
  int max_subdivisions = 400;
  double matsubara_tail_tol = 1e-8;
  double omega_min_factor = 1e-6;       // real-frequency lower cutoff, fraction of gamma
  double log_grid_decades_per_panel = 0.25;
};

void validate(const QuadratureConfig& cfg);

struct PolarizedPressure {
  double value = 0.0;      // Pa, <= 0 (attractive)
  double est_error = 0.0;  // Pa, quadrature + truncated-tail bound
  int terms_used = 0;
};

/// xi_l = 2 pi k_B T l / hbar.
double matsubara_frequency(double temperature_K, int l);

/// One term of the Matsubara sum (the l = 0 term already carries its 1/2).
/// The k_perp integral runs in the substituted variable y = 2 a q_l, mapped to
/// u in (0, 1] by y = y_l - ln u.
double matsubara_term(const DielectricModel& model, Polarization pol,
                      const GeometryThermal& g, const QuadratureConfig& cfg, int l,
                      double* est_error = nullptr);

/// Polarized total pressure by the Matsubara-frequency Lifshitz formula.
/// The series is truncated after three consecutive terms fall below
/// matsubara_tail_tol relative to the accumulated sum; the truncated tail is
/// bounded geometrically and folded into est_error.
PolarizedPressure pressure_polarized(const DielectricModel& model, Polarization pol,
                                     const GeometryThermal& g,
                                     const QuadratureConfig& cfg = {});

/// Large-separation (classical) pressure: -k_B T zeta(3) / (8 pi a^3) for the
/// Drude model, twice that for the plasma model.
double classical_limit(ModelKind kind, const GeometryThermal& g);

}  // namespace casimir
