#pragma once

#include <casimir/dielectric.hpp>

#include <complex>

namespace casimir {

enum class Polarization { TM, TE };

inline const char* to_string(Polarization p) {
  return p == Polarization::TM ? "TM" : "TE";
}

/// Longitudinal wave-vector factors outside (q) and inside (p) the plates.
/// On the imaginary axis both are real; on the real axis q is real in the
/// evanescent sector (k_perp > omega/c) and p is generally complex.
struct Kinematics {
  double k_perp = 0.0;
  std::complex<double> q;
  std::complex<double> p;
};

/// q = sqrt(k_perp^2 - omega^2/c^2), p = sqrt(k_perp^2 - eps omega^2/c^2),
/// branch Re >= 0; on the cut (propagating q) the branch with Im q <= 0.
Kinematics kinematics_real(double omega, double k_perp, std::complex<double> eps);

/// q = sqrt(k_perp^2 + xi^2/c^2), p = sqrt(k_perp^2 + eps xi^2/c^2), both real.
Kinematics kinematics_imag(double xi, double k_perp, double eps_imag_axis);

/// Fresnel coefficient for a single vacuum/half-space interface:
/// TM: (eps q - p)/(eps q + p), TE: (q - p)/(q + p).
std::complex<double> fresnel(Polarization pol, std::complex<double> eps,
                             const Kinematics& kin);

/// Zero-frequency TE coefficient: 0 for Drude-type models, the closed plasma
/// form (c k - sqrt(c^2 k^2 + wp^2))/(c k + sqrt(c^2 k^2 + wp^2)) otherwise.
double r_te_zero_freq(const DielectricModel& model, double k_perp);

/// Zero-frequency TM coefficient. The eps*xi^2-dominated limit is 1 for every
/// conducting model; the value 1 is forced by the requirement that the l = 0
/// TM Matsubara term reproduce the Drude classical limit. Vacuum gives 0.
double r_tm_zero_freq(const DielectricModel& model, double k_perp);

}  // namespace casimir
