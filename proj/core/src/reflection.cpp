#include <casimir/reflection.hpp>

#include <casimir/constants.hpp>
#include <casimir/errors.hpp>

#include <cmath>

namespace casimir {
namespace {

using constants::c;

/// Principal sqrt folded onto Re >= 0; for a negative-real argument (the
/// propagating-sector cut) picks Im <= 0.
std::complex<double> sqrt_re_pos(std::complex<double> z) {
  std::complex<double> w = std::sqrt(z);
  if (w.real() < 0.0) w = -w;
  if (w.real() == 0.0 && w.imag() > 0.0) w = -w;
  return w;
}

}  // namespace

Kinematics kinematics_real(double omega, double k_perp, std::complex<double> eps) {
  if (omega < 0.0 || !std::isfinite(omega)) {
    throw DomainError("kinematics_real: omega must be >= 0 and finite");
  }
  if (k_perp < 0.0 || !std::isfinite(k_perp)) {
    throw DomainError("kinematics_real: k_perp must be >= 0 and finite");
  }
  const double w_over_c2 = (omega / c) * (omega / c);
  Kinematics kin;
  kin.k_perp = k_perp;
  kin.q = sqrt_re_pos(std::complex<double>(k_perp * k_perp - w_over_c2, 0.0));
  kin.p = sqrt_re_pos(k_perp * k_perp - eps * w_over_c2);
  return kin;
}

Kinematics kinematics_imag(double xi, double k_perp, double eps_imag_axis) {
  if (xi < 0.0 || !std::isfinite(xi)) {
    throw DomainError("kinematics_imag: xi must be >= 0 and finite");
  }
  if (k_perp < 0.0 || !std::isfinite(k_perp)) {
    throw DomainError("kinematics_imag: k_perp must be >= 0 and finite");
  }
  const double xi_over_c2 = (xi / c) * (xi / c);
  Kinematics kin;
  kin.k_perp = k_perp;
  kin.q = std::hypot(k_perp, xi / c);
  // At xi = 0 the permittivity may be +inf while eps*xi^2 -> finite limits;
  // that combination is owned by the zero-frequency operations, so here
  // xi = 0 simply gives p = k_perp.
  kin.p = xi == 0.0 ? k_perp : std::sqrt(k_perp * k_perp + eps_imag_axis * xi_over_c2);
  return kin;
}

std::complex<double> fresnel(Polarization pol, std::complex<double> eps,
                             const Kinematics& kin) {
  const std::complex<double> num =
      pol == Polarization::TM ? eps * kin.q - kin.p : kin.q - kin.p;
  const std::complex<double> den =
      pol == Polarization::TM ? eps * kin.q + kin.p : kin.q + kin.p;
  if (den == std::complex<double>(0.0, 0.0)) {
    throw ConvergenceError("fresnel: degenerate reflection denominator",
                           "eps*q + p (TM) or q + p (TE) vanished");
  }
  return num / den;
}

double r_te_zero_freq(const DielectricModel& model, double k_perp) {
  if (k_perp < 0.0 || !std::isfinite(k_perp)) {
    throw DomainError("r_te_zero_freq: k_perp must be >= 0 and finite");
  }
  const Extrapolation tail = model.zero_frequency_tail();
  if (tail.kind == TailKind::Drude || tail.params.omega_p == 0.0) return 0.0;
  const double ck = c * k_perp;
  const double root = std::hypot(ck, tail.params.omega_p);
  return (ck - root) / (ck + root);
}

double r_tm_zero_freq(const DielectricModel& model, double k_perp) {
  if (!(k_perp > 0.0) || !std::isfinite(k_perp)) {
    throw DomainError("r_tm_zero_freq: k_perp must be > 0 and finite");
  }
  return model.is_vacuum() ? 0.0 : 1.0;
}

}  // namespace casimir
