#include <casimir/reflection.hpp>

#include <casimir/constants.hpp>
#include <casimir/matsubara.hpp>

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

using namespace casimir;
using constants::c;

TEST_CASE("kinematics on the real axis") {
  SUBCASE("omega = 0 gives q = k_perp") {
    const auto kin = kinematics_real(0.0, 1e6, {1.0, 0.0});
    CHECK(kin.q.real() == doctest::Approx(1e6));
    CHECK(kin.q.imag() == 0.0);
  }
  SUBCASE("k_perp = 2 omega / c") {
    const double omega = 1e15;
    const auto kin = kinematics_real(omega, 2.0 * omega / c, {1.0, 0.0});
    CHECK(kin.q.real() == doctest::Approx(std::sqrt(3.0) * omega / c).epsilon(1e-13));
  }
  SUBCASE("evanescent Drude point") {
    const auto m = DielectricModel::drude(DrudeParams::gold());
    const double omega = au::relaxation;
    const double k_perp = 1.01 * omega / c;
    const auto kin = kinematics_real(omega, k_perp, m.eval_real(omega));
    CHECK(kin.q.imag() == 0.0);
    CHECK(kin.q.real() > 0.0);
    CHECK(kin.p.real() > 0.0);
    CHECK(kin.p.imag() != 0.0);
  }
  SUBCASE("propagating branch has Im q <= 0") {
    const auto kin = kinematics_real(1e15, 0.5e6, {1.0, 0.0});
    CHECK(kin.q.real() == 0.0);
    CHECK(kin.q.imag() < 0.0);
  }
}

TEST_CASE("kinematics on the imaginary axis") {
  SUBCASE("xi = 0 gives q = p = k_perp") {
    const auto kin = kinematics_imag(0.0, 2e6, 100.0);
    CHECK(kin.q.real() == doctest::Approx(2e6));
    CHECK(kin.p.real() == doctest::Approx(2e6));
  }
  SUBCASE("k_perp = 0 with eps = 4") {
    const double xi = 1e15;
    const auto kin = kinematics_imag(xi, 0.0, 4.0);
    CHECK(kin.p.real() == doctest::Approx(2.0 * kin.q.real()).epsilon(1e-13));
    CHECK(kin.q.real() == doctest::Approx(xi / c).epsilon(1e-13));
  }
  SUBCASE("Au Drude values at the first Matsubara frequency") {
    const double xi1 = matsubara_frequency(300.0, 1);
    const auto m = DielectricModel::drude(DrudeParams::gold());
    const auto kin = kinematics_imag(xi1, xi1 / c, m.eval_imag(xi1));
    CHECK(kin.q.real() == doctest::Approx(1164132.8375010751).epsilon(1e-10));
    CHECK(kin.p.real() == doctest::Approx(41478637.043732986).epsilon(1e-10));
  }
}

TEST_CASE("fresnel coefficients") {
  SUBCASE("vacuum reflects nothing") {
    const auto kin = kinematics_imag(1e14, 1e6, 1.0);
    CHECK(fresnel(Polarization::TM, {1.0, 0.0}, kin) == std::complex<double>(0.0, 0.0));
    CHECK(fresnel(Polarization::TE, {1.0, 0.0}, kin) == std::complex<double>(0.0, 0.0));
  }
  SUBCASE("large xi limit vanishes") {
    const auto m = DielectricModel::drude(DrudeParams::gold());
    const double xi = 1e19;
    const double eps = m.eval_imag(xi);
    const auto kin = kinematics_imag(xi, 1e6, eps);
    CHECK(std::abs(fresnel(Polarization::TM, {eps, 0.0}, kin)) < 1e-5);
    CHECK(std::abs(fresnel(Polarization::TE, {eps, 0.0}, kin)) < 1e-5);
  }
  SUBCASE("Au Drude TE value at xi_1") {
    const double xi1 = matsubara_frequency(300.0, 1);
    const auto m = DielectricModel::drude(DrudeParams::gold());
    const double eps = m.eval_imag(xi1);
    const auto kin = kinematics_imag(xi1, xi1 / c, eps);
    const auto r = fresnel(Polarization::TE, {eps, 0.0}, kin);
    CHECK(r.real() == doctest::Approx(-0.9454006932127839).epsilon(1e-10));
    CHECK(r.imag() == 0.0);
  }
}

TEST_CASE("imaginary-axis coefficient ranges and positive denominators") {
  std::mt19937 rng(20230815);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double eps = 1.0 + std::pow(10.0, 6.0 * u(rng));        // (1, 1e6]
    const double xi = std::pow(10.0, 11.0 + 6.0 * u(rng));        // [1e11, 1e17]
    const double k_perp = std::pow(10.0, 3.0 + 5.0 * u(rng));     // [1e3, 1e8]
    const auto kin = kinematics_imag(xi, k_perp, eps);
    const double r_te = fresnel(Polarization::TE, {eps, 0.0}, kin).real();
    const double r_tm = fresnel(Polarization::TM, {eps, 0.0}, kin).real();
    CHECK(r_te > -1.0);
    CHECK(r_te <= 0.0);
    CHECK(r_tm >= 0.0);
    CHECK(r_tm < 1.0);
    const double a = 1e-6;
    CHECK(1.0 - r_te * r_te * std::exp(-2.0 * a * kin.q.real()) > 0.0);
    CHECK(1.0 - r_tm * r_tm * std::exp(-2.0 * a * kin.q.real()) > 0.0);
  }
}

TEST_CASE("branch consistency: squares reproduce the defining expressions") {
  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double omega = std::pow(10.0, 12.0 + 5.0 * u(rng));
    const double k_perp = std::pow(10.0, 3.0 + 5.0 * u(rng));
    const std::complex<double> eps(-50.0 + 100.0 * u(rng), 100.0 * u(rng));
    const auto kin = kinematics_real(omega, k_perp, eps);
    const std::complex<double> q2(k_perp * k_perp - (omega / c) * (omega / c), 0.0);
    const std::complex<double> p2 = k_perp * k_perp - eps * (omega / c) * (omega / c);
    CHECK(std::abs(kin.q * kin.q - q2) <= 1e-12 * std::abs(q2) + 1e-300);
    CHECK(std::abs(kin.p * kin.p - p2) <= 1e-12 * std::abs(p2) + 1e-300);
    CHECK(kin.q.real() >= 0.0);
    CHECK(kin.p.real() >= 0.0);
  }
}

TEST_CASE("zero-frequency TE coefficient") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  for (double k : {1e3, 1e6, 1e8}) {
    CHECK(r_te_zero_freq(drude, k) == 0.0);
  }
  CHECK(r_te_zero_freq(plasma, au::plasma_frequency / c) ==
        doctest::Approx(-0.17157287525380996).epsilon(1e-13));
  CHECK(r_te_zero_freq(plasma, 1e-3) < -0.999999);
}

TEST_CASE("zero-frequency TM coefficient is 1 for conductors") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  CHECK(r_tm_zero_freq(drude, 1e6) == 1.0);
  CHECK(r_tm_zero_freq(plasma, 1e6) == 1.0);
  CHECK(r_tm_zero_freq(drude, 1e4) == r_tm_zero_freq(drude, 1e7));
  CHECK(r_tm_zero_freq(DielectricModel::plasma(0.0), 1e6) == 0.0);
  CHECK_THROWS_AS(r_tm_zero_freq(drude, 0.0), DomainError);
}

TEST_CASE("xi -> 0 continuity of the Fresnel coefficients") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  const double k_perp = 1e6;
  const double xi = 1e6;  // xi / xi_1 ~ 4e-9

  const double eps_d = drude.eval_imag(xi);
  const auto kin_d = kinematics_imag(xi, k_perp, eps_d);
  CHECK(std::abs(fresnel(Polarization::TM, {eps_d, 0.0}, kin_d).real() - 1.0) < 1e-9);
  CHECK(std::abs(fresnel(Polarization::TE, {eps_d, 0.0}, kin_d).real()) < 1e-4);

  const double eps_p = plasma.eval_imag(xi);
  const auto kin_p = kinematics_imag(xi, k_perp, eps_p);
  CHECK(fresnel(Polarization::TE, {eps_p, 0.0}, kin_p).real() ==
        doctest::Approx(r_te_zero_freq(plasma, k_perp)).epsilon(1e-9));
}
