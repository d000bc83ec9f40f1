#include <casimir/evanescent.hpp>

#include <casimir/constants.hpp>

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace casimir;

namespace {

OpticalTable small_table() {
  return OpticalTable({1e11, 1e12}, {1.0, 0.1});
}

}  // namespace

TEST_CASE("plasma evanescent pressure is identically zero") {
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  for (double a : {0.5e-6, 1e-6}) {
    const GeometryThermal g{a, 300.0};
    for (auto pol : {Polarization::TM, Polarization::TE}) {
      const auto r = evanescent_pressure(plasma, pol, g);
      CHECK(r.value == 0.0);
      CHECK(r.est_error == 0.0);
    }
  }
}

TEST_CASE("vacuum evanescent pressure is zero") {
  const auto vacuum = DielectricModel::plasma(0.0);
  const GeometryThermal g{1e-6, 300.0};
  CHECK(evanescent_pressure(vacuum, Polarization::TM, g).value == 0.0);
}

TEST_CASE("integrand is zero for plasma and validates inputs") {
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  const GeometryThermal g{1e-6, 300.0};
  CHECK(evanescent_integrand(plasma, Polarization::TM, 1e13, 1e6, g) == 0.0);
  CHECK(evanescent_integrand(plasma, Polarization::TE, 1e11, 3e5, g) == 0.0);
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  CHECK_THROWS_AS(evanescent_integrand(drude, Polarization::TM, 0.0, 1e6, g), DomainError);
  CHECK_THROWS_AS(evanescent_integrand(drude, Polarization::TM, 1e13, -1.0, g), DomainError);
}

TEST_CASE("Drude TM integrand has a finite omega -> 0 limit") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{1e-6, 300.0};
  const double q = 5e5;
  const double f1 = evanescent_integrand(drude, Polarization::TM, 1e6, q, g);
  const double f2 = evanescent_integrand(drude, Polarization::TM, 5e5, q, g);
  CHECK(f1 != 0.0);
  CHECK(std::abs(f2 / f1 - 1.0) < 1e-3);
}

TEST_CASE("exponential suppression at 2aq = 40") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{1e-6, 300.0};
  const double omega = 1e12;
  double peak = 0.0;
  for (double q = 1e4; q < 30.0 / g.separation; q *= 1.3) {
    peak = std::max(peak, std::abs(evanescent_integrand(drude, Polarization::TE, omega, q, g)));
  }
  const double far = std::abs(
      evanescent_integrand(drude, Polarization::TE, omega, 20.0 / g.separation, g));
  CHECK(far < 1e-15 * peak);
}

// Both channels come out repulsive for Drude Au: the TE part is the eddy
// (low-frequency) contribution, the TM part is dominated by the plasmonic
// band. Values anchored against an independent prototype cross-checked with
// two quadrature routes and an arbitrary-precision oracle.
TEST_CASE("Drude Au evanescent channels at 1 um") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{1e-6, 300.0};
  const auto tm = evanescent_pressure(drude, Polarization::TM, g);
  const auto te = evanescent_pressure(drude, Polarization::TE, g);
  CHECK(tm.value > 0.0);
  CHECK(te.value > 0.0);
  CHECK(tm.value == doctest::Approx(1.0303867197e-2).epsilon(1e-3));
  CHECK(te.value == doctest::Approx(2.1702658383e-4).epsilon(1e-3));
  CHECK(tm.est_error >= 0.0);
  CHECK(te.est_error >= 0.0);
  CHECK(tm.omega_cutoff_low < tm.omega_cutoff_high);
  CHECK(tm.omega_cutoff_high == doctest::Approx(100.0 * au::plasma_frequency));
}

TEST_CASE("TE cancellation scale at 20 um") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{20e-6, 300.0};
  const auto te = evanescent_pressure(drude, Polarization::TE, g);
  const double pd0 = std::abs(classical_limit(ModelKind::Drude, g));
  CHECK(te.value / pd0 == doctest::Approx(1.006).epsilon(2e-2));
}

TEST_CASE("evanescent contributions decrease monotonically with gamma") {
  const GeometryThermal g{1e-6, 300.0};
  std::vector<double> tm_vals, te_vals;
  for (double gamma : {au::relaxation, au::relaxation / 4.0, au::relaxation / 16.0}) {
    const auto m = DielectricModel::drude(au::plasma_frequency, gamma);
    tm_vals.push_back(evanescent_pressure(m, Polarization::TM, g).value);
    te_vals.push_back(evanescent_pressure(m, Polarization::TE, g).value);
  }
  CHECK(tm_vals[0] > tm_vals[1]);
  CHECK(tm_vals[1] > tm_vals[2]);
  CHECK(te_vals[0] > te_vals[1]);
  CHECK(te_vals[1] > te_vals[2]);
  CHECK(tm_vals[2] > 0.0);
  CHECK(te_vals[2] > 0.0);
}

TEST_CASE("tolerance and window robustness") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{2e-6, 300.0};
  QuadratureConfig cfg;
  const auto base = evanescent_pressure(drude, Polarization::TE, g, cfg);

  QuadratureConfig tight = cfg;
  tight.rel_tol = 0.5 * cfg.rel_tol;
  const auto fine = evanescent_pressure(drude, Polarization::TE, g, tight);
  CHECK(std::abs(base.value - fine.value) <= base.est_error);

  QuadratureConfig wide = cfg;
  wide.omega_min_factor = 0.1 * cfg.omega_min_factor;
  const auto wider = evanescent_pressure(drude, Polarization::TE, g, wide);
  CHECK(std::abs(base.value - wider.value) <= base.est_error);
}

TEST_CASE("tabulated models without real-axis coverage raise CapabilityError") {
  const auto m = DielectricModel::tabulated(
      small_table(), {TailKind::Drude, DrudeParams::gold()});
  const GeometryThermal g{1e-6, 300.0};
  CHECK_THROWS_AS(evanescent_pressure(m, Polarization::TE, g), CapabilityError);
}
