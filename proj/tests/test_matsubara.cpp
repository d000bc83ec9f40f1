#include <casimir/matsubara.hpp>

#include <casimir/constants.hpp>
#include <casimir/quadrature.hpp>

#include <doctest.h>

#include <cmath>

using namespace casimir;
using constants::c;

TEST_CASE("matsubara_frequency") {
  CHECK(matsubara_frequency(300.0, 0) == 0.0);
  CHECK(matsubara_frequency(300.0, 1) ==
        doctest::Approx(2.4677902551530606e14).epsilon(1e-13));
  CHECK(matsubara_frequency(300.0, 10) ==
        doctest::Approx(10.0 * matsubara_frequency(300.0, 1)).epsilon(1e-15));
  CHECK_THROWS_AS(matsubara_frequency(0.0, 1), DomainError);
  CHECK_THROWS_AS(matsubara_frequency(300.0, -1), DomainError);
}

TEST_CASE("classical limits") {
  const GeometryThermal g{1e-6, 300.0};
  CHECK(classical_limit(ModelKind::Drude, g) ==
        doctest::Approx(-1.9810238519393976e-4).epsilon(1e-12));
  CHECK(classical_limit(ModelKind::Plasma, g) ==
        doctest::Approx(2.0 * classical_limit(ModelKind::Drude, g)).epsilon(1e-15));
  const GeometryThermal half{0.5e-6, 300.0};
  CHECK(classical_limit(ModelKind::Drude, half) ==
        doctest::Approx(8.0 * classical_limit(ModelKind::Drude, g)).epsilon(1e-12));
  CHECK_THROWS_AS(classical_limit(ModelKind::Tabulated, g), DomainError);
}

TEST_CASE("ideal-metal surrogate reaches the classical TM limit") {
  const auto surrogate = DielectricModel::plasma(1e20);
  const GeometryThermal g{20e-6, 300.0};
  const auto p = pressure_polarized(surrogate, Polarization::TM, g);
  const double expected = classical_limit(ModelKind::Drude, g);
  CHECK(std::abs(p.value - expected) < 0.01 * std::abs(expected));
}

TEST_CASE("vacuum gives exactly zero pressure") {
  const auto vacuum = DielectricModel::plasma(0.0);
  const GeometryThermal g{1e-6, 300.0};
  CHECK(pressure_polarized(vacuum, Polarization::TM, g).value == 0.0);
  CHECK(pressure_polarized(vacuum, Polarization::TE, g).value == 0.0);
}

TEST_CASE("Drude TE pressure is tiny at 20 um") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{20e-6, 300.0};
  const auto te = pressure_polarized(drude, Polarization::TE, g);
  CHECK(std::abs(te.value) < 0.02 * std::abs(classical_limit(ModelKind::Drude, g)));
}

// Regression anchors validated against an independent prototype that was
// cross-checked with two other quadrature routes.
TEST_CASE("Au pressures at 1 um, 300 K") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  const GeometryThermal g{1e-6, 300.0};
  CHECK(pressure_polarized(drude, Polarization::TM, g).value ==
        doctest::Approx(-6.140270286411784e-4).epsilon(1e-6));
  CHECK(pressure_polarized(drude, Polarization::TE, g).value ==
        doctest::Approx(-3.694357929260968e-4).epsilon(1e-6));
  CHECK(pressure_polarized(plasma, Polarization::TM, g).value ==
        doctest::Approx(-6.160833248409078e-4).epsilon(1e-6));
  CHECK(pressure_polarized(plasma, Polarization::TE, g).value ==
        doctest::Approx(-5.487701756024731e-4).epsilon(1e-6));
}

TEST_CASE("every Matsubara term is attractive and the sum decreases") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{0.5e-6, 300.0};
  const QuadratureConfig cfg;
  double partial = 0.0;
  for (int l = 0; l <= 20; ++l) {
    const double t = matsubara_term(drude, Polarization::TM, g, cfg, l);
    CHECK(t <= 0.0);
    CHECK(partial + t <= partial);
    partial += t;
  }
}

// Dual-route check: the y = 2aq substitution must agree with a direct
// k_perp-axis integration of the Lifshitz integrand (the oracle below is
// independent of the production path).
TEST_CASE("substitution identity against a direct k_perp oracle") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{1e-6, 300.0};
  const QuadratureConfig cfg;
  for (int l : {1, 3, 9}) {
    const double xi = matsubara_frequency(g.temperature, l);
    const double eps = drude.eval_imag(xi);
    const double a = g.separation;
    auto integrand = [&](double k_perp) {
      const double q = std::hypot(k_perp, xi / c);
      const double p = std::sqrt(k_perp * k_perp + eps * (xi / c) * (xi / c));
      const double r_tm = (eps * q - p) / (eps * q + p);
      const double damped = r_tm * r_tm * std::exp(-2.0 * a * q);
      return k_perp * q * damped / (1.0 - damped);
    };
    const double k_max = 40.0 / (2.0 * a);
    const auto oracle =
        quad::integrate(integrand, 0.0, k_max, 1e-10, 0.0, 2000);
    const double expected = -(thermal_energy(g.temperature) / constants::pi) * oracle.value;
    const double got = matsubara_term(drude, Polarization::TM, g, cfg, l);
    CHECK(got == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("TM channel: Drude and plasma stay within half a percent") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  for (double a : {0.5e-6, 1e-6, 2e-6, 4e-6}) {
    const GeometryThermal g{a, 300.0};
    const double pd = pressure_polarized(drude, Polarization::TM, g).value;
    const double pp = pressure_polarized(plasma, Polarization::TM, g).value;
    CHECK(std::abs(pd - pp) / std::abs(pp) < 5e-3);
  }
}

TEST_CASE("gamma -> 0: TM converges to plasma, TE keeps the l = 0 gap") {
  const double tiny_gamma = 1e-6 * au::plasma_frequency;
  const auto nearly_plasma = DielectricModel::drude(au::plasma_frequency, tiny_gamma);
  const auto plasma = DielectricModel::plasma(au::plasma_frequency);
  const GeometryThermal g{1e-6, 300.0};
  const QuadratureConfig cfg;

  const double tm_d = pressure_polarized(nearly_plasma, Polarization::TM, g, cfg).value;
  const double tm_p = pressure_polarized(plasma, Polarization::TM, g, cfg).value;
  CHECK(std::abs(tm_d - tm_p) / std::abs(tm_p) < 1e-4);

  const double te_d = pressure_polarized(nearly_plasma, Polarization::TE, g, cfg).value;
  const double te_p = pressure_polarized(plasma, Polarization::TE, g, cfg).value;
  const double l0_gap = matsubara_term(plasma, Polarization::TE, g, cfg, 0);
  CHECK(te_d - te_p == doctest::Approx(-l0_gap).epsilon(1e-3));
}

TEST_CASE("doubling the subdivision budget moves results less than est_error") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{0.7e-6, 300.0};
  QuadratureConfig cfg;
  const auto base = pressure_polarized(drude, Polarization::TM, g, cfg);
  cfg.max_subdivisions *= 2;
  const auto fine = pressure_polarized(drude, Polarization::TM, g, cfg);
  CHECK(std::abs(base.value - fine.value) <= base.est_error + 1e-300);
}

TEST_CASE("series cap raises a convergence error with diagnostics") {
  const auto drude = DielectricModel::drude(DrudeParams::gold());
  const GeometryThermal g{1e-8, 1e-4};  // ~1e9 relevant terms, far past the cap
  CHECK_THROWS_AS(pressure_polarized(drude, Polarization::TM, g), ConvergenceError);
}

TEST_CASE("configuration validation") {
  QuadratureConfig cfg;
  cfg.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = {};
  cfg.matsubara_tail_tol = 2.0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  cfg = {};
  cfg.max_subdivisions = 0;
  CHECK_THROWS_AS(validate(cfg), ValidationError);
  CHECK_THROWS_AS(validate(GeometryThermal{0.0, 300.0}), ValidationError);
  CHECK_THROWS_AS(validate(GeometryThermal{1e-6, -5.0}), ValidationError);
}
