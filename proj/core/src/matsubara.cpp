#include <casimir/matsubara.hpp>

#include <casimir/constants.hpp>
#include <casimir/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace casimir {
namespace {

using constants::c;
using constants::pi;

constexpr long kMaxTerms = 100000;

// Squared reflection coefficient on the imaginary axis as a function of
// y = 2 a q, all-real fast path. The general complex operations in
// reflection.hpp produce identical values (covered by tests); this form keeps
// the innermost loop free of complex arithmetic.
struct ImagAxisR2 {
  double eps;   // eps(i xi_l), >= 1
  double yl;    // 2 a xi_l / c
  Polarization pol;

  double operator()(double y) const {
    const double w = std::sqrt(y * y + (eps - 1.0) * yl * yl);
    const double r = pol == Polarization::TE ? (y - w) / (y + w)
                                             : (eps * y - w) / (eps * y + w);
    return r * r;
  }
};

double integrate_term(const std::function<double(double)>& r2_of_y, double yl,
                      const QuadratureConfig& cfg, double* quad_err) {
  const double damp = std::exp(-yl);  // underflows to 0 for huge yl, giving 0 terms
  if (damp == 0.0) {
    *quad_err = 0.0;
    return 0.0;
  }
  auto h = [&](double u) {
    const double y = yl - std::log(u);
    const double r2 = r2_of_y(y);
    return y * y * r2 * damp / (1.0 - r2 * u * damp);
  };
  const double edges[] = {0.0, 1e-4, 1e-2, 0.1, 0.5, 1.0};
  const auto res = quad::integrate_segmented(h, edges, 0.1 * cfg.rel_tol, 0.0,
                                             cfg.max_subdivisions);
  *quad_err = res.abs_error;
  return res.value;
}

}  // namespace

void validate(const GeometryThermal& g) {
  if (!(g.separation > 0.0) || !std::isfinite(g.separation)) {
    throw ValidationError("GeometryThermal: separation must be positive and finite");
  }
  if (!(g.temperature > 0.0) || !std::isfinite(g.temperature)) {
    throw ValidationError("GeometryThermal: temperature must be positive and finite");
  }
}

void validate(const QuadratureConfig& cfg) {
  auto positive = [](double v) { return v > 0.0 && std::isfinite(v); };
  if (!positive(cfg.rel_tol) || cfg.rel_tol >= 0.1) {
    throw ValidationError("QuadratureConfig: rel_tol must be in (0, 0.1)");
  }
  if (!positive(cfg.abs_tol)) {
    throw ValidationError("QuadratureConfig: abs_tol must be positive");
  }
  if (cfg.max_subdivisions < 1) {
    throw ValidationError("QuadratureConfig: max_subdivisions must be >= 1");
  }
  if (!positive(cfg.matsubara_tail_tol) || cfg.matsubara_tail_tol >= 1.0) {
    throw ValidationError("QuadratureConfig: matsubara_tail_tol must be in (0, 1)");
  }
  if (!positive(cfg.omega_min_factor)) {
    throw ValidationError("QuadratureConfig: omega_min_factor must be positive");
  }
  if (!positive(cfg.log_grid_decades_per_panel) || cfg.log_grid_decades_per_panel > 2.0) {
    throw ValidationError("QuadratureConfig: log_grid_decades_per_panel must be in (0, 2]");
  }
}

double matsubara_frequency(double temperature_K, int l) {
  if (!(temperature_K > 0.0) || !std::isfinite(temperature_K)) {
    throw DomainError("matsubara_frequency: temperature must be positive and finite");
  }
  if (l < 0) throw DomainError("matsubara_frequency: l must be >= 0");
  return 2.0 * pi * thermal_energy(temperature_K) * l / constants::hbar;
}

double matsubara_term(const DielectricModel& model, Polarization pol,
                      const GeometryThermal& g, const QuadratureConfig& cfg, int l,
                      double* est_error) {
  validate(g);
  validate(cfg);
  const double a = g.separation;
  double pref = -thermal_energy(g.temperature) / (8.0 * pi * a * a * a);

  double quad_err = 0.0;
  double integral = 0.0;
  if (l == 0) {
    pref *= 0.5;  // the primed sum halves l = 0
    if (pol == Polarization::TM) {
      const double r0 = r_tm_zero_freq(model, 1.0);  // k_perp-independent
      const double r2 = r0 * r0;
      integral = r2 == 0.0 ? 0.0
                           : integrate_term([r2](double) { return r2; }, 0.0, cfg,
                                            &quad_err);
    } else {
      const Extrapolation tail = model.zero_frequency_tail();
      if (tail.kind == TailKind::Drude || tail.params.omega_p == 0.0) {
        integral = 0.0;  // exact, Drude TE coefficient vanishes at xi = 0
      } else {
        auto r2 = [&](double y) {
          const double r = r_te_zero_freq(model, y / (2.0 * a));
          return r * r;
        };
        integral = integrate_term(r2, 0.0, cfg, &quad_err);
      }
    }
  } else {
    const double xi = matsubara_frequency(g.temperature, l);
    const double eps = model.eval_imag(xi);
    if (eps == 1.0) {
      integral = 0.0;  // vacuum
    } else {
      const double yl = 2.0 * a * xi / c;
      integral = integrate_term(ImagAxisR2{eps, yl, pol}, yl, cfg, &quad_err);
    }
  }
  if (est_error) *est_error = std::abs(pref) * quad_err;
  return pref * integral;
}

PolarizedPressure pressure_polarized(const DielectricModel& model, Polarization pol,
                                     const GeometryThermal& g,
                                     const QuadratureConfig& cfg) {
  validate(g);
  validate(cfg);

  PolarizedPressure out;
  double quad_err = 0.0;
  double prev_mag = 0.0;
  double last_mag = 0.0;
  int consecutive_small = 0;
  long l = 0;
  for (;; ++l) {
    if (l > kMaxTerms) {
      std::ostringstream diag;
      diag << "a=" << g.separation << " T=" << g.temperature
           << " pol=" << to_string(pol) << " terms=" << l
           << " last_term=" << last_mag << " accumulated=" << out.value;
      throw ConvergenceError("pressure_polarized: Matsubara series did not "
                             "converge within the term cap", diag.str());
    }
    double term_err = 0.0;
    const double t = matsubara_term(model, pol, g, cfg, static_cast<int>(l), &term_err);
    out.value += t;
    quad_err += term_err;
    if (l > 0) {
      prev_mag = last_mag;
      last_mag = std::abs(t);
      if (last_mag <= cfg.matsubara_tail_tol * std::abs(out.value)) {
        if (++consecutive_small >= 3) {
          ++l;
          break;
        }
      } else {
        consecutive_small = 0;
      }
    }
  }
  out.terms_used = static_cast<int>(l);

  // Geometric bound on the truncated tail from the last two magnitudes.
  double tail = 0.0;
  if (last_mag > 0.0) {
    double ratio = prev_mag > 0.0 ? last_mag / prev_mag : 0.5;
    ratio = std::clamp(ratio, 0.0, 0.999);
    tail = last_mag * ratio / (1.0 - ratio);
  }
  out.est_error = quad_err + tail;
  return out;
}

double classical_limit(ModelKind kind, const GeometryThermal& g) {
  validate(g);
  const double a = g.separation;
  const double base =
      -thermal_energy(g.temperature) * constants::zeta3 / (8.0 * pi * a * a * a);
  switch (kind) {
    case ModelKind::Drude:
      return base;
    case ModelKind::Plasma:
      return 2.0 * base;
    case ModelKind::Tabulated:
      throw DomainError("classical_limit: defined for the Drude and plasma models; "
                        "tabulated models follow their extrapolation tail's kind");
  }
  throw Error("classical_limit: unreachable");
}

}  // namespace casimir
