#include <casimir/dielectric.hpp>

#include <casimir/constants.hpp>
#include <casimir/quadrature.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace casimir {
namespace {

using constants::pi;

bool all_zero(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return x == 0.0; });
}

double drude_im_eps(const DrudeParams& p, double omega) {
  return p.omega_p * p.omega_p * p.gamma / (omega * (omega * omega + p.gamma * p.gamma));
}

/// Int_0^w0 of w ImEps_Drude(w) / (w^2 + xi^2) dw, i.e. the Drude-tail part of
/// the KK integrand. The integrand wp^2 g / ((w^2+g^2)(w^2+xi^2)) is smooth and
/// finite at w = 0, with knees at g and xi.
double drude_tail_integral(const DrudeParams& p, double omega0, double xi,
                           double rel_tol) {
  if (p.omega_p == 0.0) return 0.0;
  const double wp2g = p.omega_p * p.omega_p * p.gamma;
  auto f = [&](double w) {
    return wp2g / ((w * w + p.gamma * p.gamma) * (w * w + xi * xi));
  };
  std::vector<double> edges{0.0};
  for (double knee : {p.gamma, xi}) {
    for (double m : {1e-2, 1e-1, 1.0, 1e1}) {
      const double e = knee * m;
      if (e > 0.0 && e < omega0) edges.push_back(e);
    }
  }
  edges.push_back(omega0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return quad::integrate_segmented(f, edges, rel_tol, 0.0, 200).value;
}

/// Int_wN^inf of w * ImEps_N (wN/w)^3 / (w^2 + xi^2) dw in closed form, with a
/// series branch for xi << wN where the closed form cancels.
double cubic_tail_integral(double omega_n, double im_eps_n, double xi) {
  if (im_eps_n == 0.0) return 0.0;
  const double r = xi / omega_n;
  if (r < 1e-3) {
    const double r2 = r * r;
    return im_eps_n * (1.0 / 3.0 - r2 / 5.0 + r2 * r2 / 7.0);
  }
  const double inv_xi2 = 1.0 / (xi * xi);
  const double bracket =
      1.0 / omega_n - (pi / 2.0 - std::atan(omega_n / xi)) / xi;
  return im_eps_n * omega_n * omega_n * omega_n * inv_xi2 * bracket;
}

}  // namespace

void validate(const DrudeParams& p) {
  if (!(p.omega_p >= 0.0) || !std::isfinite(p.omega_p)) {
    throw ValidationError("DrudeParams: omega_p must be >= 0 and finite");
  }
  if (!(p.gamma >= 0.0) || !std::isfinite(p.gamma)) {
    throw ValidationError("DrudeParams: gamma must be >= 0 and finite");
  }
}

void validate(const Extrapolation& tail) {
  validate(tail.params);
  if (tail.kind == TailKind::Drude && !(tail.params.gamma > 0.0)) {
    throw ValidationError("Extrapolation: Drude tail requires gamma > 0");
  }
}

double kk_transform(const OpticalTable& table, const Extrapolation& tail,
                    double xi, double rel_tol) {
  if (!(xi > 0.0) || !std::isfinite(xi)) {
    throw DomainError("kk_transform: xi must be positive and finite");
  }
  validate(tail);

  const double omega0 = table.omega_min();
  const double omega_n = table.omega_max();

  double integral = 0.0;  // Int_0^inf w ImEps / (w^2 + xi^2) dw
  double plasma_pole = 0.0;

  if (tail.kind == TailKind::Drude) {
    integral += drude_tail_integral(tail.params, omega0, xi, rel_tol);
  } else {
    // All of the plasma model's spectral weight sits in a delta function at
    // w = 0; its KK image is the exact wp^2/xi^2 term.
    plasma_pole = tail.params.omega_p * tail.params.omega_p / (xi * xi);
  }

  // Tabulated range, one panel per sample segment; the interpolant is a power
  // law (or linear) there, so a single GK application per segment is accurate.
  auto f = [&](double w) { return w * table.interpolate(w) / (w * w + xi * xi); };
  const auto& omega = table.omega();
  double table_part = 0.0;
  double table_err = 0.0;
  for (size_t i = 0; i + 1 < omega.size(); ++i) {
    double err;
    double v = quad::gk15(f, omega[i], omega[i + 1], &err);
    if (err > rel_tol * std::max(std::abs(table_part), std::abs(v)) + 1e-300) {
      const auto res = quad::integrate(f, omega[i], omega[i + 1], rel_tol * 0.1, 0.0, 50);
      v = res.value;
      err = res.abs_error;
    }
    table_part += v;
    table_err += err;
  }
  integral += table_part;

  integral += cubic_tail_integral(omega_n, table.im_eps().back(), xi);

  return 1.0 + (2.0 / pi) * integral + plasma_pole;
}

double kk_junction_sensitivity(const OpticalTable& table, const Extrapolation& tail,
                               double xi, int drop) {
  if (drop < 1) throw ValidationError("kk_junction_sensitivity: drop must be >= 1");
  if (table.size() < static_cast<size_t>(drop) + 2) {
    throw ValidationError("kk_junction_sensitivity: need at least drop + 2 samples");
  }
  const double base = kk_transform(table, tail, xi);
  const std::vector<double> omega_cut(table.omega().begin() + drop, table.omega().end());
  const std::vector<double> im_cut(table.im_eps().begin() + drop, table.im_eps().end());
  const double shifted = kk_transform(OpticalTable(omega_cut, im_cut), tail, xi);
  return std::abs(shifted - base) / std::abs(base);
}

DielectricModel DielectricModel::drude(DrudeParams p) {
  validate(p);
  DielectricModel m;
  m.kind_ = p.gamma == 0.0 ? ModelKind::Plasma : ModelKind::Drude;
  m.params_ = p;
  return m;
}

DielectricModel DielectricModel::plasma(double omega_p) {
  return drude(DrudeParams{omega_p, 0.0});
}

DielectricModel DielectricModel::tabulated(OpticalTable table, Extrapolation tail) {
  validate(tail);
  DielectricModel m;
  m.kind_ = ModelKind::Tabulated;
  m.table_ = std::move(table);
  m.tail_ = tail;
  m.params_ = tail.params;
  if (tail.kind == TailKind::Plasma) m.params_.gamma = 0.0;
  return m;
}

std::complex<double> DielectricModel::eval_real(double omega) const {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("eval_real: omega must be positive and finite "
                      "(omega -> 0 limits are owned by the zero-frequency "
                      "reflection operations)");
  }
  DrudeParams p = params_;
  if (kind_ == ModelKind::Tabulated) {
    if (omega >= table_.omega_min()) {
      throw CapabilityError(
          "eval_real: tabulated model has no real-axis permittivity at or above "
          "the first table sample; only the extrapolation tail is defined");
    }
    p = params_;
  }
  const double wp2 = p.omega_p * p.omega_p;
  const bool plasma_like = kind_ == ModelKind::Plasma ||
                           (kind_ == ModelKind::Tabulated && tail_.kind == TailKind::Plasma);
  if (plasma_like) {
    return {1.0 - wp2 / (omega * omega), 0.0};
  }
  const std::complex<double> denom(omega * omega, omega * p.gamma);
  return 1.0 - wp2 / denom;
}

double DielectricModel::eval_imag(double xi) const {
  if (xi < 0.0 || !std::isfinite(xi)) {
    throw DomainError("eval_imag: xi must be >= 0 and finite");
  }
  const double wp2 = params_.omega_p * params_.omega_p;
  switch (kind_) {
    case ModelKind::Plasma:
      if (xi == 0.0) {
        if (wp2 == 0.0) return 1.0;  // vacuum
        return std::numeric_limits<double>::infinity();
      }
      return 1.0 + wp2 / (xi * xi);
    case ModelKind::Drude:
      if (xi == 0.0) {
        throw DomainError(
            "eval_imag: Drude permittivity diverges at xi = 0; use the "
            "zero-frequency reflection coefficients instead");
      }
      return 1.0 + wp2 / (xi * (xi + params_.gamma));
    case ModelKind::Tabulated:
      if (xi == 0.0) {
        throw DomainError(
            "eval_imag: tabulated permittivity has no xi = 0 value; use the "
            "zero-frequency reflection coefficients instead");
      }
      return kk_transform(table_, tail_, xi, kk_rel_tol_);
  }
  throw Error("eval_imag: unreachable");
}

Extrapolation DielectricModel::zero_frequency_tail() const {
  if (kind_ == ModelKind::Tabulated) return tail_;
  return Extrapolation{kind_ == ModelKind::Plasma ? TailKind::Plasma : TailKind::Drude,
                       params_};
}

bool DielectricModel::is_vacuum() const {
  if (params_.omega_p != 0.0) return false;
  if (kind_ == ModelKind::Tabulated) return all_zero(table_.im_eps());
  return true;
}

double DielectricModel::real_axis_limit() const {
  if (kind_ == ModelKind::Tabulated) return table_.omega_min();
  return std::numeric_limits<double>::infinity();
}

std::string DielectricModel::describe() const {
  std::ostringstream ss;
  ss.precision(9);
  ss << std::scientific;
  switch (kind_) {
    case ModelKind::Drude:
      ss << "drude omega_p=" << params_.omega_p << " gamma=" << params_.gamma;
      break;
    case ModelKind::Plasma:
      ss << "plasma omega_p=" << params_.omega_p;
      break;
    case ModelKind::Tabulated:
      ss << "tabulated samples=" << table_.size() << " range=[" << table_.omega_min()
         << "," << table_.omega_max() << "] tail="
         << (tail_.kind == TailKind::Drude ? "drude" : "plasma")
         << " omega_p=" << tail_.params.omega_p;
      if (tail_.kind == TailKind::Drude) ss << " gamma=" << tail_.params.gamma;
      break;
  }
  return ss.str();
}

}  // namespace casimir
