#pragma once

#include <casimir/errors.hpp>

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

// Default Au parameters (rad/s).
namespace au {
inline constexpr double plasma_frequency = 1.37e16;
inline constexpr double relaxation = 0.53e14;
}  // namespace au

/// Drude parameters; gamma = 0 degenerates to the plasma model and
/// omega_p = 0 to vacuum.
struct DrudeParams {
  double omega_p = 0.0;  // plasma frequency, rad/s
  double gamma = 0.0;    // relaxation parameter, rad/s

  static DrudeParams gold() { return {au::plasma_frequency, au::relaxation}; }
};

/// Validates omega_p >= 0, gamma >= 0, both finite. Throws ValidationError.
void validate(const DrudeParams& p);

/// Sorted samples of Im eps(omega) on the real frequency axis.
class OpticalTable {
 public:
  /// Takes ownership of parallel arrays; validates strict ascending omega > 0,
  /// im_eps >= 0, at least 2 samples.
  OpticalTable(std::vector<double> omega, std::vector<double> im_eps);

  /// Parses the text format: '#' comments, a '# columns: ...' header naming
  /// either (omega_rad_s, im_eps) or (omega_rad_s, n, k), then whitespace- or
  /// comma-separated rows ascending in omega. Errors carry the line number.
  static OpticalTable parse(std::istream& in, const std::string& origin = "<stream>");
  static OpticalTable load(const std::string& path);

  size_t size() const { return omega_.size(); }
  const std::vector<double>& omega() const { return omega_; }
  const std::vector<double>& im_eps() const { return im_eps_; }
  double omega_min() const { return omega_.front(); }
  double omega_max() const { return omega_.back(); }

  /// Piecewise interpolation of Im eps inside [omega_min, omega_max]:
  /// log-log linear, falling back to linear when a segment touches zero.
  double interpolate(double omega) const;

 private:
  std::vector<double> omega_;
  std::vector<double> im_eps_;
};

enum class TailKind { Drude, Plasma };

/// Low-frequency continuation of tabulated data below the first sample.
/// DrudeTail requires gamma > 0; PlasmaTail ignores gamma.
struct Extrapolation {
  TailKind kind = TailKind::Drude;
  DrudeParams params;
};

void validate(const Extrapolation& tail);

enum class ModelKind { Drude, Plasma, Tabulated };

/// Kramers-Kronig transform to the imaginary axis:
///   eps(i xi) = 1 + (2/pi) Int_0^inf w Im eps(w) / (w^2 + xi^2) dw,
/// with Im eps taken from the tail model below the table, the interpolated
/// table inside it, and an w^-3 continuation matched at the last sample above.
double kk_transform(const OpticalTable& table, const Extrapolation& tail,
                    double xi, double rel_tol = 1e-9);

/// Diagnostic for the hard tail/table switch: relative change of
/// kk_transform when the junction moves up by `drop` samples (the tail model
/// then covers the dropped span). Small values mean the extrapolation and the
/// first table samples agree. Requires at least drop + 2 samples.
double kk_junction_sensitivity(const OpticalTable& table, const Extrapolation& tail,
                               double xi, int drop = 1);

/// A plate's permittivity model, evaluable on both frequency axes.
class DielectricModel {
 public:
  static DielectricModel drude(DrudeParams p);
  static DielectricModel drude(double omega_p, double gamma) {
    return drude(DrudeParams{omega_p, gamma});
  }
  static DielectricModel plasma(double omega_p);
  static DielectricModel tabulated(OpticalTable table, Extrapolation tail);

  ModelKind kind() const { return kind_; }

  /// eps(omega) on the real axis, omega > 0. For Tabulated models defined only
  /// below the first table sample (the extrapolation tail region).
  std::complex<double> eval_real(double omega) const;

  /// eps(i xi) on the imaginary axis. xi = 0 is allowed only for the plasma
  /// model (and vacuum); Drude/Tabulated diverge there, and xi = 0 physics is
  /// owned by the zero-frequency reflection coefficients.
  double eval_imag(double xi) const;

  /// Tail behaviour governing the zero-frequency (l = 0) reflection
  /// coefficients: the model's own parameters for Drude/Plasma, the
  /// extrapolation for Tabulated.
  Extrapolation zero_frequency_tail() const;

  /// True when eps is identically 1 (omega_p = 0 and, for tables, no
  /// absorption anywhere).
  bool is_vacuum() const;

  /// Real-axis evaluation limit for Tabulated models (+inf otherwise).
  double real_axis_limit() const;

  const OpticalTable* table() const { return kind_ == ModelKind::Tabulated ? &table_ : nullptr; }
  const DrudeParams& drude_params() const { return params_; }

  /// Short human-readable description used in CSV metadata.
  std::string describe() const;

 private:
  DielectricModel() : table_({1.0, 2.0}, {0.0, 0.0}) {}

  ModelKind kind_ = ModelKind::Drude;
  DrudeParams params_;      // Drude/Plasma parameters (gamma = 0 for Plasma)
  OpticalTable table_;      // meaningful only for Tabulated
  Extrapolation tail_;      // meaningful only for Tabulated
  double kk_rel_tol_ = 1e-9;
};

}  // namespace casimir
