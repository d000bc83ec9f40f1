#include <casimir/decomposition.hpp>

#include <casimir/parallel.hpp>

#include <cmath>

namespace casimir {

PressureComponents decompose(const DielectricModel& model, const GeometryThermal& g,
                             const QuadratureConfig& cfg) {
  validate(g);
  validate(cfg);

  const PolarizedPressure tm = pressure_polarized(model, Polarization::TM, g, cfg);
  const PolarizedPressure te = pressure_polarized(model, Polarization::TE, g, cfg);
  const EvanescentResult tm_ev = evanescent_pressure(model, Polarization::TM, g, cfg);
  const EvanescentResult te_ev = evanescent_pressure(model, Polarization::TE, g, cfg);

  PressureComponents out;
  out.tm_evan = tm_ev.value;
  out.te_evan = te_ev.value;
  out.tm_prop = tm.value - tm_ev.value;
  out.te_prop = te.value - te_ev.value;
  // Reassemble the totals from the split so the published invariants
  // (prop + evan == total, tm + te == total) hold bit-exactly; the reassembly
  // differs from the direct sums by at most one rounding.
  out.tm_total = out.tm_prop + out.tm_evan;
  out.te_total = out.te_prop + out.te_evan;
  out.total = out.tm_total + out.te_total;
  out.est_error = std::sqrt(tm.est_error * tm.est_error + te.est_error * te.est_error +
                            tm_ev.est_error * tm_ev.est_error +
                            te_ev.est_error * te_ev.est_error);
  return out;
}

double ratio_to_classical(const PressureComponents& components,
                          const GeometryThermal& g) {
  return components.total / classical_limit(ModelKind::Drude, g);
}

double relative_deviation_models(double p_d, double p_p) {
  if (p_p == 0.0) {
    throw DomainError("relative_deviation_models: reference pressure is zero");
  }
  return (p_d - p_p) / p_p;
}

std::vector<SweepRow> sweep(const DielectricModel& model,
                            std::span<const double> separations, double temperature,
                            const QuadratureConfig& cfg) {
  if (separations.empty()) {
    throw ValidationError("sweep: separation grid is empty");
  }
  for (size_t i = 0; i < separations.size(); ++i) {
    if (!(separations[i] > 0.0)) {
      throw ValidationError("sweep: separations must be positive");
    }
    if (i > 0 && !(separations[i] > separations[i - 1])) {
      throw ValidationError("sweep: separations must be strictly increasing");
    }
  }
  std::vector<SweepRow> rows(separations.size());
  parallel_for(separations.size(), [&](std::size_t i) {
    const GeometryThermal g{separations[i], temperature};
    SweepRow row;
    row.separation = separations[i];
    row.components = decompose(model, g, cfg);
    row.ratio_to_classical = ratio_to_classical(row.components, g);
    rows[i] = row;
  });
  return rows;
}

}  // namespace casimir
