#pragma once

#include <casimir/evanescent.hpp>

#include <span>
#include <vector>

namespace casimir {

/// Four-channel decomposition of the Casimir pressure. Propagating parts are
/// defined by subtraction (total - evanescent); they are never integrated
/// directly, so tm_prop + tm_evan == tm_total holds exactly, and likewise for
/// TE and for tm_total + te_total == total.
struct PressureComponents {
  double tm_prop = 0.0;
  double tm_evan = 0.0;
  double te_prop = 0.0;
  double te_evan = 0.0;
  double tm_total = 0.0;
  double te_total = 0.0;
  double total = 0.0;
  double est_error = 0.0;  // channel errors combined in quadrature
};

PressureComponents decompose(const DielectricModel& model, const GeometryThermal& g,
                             const QuadratureConfig& cfg = {});

/// total / P_D0(a, T), the ratio to the Drude classical limit.
double ratio_to_classical(const PressureComponents& components,
                          const GeometryThermal& g);

/// (pD - pP) / pP. Serves both the Drude-vs-plasma TM comparison and the
/// simple-model-vs-optical-data comparison.
double relative_deviation_models(double p_d, double p_p);

struct SweepRow {
  double separation = 0.0;  // m
  PressureComponents components;
  double ratio_to_classical = 0.0;
};

/// One decomposition per separation, rows in grid order. Rows are computed in
/// parallel (thread count from CASIMIR_THREADS, default all cores).
std::vector<SweepRow> sweep(const DielectricModel& model,
                            std::span<const double> separations, double temperature,
                            const QuadratureConfig& cfg = {});

}  // namespace casimir
