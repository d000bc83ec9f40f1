#include <benchmark/benchmark.h>

#include <casimir/decomposition.hpp>

#include <vector>

using namespace casimir;

namespace {

const DielectricModel& gold() {
  static const DielectricModel m = DielectricModel::drude(DrudeParams::gold());
  return m;
}

void BM_MatsubaraPressure(benchmark::State& state) {
  const GeometryThermal g{state.range(0) * 1e-7, 300.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(pressure_polarized(gold(), Polarization::TM, g).value);
  }
}
BENCHMARK(BM_MatsubaraPressure)->Arg(5)->Arg(10)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_EvanescentPressure(benchmark::State& state) {
  const GeometryThermal g{state.range(0) * 1e-7, 300.0};
  const Polarization pol = state.range(1) ? Polarization::TE : Polarization::TM;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evanescent_pressure(gold(), pol, g).value);
  }
}
BENCHMARK(BM_EvanescentPressure)
    ->Args({10, 0})
    ->Args({10, 1})
    ->Args({40, 1})
    ->Unit(benchmark::kMillisecond);

void BM_KKTransform(benchmark::State& state) {
  std::vector<double> w, im;
  for (int k = 0; k <= 140; ++k) {
    const double x = 1e11 * std::pow(10.0, k / 20.0);
    w.push_back(x);
    im.push_back(au::plasma_frequency * au::plasma_frequency * au::relaxation /
                 (x * (x * x + au::relaxation * au::relaxation)));
  }
  const OpticalTable table(std::move(w), std::move(im));
  const Extrapolation tail{TailKind::Drude, DrudeParams::gold()};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kk_transform(table, tail, 2.5e14));
  }
}
BENCHMARK(BM_KKTransform)->Unit(benchmark::kMicrosecond);

void BM_Decompose(benchmark::State& state) {
  const GeometryThermal g{1e-6, 300.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(gold(), g).total);
  }
}
BENCHMARK(BM_Decompose)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
