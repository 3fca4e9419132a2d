#include <benchmark/benchmark.h>

#include "bplat/bessel.hpp"
#include "bplat/conditions.hpp"
#include "bplat/dynamics.hpp"
#include "bplat/transport.hpp"

using namespace bplat;

namespace {

LatticeGeometry geom(int half) { return LatticeGeometry{2.0, 2.2, -half, half}; }
DriveParams drive(double phi = 1.9275090655132916) {
  return DriveParams{1.0, 0.8, 30.0, 30.0, 2, phi};
}

void BesselJ(benchmark::State &state) {
  const int m = static_cast<int>(state.range(0));
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j(m, x));
    x += 0.37;
    if (x > 45.0) {
      x = 0.1;
    }
  }
}
BENCHMARK(BesselJ)->Arg(0)->Arg(2)->Arg(8);

void EffectiveRate(benchmark::State &state) {
  double phi = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(effective_rate(1.0, 0.8, 2, phi, 2.2));
    phi += 1e-3;
  }
}
BENCHMARK(EffectiveRate);

void AnalyticAmplitudes(benchmark::State &state) {
  const LatticeGeometry g = geom(static_cast<int>(state.range(0)));
  const EffectiveRates r = rates_for_site(drive(), GapArguments{2.0, 2.2}, SiteParity::even);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analytic_amplitudes(r, 0, 20.0, g));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(AnalyticAmplitudes)->Arg(30)->Arg(60)->Arg(120)->Complexity();

void IntegrateAveraged(benchmark::State &state) {
  const LatticeGeometry g = geom(60);
  const ParityRates rates = rates_by_parity(drive(), GapArguments{2.0, 2.2});
  const WaveState s0 = localized_state(g, 0, Picture::averaged);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_averaged(rates, g, s0, 25.0, IntegratorConfig{}));
  }
}
BENCHMARK(IntegrateAveraged)->Unit(benchmark::kMillisecond);

void IntegrateFullDrivePeriod(benchmark::State &state) {
  const LatticeGeometry g = geom(static_cast<int>(state.range(0)));
  const DriveParams d = drive();
  const WaveState s0 = localized_state(g, 0, Picture::full);
  IntegratorConfig cfg;
  cfg.samples = 1;
  const double period = 2.0 * 3.141592653589793 / d.omega;
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_full(g, d, s0, period, cfg));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(IntegrateFullDrivePeriod)->Arg(30)->Arg(60)->Arg(120)->Complexity();

} // namespace

BENCHMARK_MAIN();
