#include <benchmark/benchmark.h>

#include <cmath>

#include "vacpulse/mode_dynamics.hpp"
#include "vacpulse/potential.hpp"
#include "vacpulse/quadrature.hpp"
#include "vacpulse/spectral_energy.hpp"

namespace {

using namespace vacpulse;

void BM_AmplitudeRational(benchmark::State& state) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  double omega = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(amplitude_rational(omega, profile, 0.3));
    omega = omega < 50.0 ? omega + 0.1 : 0.5;
  }
}
BENCHMARK(BM_AmplitudeRational);

void BM_AmplitudeOde(benchmark::State& state) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  const double omega = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(amplitude_ode(omega, profile, 0.5));
  }
}
BENCHMARK(BM_AmplitudeOde)->Arg(1)->Arg(10)->Arg(50);

void BM_PulseModeDensity(benchmark::State& state) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  double omega = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pulse_mode_density(omega, 0.2, profile));
    omega = omega < 100.0 ? omega + 0.1 : 0.5;
  }
}
BENCHMARK(BM_PulseModeDensity);

void BM_PulseDensity(benchmark::State& state) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pulse_density(0.3, 0.6, profile));
  }
}
BENCHMARK(BM_PulseDensity);

void BM_RadiatedEnergyRow(benchmark::State& state) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(radiated_energy(profile).radiated_half);
  }
}
BENCHMARK(BM_RadiatedEnergyRow)->Unit(benchmark::kMillisecond);

void BM_QuantizedFrequencies(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(quantized_frequencies(1.0, 100.0, n_max));
  }
}
BENCHMARK(BM_QuantizedFrequencies)->Arg(50)->Arg(500);

void BM_Integrate1dOscillatory(benchmark::State& state) {
  QuadratureSpec spec;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate_1d([](double x) { return std::sin(20.0 * x) * std::exp(-x); },
                     0.0, 10.0, spec)
            .value);
  }
}
BENCHMARK(BM_Integrate1dOscillatory);

}  // namespace

BENCHMARK_MAIN();
