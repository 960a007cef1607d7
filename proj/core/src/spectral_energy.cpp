#include "vacpulse/spectral_energy.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace vacpulse {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* kCsvHeader = "x,t,T00R";

// 9 significant digits, stable across platforms.
std::string format_g9(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", value);
  return buffer;
}

}  // namespace

double static_mode_density(double omega, double a_squared) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  return 0.25 * a_squared * omega;
}

double static_regularized_mode_density(const BoxSpectrum& spectrum, int n) {
  if (n < 0 || static_cast<std::size_t>(n) >= spectrum.modes.size())
    throw std::out_of_range("mode index outside spectrum");
  const BoxMode& mode = spectrum.modes[static_cast<std::size_t>(n)];
  return 0.25 * mode.a_squared * mode.omega -
         mode.omega0 / (2.0 * spectrum.box_length);
}

double static_density_integrand(double lambda0, double omega) {
  if (lambda0 == 0.0) return 0.0;
  const double r2 = lambda0 * lambda0 + omega * omega;
  return std::asin(lambda0 / std::sqrt(r2)) - lambda0 * omega / r2;
}

double static_density_continuum(double lambda0, double cutoff) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  if (lambda0 == 0.0) return 0.0;
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.cutoff = cutoff;
  const Integral result = integrate_1d(
      [lambda0](double w) { return static_density_integrand(lambda0, w); }, 0.0,
      cutoff, spec);
  return result.value / kTwoPi;
}

double static_total_energy(double lambda0) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  return lambda0 / kTwoPi;
}

double pulse_mode_density(double omega, double u, const PotentialProfile& profile) {
  if (omega <= 0.0) return 0.0;  // continuous extension at the endpoint
  const double lam = profile.lambda(u);
  if (lam == 0.0) return 0.0;  // past switch-off both terms vanish
  const Complex c = amplitude(omega, profile, u);
  return (lam * c.imag() + lam * lam * std::norm(c) / omega) / kTwoPi;
}

DensitySample pulse_density(double x, double t, const PotentialProfile& profile,
                            const QuadratureSpec& spec) {
  const double u = t - std::fabs(x);
  const SemiInfiniteIntegral result = integrate_semi_infinite(
      [&](double w) { return pulse_mode_density(w, u, profile); }, 0.0, spec);
  return {x, t, result.value};
}

void write_density_csv(std::ostream& out, const std::vector<DensitySample>& samples) {
  out << kCsvHeader << '\n';
  for (const DensitySample& s : samples) {
    out << format_g9(s.x) << ',' << format_g9(s.t) << ',' << format_g9(s.value)
        << '\n';
  }
}

std::string EnergyReport::to_json() const {
  nlohmann::json j;
  j["profile"] = nlohmann::json::parse(profile_json);
  j["E_initial"] = initial_energy;
  j["E_radiated_half"] = radiated_half;
  j["E_radiated_total"] = radiated_total;
  j["cutoff"] = cutoff;
  j["tail_estimate"] = tail_estimate;
  j["error_estimate"] = error_estimate;
  j["outer_subdivisions"] = outer_subdivisions;
  return j.dump();
}

EnergyReport radiated_energy(const PotentialProfile& profile,
                             const QuadratureSpec& spec) {
  if (!profile.switches_off())
    throw std::invalid_argument("radiated_energy requires a finite switch-off time");

  const double T = profile.switch_off_time();
  const Integral2D result = integrate_2d(
      [&](double u, double w) { return pulse_mode_density(w, u, profile); }, 0.0,
      T, spec);

  EnergyReport report;
  report.profile_json = profile.to_json();
  report.initial_energy = static_total_energy(profile.lambda0());
  report.radiated_half = result.value;
  report.radiated_total = 2.0 * result.value;
  report.cutoff = spec.cutoff;
  report.tail_estimate = std::fabs(result.tail_estimate);
  report.error_estimate = result.error_estimate;
  report.outer_subdivisions = result.outer_subdivisions;
  return report;
}

double step_mode_energy_change(double omega, double lambda0) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  const double half = 0.5 * lambda0;
  return -(3.0 / 8.0) * lambda0 * lambda0 * lambda0 * omega /
         ((omega * omega + half * half) * (omega * omega + lambda0 * lambda0));
}

double step_mode_energy_change_exact(double omega, double lambda0, double T) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  if (!(T >= 0.0)) throw std::invalid_argument("T must be >= 0");
  if (T == 0.0) return 0.0;
  const double c0 = std::norm(amplitude_static(omega, lambda0));
  const double cT = std::norm(amplitude_step(omega, lambda0, T));
  return -0.5 * lambda0 / omega * (cT - c0);
}

double step_energy_total(double lambda0, double cutoff) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  if (lambda0 == 0.0) return 0.0;
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.cutoff = cutoff;
  const Integral result = integrate_1d(
      [lambda0](double w) { return step_mode_energy_change(w, lambda0); }, 0.0,
      cutoff, spec);
  return result.value / kTwoPi;
}

double quasistatic_mode_energy_change(double omega, const PotentialProfile& profile) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
  const double lambda0 = profile.lambda0();
  if (lambda0 == 0.0) return 0.0;
  // Substituting the coupling for time makes the estimate exact for any
  // monotone profile; only the endpoints enter.
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  const Integral inner = integrate_1d(
      [omega](double lam) {
        const double denom = omega * omega + lam * lam;
        return lam * lam / (denom * denom);
      },
      0.0, lambda0, spec);
  return -2.0 * omega * inner.value;
}

double quasistatic_total(double lambda0) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  return -lambda0 / kTwoPi;
}

}  // namespace vacpulse
