#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "vacpulse/mode_dynamics.hpp"
#include "vacpulse/potential.hpp"
#include "vacpulse/quadrature.hpp"

namespace vacpulse {

/// Static per-mode kinetic energy density A^2 w / 4 (space and time independent).
double static_mode_density(double omega, double a_squared);

/// Per-mode regularized static density A^2 w_n / 4 - w_{0,n} / (2 L) for mode n
/// of a finite-box spectrum. O(1/L^2) for large boxes.
double static_regularized_mode_density(const BoxSpectrum& spectrum, int n);

/// Large-L limit of L^2 times the regularized per-mode density,
///   arcsin(lambda0 / sqrt(lambda0^2 + w^2)) - lambda0 w / (lambda0^2 + w^2).
/// Also the integrand of the continuum static density.
double static_density_integrand(double lambda0, double omega);

/// L times the regularized static density in the continuum limit:
/// (1/2pi) times the integral of static_density_integrand over [0, cutoff].
/// Converges to lambda0 / (2 pi) as the cutoff grows; the integrand decays
/// slowly (~ lambda0^3 / w^3), so cutoffs of order 1e4 are needed for 1e-3
/// relative accuracy.
double static_density_continuum(double lambda0, double cutoff);

/// Total static kinetic energy lambda0 / (2 pi), closed form.
double static_total_energy(double lambda0);

/// Continuum per-mode radiated energy density at retarded time u:
///   (1 / 4 pi w) (-i w lambda(u) (C - C*) + 2 lambda(u)^2 |C|^2).
/// Zero for u past switch-off; cancels identically in the static era.
double pulse_mode_density(double omega, double u, const PotentialProfile& profile);

struct DensitySample {
  double x = 0.0;
  double t = 0.0;
  double value = 0.0;  // regularized kinetic energy density T00R
};

/// Regularized kinetic energy density at (x, t): the integral of
/// pulse_mode_density over frequencies [0, cutoff] at u = t - |x|.
/// Even in x; vanishes outside the causal shell 0 < t - |x| < T.
DensitySample pulse_density(double x, double t, const PotentialProfile& profile,
                            const QuadratureSpec& spec = {});

/// Writes samples as CSV with header "x,t,T00R", 9 significant digits.
void write_density_csv(std::ostream& out, const std::vector<DensitySample>& samples);

struct EnergyReport {
  std::string profile_json;      // parameters of the profile that radiated
  double initial_energy = 0.0;   // static total energy lambda0 / (2 pi)
  double radiated_half = 0.0;    // E(0 -> T), the x > 0 half-line
  double radiated_total = 0.0;   // both half-lines
  double cutoff = 0.0;
  double tail_estimate = 0.0;    // |[cutoff, 2*cutoff] frequency band|
  double error_estimate = 0.0;
  int outer_subdivisions = 0;

  std::string to_json() const;
};

/// Energy radiated over the switch-off interval, per half-line: the double
/// integral of pulse_mode_density over u in [0, T] and frequencies up to the
/// cutoff. Negative for every decreasing profile tested. Throws
/// std::invalid_argument for Static profiles and QuadratureError when the
/// subdivision budget is exhausted.
EnergyReport radiated_energy(const PotentialProfile& profile,
                             const QuadratureSpec& spec = {});

/// Step-profile per-mode kinetic-energy change in the large-T regime,
/// continuum normalization (A^2 -> 2; the 1/(2 pi) measure is applied by the
/// caller when summing). Strictly negative for w > 0.
double step_mode_energy_change(double omega, double lambda0);

/// Exact per-mode change over [0, T] for the step profile, same normalization,
/// via the closed-form amplitude (no large-T approximation).
double step_mode_energy_change_exact(double omega, double lambda0, double T);

/// Frequency integral of step_mode_energy_change with the 1/(2 pi) measure.
/// Converges to -lambda0 ln(2) / (4 pi); the default cutoff over-resolves that.
double step_energy_total(double lambda0, double cutoff = 1e4);

/// Quasi-static estimate of the per-mode change when the coupling descends
/// from lambda0 to zero, continuum normalization, evaluated by quadrature in
/// the coupling variable (exact for monotone profiles).
double quasistatic_mode_energy_change(double omega, const PotentialProfile& profile);

/// Quasi-static total change -lambda0 / (2 pi), closed form; equal and
/// opposite to static_total_energy.
double quasistatic_total(double lambda0);

}  // namespace vacpulse
