#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "vacpulse/potential.hpp"

namespace vacpulse {

using Complex = std::complex<double>;

/// Static-era amplitude i*w / (i*w - lambda0): the fixed point of the
/// amplitude equation dC/dt + (lambda - i w) C = -i w.
Complex amplitude_static(double omega, double lambda0);

/// Closed-form amplitude under the step profile (coupling lambda0/2) at
/// 0 <= t <= T.
Complex amplitude_step(double omega, double lambda0, double t);

/// Forcing integral of the amplitude equation for the rational profile,
/// int_0^t exp(-i w s) exp(F(s)) ds in closed form.
Complex rational_forcing_integral(double omega, const PotentialProfile& profile,
                                  double t);

/// Closed-form amplitude under the rational profile at 0 <= t <= T.
Complex amplitude_rational(double omega, const PotentialProfile& profile, double t);

/// Free evolution once the coupling is zero: the scattered part C - 1
/// rotates at frequency w, so |C - 1| is preserved.
Complex amplitude_after_switch_off(Complex c_at_switch_off, double omega, double dt);

struct OdeOptions {
  double rel_tol = 1e-10;
  double abs_tol = 1e-10;
  long max_steps = 4'000'000;
};

/// Thrown when the adaptive integrator cannot reach the requested time.
class IntegrationError : public std::runtime_error {
 public:
  IntegrationError(const std::string& what, double t)
      : std::runtime_error(what), achieved_time(t) {}

  double achieved_time;
};

/// Adaptive Runge-Kutta (Dormand-Prince 5(4)) integration of the amplitude
/// equation from C(0) = i*w/(i*w - lambda0) to time t >= 0. Works for any
/// profile; this is the brute-force reference for the closed forms.
Complex amplitude_ode(double omega, const PotentialProfile& profile, double t,
                      const OdeOptions& options = {});

/// Amplitude at any time, dispatching on profile kind and era: static value
/// for t <= 0, the kind's closed form (or the ODE for Sampled) on [0, T],
/// free rotation beyond.
Complex amplitude(double omega, const PotentialProfile& profile, double t);

/// Even-parity mode function
///   f(x, t) = e^{-i w t} (A / sqrt(2 w)) (cos(w x) + B(t - |x|) e^{i w |x|})
/// with B = C - 1 evaluated at the retarded time u = t - |x|.
Complex mode_function(double omega, double x, double t,
                      const PotentialProfile& profile, double normalization);

struct BoxMode {
  int n = 0;
  double omega0 = 0.0;     // unperturbed frequency 2 pi (n + 1/2) / L
  double delta = 0.0;      // phase shift in [0, pi/2)
  double omega = 0.0;      // perturbed frequency omega0 + 2 delta / L
  double a_squared = 0.0;  // normalization A^2
};

struct BoxSpectrum {
  double box_length = 0.0;
  double lambda0 = 0.0;
  std::vector<BoxMode> modes;
};

/// Solves the finite-box quantization condition
///   w cos(w L / 2) = -lambda0 sin(w L / 2)
/// for n = 0..n_max by bisecting the phase-shift equation
///   (omega0 + 2 delta / L) sin(delta) = lambda0 cos(delta)
/// on [0, pi/2), and fills in the normalization of each mode.
BoxSpectrum quantized_frequencies(double lambda0, double box_length, int n_max);

}  // namespace vacpulse
