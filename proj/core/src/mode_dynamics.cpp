#include "vacpulse/mode_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace vacpulse {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_positive_omega(double omega) {
  if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
}

// Right-hand side of dC/dt = -i w - (lambda(t) - i w) C.
Complex amplitude_rhs(double omega, double lam, Complex c) {
  return -kI * omega - (lam - kI * omega) * c;
}

// Dormand-Prince 5(4) step of the amplitude equation on a smooth stretch of
// the profile. FSAL: k1 of the next step reuses k7.
struct Dopri5 {
  double omega;
  const PotentialProfile& profile;

  Complex stages(double t, Complex y, double h, Complex k1, Complex& y5,
                 Complex& err) const {
    auto f = [&](double s, Complex v) {
      return amplitude_rhs(omega, profile.lambda(s), v);
    };
    const Complex k2 = f(t + h / 5.0, y + h * (k1 / 5.0));
    const Complex k3 = f(t + 3.0 * h / 10.0, y + h * (3.0 / 40.0 * k1 + 9.0 / 40.0 * k2));
    const Complex k4 = f(t + 4.0 * h / 5.0,
                         y + h * (44.0 / 45.0 * k1 - 56.0 / 15.0 * k2 + 32.0 / 9.0 * k3));
    const Complex k5 =
        f(t + 8.0 * h / 9.0,
          y + h * (19372.0 / 6561.0 * k1 - 25360.0 / 2187.0 * k2 +
                   64448.0 / 6561.0 * k3 - 212.0 / 729.0 * k4));
    const Complex k6 =
        f(t + h, y + h * (9017.0 / 3168.0 * k1 - 355.0 / 33.0 * k2 +
                          46732.0 / 5247.0 * k3 + 49.0 / 176.0 * k4 -
                          5103.0 / 18656.0 * k5));
    y5 = y + h * (35.0 / 384.0 * k1 + 500.0 / 1113.0 * k3 + 125.0 / 192.0 * k4 -
                  2187.0 / 6784.0 * k5 + 11.0 / 84.0 * k6);
    const Complex k7 = f(t + h, y5);
    err = h * (71.0 / 57600.0 * k1 - 71.0 / 16695.0 * k3 + 71.0 / 1920.0 * k4 -
               17253.0 / 339200.0 * k5 + 22.0 / 525.0 * k6 - 1.0 / 40.0 * k7);
    return k7;
  }
};

// Integrates over [t0, t1] with no interior breakpoints.
Complex integrate_stretch(double omega, const PotentialProfile& profile,
                          Complex y, double t0, double t1,
                          const OdeOptions& options, long& steps) {
  if (t1 <= t0) return y;

  const Dopri5 rk{omega, profile};
  double t = t0;
  // Initial step: resolve the oscillation frequency comfortably.
  double h = std::min(t1 - t0, 0.1 / std::max(1.0, omega));
  Complex k1 = amplitude_rhs(omega, profile.lambda(t), y);

  while (t < t1) {
    if (++steps > options.max_steps) {
      throw IntegrationError("amplitude_ode: step budget exhausted", t);
    }
    h = std::min(h, t1 - t);
    if (t + h <= t) {
      throw IntegrationError("amplitude_ode: step size underflow", t);
    }

    Complex y5, err;
    const Complex k7 = rk.stages(t, y, h, k1, y5, err);
    const double scale =
        options.abs_tol +
        options.rel_tol * std::max(std::abs(y), std::abs(y5));
    const double err_norm = std::abs(err) / scale;

    if (err_norm <= 1.0) {
      t += h;
      y = y5;
      k1 = k7;  // FSAL
      const double factor =
          err_norm == 0.0 ? 5.0 : 0.9 * std::pow(err_norm, -0.2);
      h *= std::clamp(factor, 0.2, 5.0);
    } else {
      h *= std::max(0.2, 0.9 * std::pow(err_norm, -0.2));
    }
  }
  return y;
}

}  // namespace

Complex amplitude_static(double omega, double lambda0) {
  require_positive_omega(omega);
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  const Complex iw = kI * omega;
  return iw / (iw - lambda0);
}

Complex amplitude_step(double omega, double lambda0, double t) {
  require_positive_omega(omega);
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");
  const Complex iw = kI * omega;
  const double half = 0.5 * lambda0;
  const Complex steady = iw / (iw - half);
  const Complex transient = amplitude_static(omega, lambda0) + iw / (half - iw);
  return transient * std::exp(iw * t) * std::exp(-half * t) + steady;
}

Complex rational_forcing_integral(double omega, const PotentialProfile& profile,
                                  double t) {
  require_positive_omega(omega);
  if (profile.kind() != ProfileKind::Rational)
    throw std::invalid_argument("rational profile required");
  if (!(t >= 0.0 && t <= profile.switch_off_time()))
    throw std::invalid_argument("t must lie in [0, T]");
  const double f2 = profile.f2();
  const Complex a = kI * omega + profile.f3();
  const Complex decay = std::exp(-a * t);
  return (1.0 - decay) / a * (1.0 + f2 / a) - f2 * (t * decay / a);
}

Complex amplitude_rational(double omega, const PotentialProfile& profile, double t) {
  require_positive_omega(omega);
  if (profile.kind() != ProfileKind::Rational)
    throw std::invalid_argument("rational profile required");
  if (!(t >= 0.0 && t <= profile.switch_off_time()))
    throw std::invalid_argument("t must lie in [0, T]");
  const double f2 = profile.f2();
  const double f3 = profile.f3();
  const Complex c0 = amplitude_static(omega, profile.lambda0());
  const Complex g = rational_forcing_integral(omega, profile, t);
  return std::exp((kI * omega + f3) * t) / (1.0 + f2 * t) *
         (c0 - kI * omega * g);
}

Complex amplitude_after_switch_off(Complex c_at_switch_off, double omega, double dt) {
  if (!(dt >= 0.0)) throw std::invalid_argument("dt must be >= 0");
  if (dt == 0.0) return c_at_switch_off;
  return 1.0 + (c_at_switch_off - 1.0) * std::exp(kI * omega * dt);
}

Complex amplitude_ode(double omega, const PotentialProfile& profile, double t,
                      const OdeOptions& options) {
  require_positive_omega(omega);
  if (!(t >= 0.0)) throw std::invalid_argument("t must be >= 0");

  Complex y = amplitude_static(omega, profile.lambda0());
  long steps = 0;
  double current = 0.0;
  for (double bp : profile.breakpoints()) {
    if (bp <= current) continue;
    if (bp >= t) break;
    y = integrate_stretch(omega, profile, y, current, bp, options, steps);
    current = bp;
  }
  return integrate_stretch(omega, profile, y, current, t, options, steps);
}

Complex amplitude(double omega, const PotentialProfile& profile, double t) {
  require_positive_omega(omega);
  if (t <= 0.0 || profile.kind() == ProfileKind::Static)
    return amplitude_static(omega, profile.lambda0());

  const double T = profile.switch_off_time();
  const double in_window = std::min(t, T);
  Complex c;
  switch (profile.kind()) {
    case ProfileKind::Step:
      c = amplitude_step(omega, profile.lambda0(), in_window);
      break;
    case ProfileKind::Rational:
      c = amplitude_rational(omega, profile, in_window);
      break;
    default:
      c = amplitude_ode(omega, profile, in_window);
      break;
  }
  if (t <= T) return c;
  return amplitude_after_switch_off(c, omega, t - T);
}

Complex mode_function(double omega, double x, double t,
                      const PotentialProfile& profile, double normalization) {
  require_positive_omega(omega);
  const double ax = std::fabs(x);
  const Complex b = amplitude(omega, profile, t - ax) - 1.0;
  const Complex spatial = std::cos(omega * ax) + b * std::exp(kI * omega * ax);
  return std::exp(-kI * omega * t) * normalization / std::sqrt(2.0 * omega) * spatial;
}

BoxSpectrum quantized_frequencies(double lambda0, double box_length, int n_max) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  if (!(box_length > 0.0)) throw std::invalid_argument("box length must be positive");
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");

  BoxSpectrum spectrum;
  spectrum.box_length = box_length;
  spectrum.lambda0 = lambda0;
  spectrum.modes.reserve(static_cast<std::size_t>(n_max) + 1);

  constexpr double kHalfPi = std::numbers::pi / 2.0;
  for (int n = 0; n <= n_max; ++n) {
    BoxMode mode;
    mode.n = n;
    mode.omega0 = 2.0 * std::numbers::pi * (n + 0.5) / box_length;

    if (lambda0 == 0.0) {
      mode.delta = 0.0;
      mode.omega = mode.omega0;
      mode.a_squared = 2.0 / box_length;
      spectrum.modes.push_back(mode);
      continue;
    }

    // g(delta) = (omega0 + 2 delta / L) sin(delta) - lambda0 cos(delta) is
    // monotone on [0, pi/2) with g(0) < 0 < g(pi/2).
    auto g = [&](double delta) {
      return (mode.omega0 + 2.0 * delta / box_length) * std::sin(delta) -
             lambda0 * std::cos(delta);
    };
    double lo = 0.0, hi = kHalfPi;
    for (int iter = 0; iter < 200 && hi - lo > 1e-14; ++iter) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    mode.delta = 0.5 * (lo + hi);
    mode.omega = mode.omega0 + 2.0 * mode.delta / box_length;

    const double residual = mode.omega * std::cos(mode.omega * box_length / 2.0) +
                            lambda0 * std::sin(mode.omega * box_length / 2.0);
    if (std::fabs(residual) > 1e-9) {
      throw std::runtime_error("quantized_frequencies: root solve failed at n = " +
                               std::to_string(n) + " (residual " +
                               std::to_string(residual) + ")");
    }

    mode.a_squared =
        (2.0 / box_length) /
        (1.0 + 2.0 * lambda0 /
                   ((lambda0 * lambda0 + mode.omega * mode.omega) * box_length));
    spectrum.modes.push_back(mode);
  }
  return spectrum;
}

}  // namespace vacpulse
