#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace vacpulse {

/// Tolerances and limits shared by every integration routine.
struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 10000;
  /// Upper truncation of semi-infinite frequency integrals.
  double cutoff = 100.0;

  void validate() const;  // throws std::invalid_argument on bad fields
};

/// Thrown when the subdivision budget runs out before the requested tolerance
/// is met. Carries the best estimate obtained so far.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double best, double err)
      : std::runtime_error(what), best_estimate(best), error_estimate(err) {}

  double best_estimate;
  double error_estimate;
};

struct Integral {
  double value = 0.0;
  double error_estimate = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive Gauss-Kronrod 7-15 integration on a finite interval.
/// Deterministic: a fixed spec and integrand give bit-identical results.
Integral integrate_1d(const Integrand& f, double a, double b,
                      const QuadratureSpec& spec = {});

struct SemiInfiniteIntegral {
  double value = 0.0;          // integral over [a, cutoff]
  double error_estimate = 0.0;
  double tail_estimate = 0.0;  // |integral over [cutoff, 2*cutoff]|
  int subdivisions = 0;
};

/// Truncated integral over [a, spec.cutoff] plus a one-octave tail probe so
/// callers can check that the truncation is safe.
SemiInfiniteIntegral integrate_semi_infinite(const Integrand& f, double a,
                                             const QuadratureSpec& spec = {});

using Integrand2D = std::function<double(double, double)>;

struct Integral2D {
  double value = 0.0;          // iterated integral, inner w in [0, cutoff]
  double error_estimate = 0.0; // outer error estimate
  double tail_estimate = 0.0;  // signed contribution of the [cutoff, 2*cutoff] band
  int outer_subdivisions = 0;
};

/// Iterated integration of f(u, w): adaptive inner integral in w over
/// [0, spec.cutoff] at each outer node, adaptive outer integral in u over
/// [u_lo, u_hi]. The [cutoff, 2*cutoff] frequency band is integrated alongside
/// (same outer nodes) and reported as a signed tail estimate.
Integral2D integrate_2d(const Integrand2D& f, double u_lo, double u_hi,
                        const QuadratureSpec& spec = {});

}  // namespace vacpulse
