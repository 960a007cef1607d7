#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vacpulse {

enum class ProfileKind { Static, Step, Rational, Sampled };

std::string to_string(ProfileKind kind);

/// Time history of the delta-potential coupling: constant lambda0 for t < 0,
/// then (except for Static) a monotone decrease to zero over [0, T].
///
/// Units use c = 1 throughout; the coupling carries inverse-length dimension.
class PotentialProfile {
 public:
  /// lambda(t) = lambda0 for all t.
  static PotentialProfile static_coupling(double lambda0);

  /// lambda drops to lambda0/2 on [0, T], then to zero. Default T = 100/lambda0.
  static PotentialProfile step(double lambda0,
                               std::optional<double> switch_off_time = std::nullopt);

  /// lambda(t) = f2/(1 + f2 t) - (f2 - lambda0) on [0, T] with
  /// T = lambda0 / (f2 (f2 - lambda0)). Requires f2 > lambda0 > 0.
  static PotentialProfile rational(double lambda0, double f2);

  /// Piecewise-linear profile through (t, lambda) samples. The samples must
  /// start at t = 0, be strictly increasing in t, non-increasing in lambda,
  /// and end at lambda = 0.
  static PotentialProfile sampled(std::vector<std::array<double, 2>> samples);

  /// Coupling strength at time t.
  double lambda(double t) const;

  /// Integral of lambda(u) over [0, t]. Requires t >= 0.
  double integrated_lambda(double t) const;

  /// Time at which the coupling reaches zero. Throws std::domain_error for
  /// Static profiles, which never switch off.
  double switch_off_time() const;

  bool switches_off() const { return kind_ != ProfileKind::Static; }

  ProfileKind kind() const { return kind_; }
  double lambda0() const { return lambda0_; }
  /// Rational-profile rate parameters; throw std::domain_error otherwise.
  double f2() const;
  double f3() const;
  const std::vector<std::array<double, 2>>& samples() const { return samples_; }

  /// Times at which the coupling history loses smoothness. ODE integration
  /// restarts at these points.
  std::vector<double> breakpoints() const;

  /// JSON object {"kind": ..., "lambda0": ..., "f2": ..., "T": ..., "samples": ...}.
  static PotentialProfile from_json(std::string_view text);
  std::string to_json() const;

 private:
  PotentialProfile() = default;

  ProfileKind kind_ = ProfileKind::Static;
  double lambda0_ = 0.0;
  double f2_ = 0.0;
  double f3_ = 0.0;
  double switch_off_ = 0.0;  // unused for Static
  std::vector<std::array<double, 2>> samples_;
};

}  // namespace vacpulse
