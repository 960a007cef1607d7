#include "vacpulse/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace vacpulse {

namespace {

using nlohmann::json;

void validate_samples(const std::vector<std::array<double, 2>>& samples) {
  if (samples.size() < 2)
    throw std::invalid_argument("sampled profile needs at least two samples");
  if (samples.front()[0] != 0.0)
    throw std::invalid_argument("sampled profile must start at t = 0");
  if (samples.back()[1] != 0.0)
    throw std::invalid_argument("sampled profile must end at lambda = 0");
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!(samples[i][1] >= 0.0))
      throw std::invalid_argument("sampled profile has a negative coupling");
    if (i == 0) continue;
    if (!(samples[i][0] > samples[i - 1][0]))
      throw std::invalid_argument("sample times must be strictly increasing");
    if (samples[i][1] > samples[i - 1][1])
      throw std::invalid_argument("sampled coupling must be non-increasing");
  }
}

}  // namespace

std::string to_string(ProfileKind kind) {
  switch (kind) {
    case ProfileKind::Static: return "static";
    case ProfileKind::Step: return "step";
    case ProfileKind::Rational: return "rational";
    case ProfileKind::Sampled: return "sampled";
  }
  return "unknown";
}

PotentialProfile PotentialProfile::static_coupling(double lambda0) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  PotentialProfile p;
  p.kind_ = ProfileKind::Static;
  p.lambda0_ = lambda0;
  return p;
}

PotentialProfile PotentialProfile::step(double lambda0,
                                        std::optional<double> switch_off_time) {
  if (!(lambda0 >= 0.0)) throw std::invalid_argument("lambda0 must be >= 0");
  PotentialProfile p;
  p.kind_ = ProfileKind::Step;
  p.lambda0_ = lambda0;
  if (switch_off_time) {
    if (!(*switch_off_time > 0.0))
      throw std::invalid_argument("switch-off time must be positive");
    p.switch_off_ = *switch_off_time;
  } else {
    if (!(lambda0 > 0.0))
      throw std::invalid_argument("default T = 100/lambda0 needs lambda0 > 0");
    p.switch_off_ = 100.0 / lambda0;
  }
  return p;
}

PotentialProfile PotentialProfile::rational(double lambda0, double f2) {
  if (!(lambda0 > 0.0)) throw std::invalid_argument("lambda0 must be > 0");
  if (!(f2 > lambda0))
    throw std::invalid_argument("rational profile requires f2 > lambda0");
  PotentialProfile p;
  p.kind_ = ProfileKind::Rational;
  p.lambda0_ = lambda0;
  p.f2_ = f2;
  p.f3_ = f2 - lambda0;
  p.switch_off_ = lambda0 / (f2 * (f2 - lambda0));
  return p;
}

PotentialProfile PotentialProfile::sampled(std::vector<std::array<double, 2>> samples) {
  validate_samples(samples);
  PotentialProfile p;
  p.kind_ = ProfileKind::Sampled;
  p.lambda0_ = samples.front()[1];
  p.switch_off_ = samples.back()[0];
  p.samples_ = std::move(samples);
  return p;
}

double PotentialProfile::lambda(double t) const {
  if (t < 0.0) return lambda0_;
  switch (kind_) {
    case ProfileKind::Static:
      return lambda0_;
    case ProfileKind::Step:
      return t <= switch_off_ ? 0.5 * lambda0_ : 0.0;
    case ProfileKind::Rational: {
      if (t > switch_off_) return 0.0;
      const double value = f2_ / (1.0 + f2_ * t) - f3_;
      return std::max(value, 0.0);  // clamp rounding noise at t = T
    }
    case ProfileKind::Sampled: {
      if (t >= switch_off_) return 0.0;
      const auto it = std::upper_bound(
          samples_.begin(), samples_.end(), t,
          [](double value, const std::array<double, 2>& s) { return value < s[0]; });
      const auto& hi = *it;
      const auto& lo = *(it - 1);
      const double frac = (t - lo[0]) / (hi[0] - lo[0]);
      return lo[1] + frac * (hi[1] - lo[1]);
    }
  }
  return 0.0;
}

double PotentialProfile::integrated_lambda(double t) const {
  if (!(t >= 0.0))
    throw std::invalid_argument("integrated_lambda requires t >= 0");
  switch (kind_) {
    case ProfileKind::Static:
      return lambda0_ * t;
    case ProfileKind::Step:
      return 0.5 * lambda0_ * std::min(t, switch_off_);
    case ProfileKind::Rational: {
      const double tc = std::min(t, switch_off_);
      return std::log1p(f2_ * tc) - f3_ * tc;
    }
    case ProfileKind::Sampled: {
      const double tc = std::min(t, switch_off_);
      double acc = 0.0;
      for (std::size_t i = 1; i < samples_.size(); ++i) {
        const auto& lo = samples_[i - 1];
        const auto& hi = samples_[i];
        if (tc <= lo[0]) break;
        if (tc >= hi[0]) {
          acc += 0.5 * (lo[1] + hi[1]) * (hi[0] - lo[0]);
        } else {
          const double lam_tc = lambda(tc);
          acc += 0.5 * (lo[1] + lam_tc) * (tc - lo[0]);
          break;
        }
      }
      return acc;
    }
  }
  return 0.0;
}

double PotentialProfile::switch_off_time() const {
  if (kind_ == ProfileKind::Static)
    throw std::domain_error("static profile has no switch-off");
  return switch_off_;
}

double PotentialProfile::f2() const {
  if (kind_ != ProfileKind::Rational)
    throw std::domain_error("f2 is defined for rational profiles only");
  return f2_;
}

double PotentialProfile::f3() const {
  if (kind_ != ProfileKind::Rational)
    throw std::domain_error("f3 is defined for rational profiles only");
  return f3_;
}

std::vector<double> PotentialProfile::breakpoints() const {
  switch (kind_) {
    case ProfileKind::Static:
      return {};
    case ProfileKind::Step:
    case ProfileKind::Rational:
      return {0.0, switch_off_};
    case ProfileKind::Sampled: {
      std::vector<double> points;
      points.reserve(samples_.size());
      for (const auto& s : samples_) points.push_back(s[0]);
      return points;
    }
  }
  return {};
}

PotentialProfile PotentialProfile::from_json(std::string_view text) {
  json j = json::parse(text);
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "static") {
    return static_coupling(j.at("lambda0").get<double>());
  }
  if (kind == "step") {
    std::optional<double> T;
    if (j.contains("T")) T = j.at("T").get<double>();
    return step(j.at("lambda0").get<double>(), T);
  }
  if (kind == "rational") {
    return rational(j.at("lambda0").get<double>(), j.at("f2").get<double>());
  }
  if (kind == "sampled") {
    std::vector<std::array<double, 2>> samples;
    for (const auto& pair : j.at("samples")) {
      if (!pair.is_array() || pair.size() != 2)
        throw std::invalid_argument("samples must be [t, lambda] pairs");
      samples.push_back({pair[0].get<double>(), pair[1].get<double>()});
    }
    return sampled(std::move(samples));
  }
  throw std::invalid_argument("unknown profile kind: " + kind);
}

std::string PotentialProfile::to_json() const {
  json j;
  j["kind"] = to_string(kind_);
  j["lambda0"] = lambda0_;
  switch (kind_) {
    case ProfileKind::Static:
      break;
    case ProfileKind::Step:
      j["T"] = switch_off_;
      break;
    case ProfileKind::Rational:
      j["f2"] = f2_;
      j["T"] = switch_off_;
      break;
    case ProfileKind::Sampled: {
      json samples = json::array();
      for (const auto& s : samples_) samples.push_back({s[0], s[1]});
      j["samples"] = std::move(samples);
      j["T"] = switch_off_;
      break;
    }
  }
  return j.dump();
}

}  // namespace vacpulse
