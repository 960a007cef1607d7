// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "vacpulse/mode_dynamics.hpp"
#include "vacpulse/potential.hpp"
#include "vacpulse/quadrature.hpp"
#include "vacpulse/spectral_energy.hpp"

using namespace vacpulse;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%2d] %-46s %s  (%s)\n", id, name.c_str(), pass ? "PASS" : "FAIL",
              detail.c_str());
  if (!pass) ++g_failures;
}

void info(const std::string& line) { std::printf("     %s\n", line.c_str()); }

std::string fmt(const char* format, ...) {
  char buffer[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buffer, sizeof(buffer), format, args);
  va_end(args);
  return buffer;
}

// Half a unit in the last printed (3rd significant) figure: the tolerance for
// matching a value printed to 3 significant figures.
double printed_rounding_tolerance(double printed) {
  const double exponent = std::floor(std::log10(std::fabs(printed)));
  return 5.0 * std::pow(10.0, exponent - 3.0);
}

struct TableRow {
  double f2;
  double lambda0;
  double expected;  // printed to 3 significant figures
};

const std::vector<TableRow> kTable = {
    {1.0, 0.5, -0.0134}, {2.0, 0.5, -0.00413}, {2.0, 1.0, -0.0268},
    {4.0, 2.0, -0.0536}, {4.0, 3.0, -0.155},
};

struct RowResult {
  EnergyReport report;
  double seconds = 0.0;
};

std::vector<RowResult> run_table(double cutoff) {
  std::vector<RowResult> results;
  for (const TableRow& row : kTable) {
    QuadratureSpec spec;
    spec.cutoff = cutoff;
    const auto start = std::chrono::steady_clock::now();
    RowResult result;
    result.report =
        radiated_energy(PotentialProfile::rational(row.lambda0, row.f2), spec);
    result.seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    results.push_back(result);
  }
  return results;
}

void criterion_1_table(const std::vector<RowResult>& rows) {
  bool pass = true;
  double worst_margin = 0.0, worst_seconds = 0.0;
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const double value = rows[i].report.radiated_half;
    const double tolerance = printed_rounding_tolerance(kTable[i].expected);
    const double diff = std::fabs(value - kTable[i].expected);
    const bool row_ok = diff <= tolerance && rows[i].seconds < 60.0;
    pass = pass && row_ok;
    worst_margin = std::max(worst_margin, diff / tolerance);
    worst_seconds = std::max(worst_seconds, rows[i].seconds);
    info(fmt("row f2=%g lambda0=%g: E = %.6e vs %g (|diff| %.2e <= %.1e) %s in %.2f s",
             kTable[i].f2, kTable[i].lambda0, value, kTable[i].expected, diff,
             tolerance, row_ok ? "ok" : "OUT OF TOLERANCE", rows[i].seconds));
  }
  report(1, "table rows at printed-rounding tolerance", pass,
         fmt("worst margin %.2f of tolerance, slowest row %.2f s < 60 s",
             worst_margin, worst_seconds));
}

void criterion_2_static_sector() {
  bool pass = true;
  for (double lambda0 : {0.0, 0.5, 1.0, 2.0, kPi}) {
    pass = pass && static_total_energy(lambda0) == lambda0 / (2.0 * kPi);
  }
  const double continuum = static_density_continuum(1.0, 1e4);
  const double target = 1.0 / (2.0 * kPi);
  const double rel = std::fabs(continuum - target) / target;
  pass = pass && rel <= 1e-3;
  report(2, "static sector: total energy and continuum density", pass,
         fmt("E_K exact; continuum %.8f vs %.8f (rel %.2e <= 1e-3)", continuum,
             target, rel));
}

void criterion_3_oracle_equivalence() {
  std::mt19937 rng(2026);
  OdeOptions tight{1e-12, 1e-12, 8'000'000};
  double worst = 0.0;
  std::string worst_case = "none";

  auto run_profile = [&](const std::string& label, const PotentialProfile& profile,
                         double horizon) {
    std::uniform_real_distribution<double> log_omega(std::log(0.01), std::log(50.0));
    std::uniform_real_distribution<double> fraction(0.0, 1.0);
    for (int i = 0; i < 50; ++i) {
      const double omega = std::exp(log_omega(rng));
      double t;
      if (i < 30) {
        t = horizon * fraction(rng);
      } else {
        t = horizon + std::min(horizon, 5.0) * fraction(rng);  // past switch-off
      }
      const Complex closed = amplitude(omega, profile, t);
      const Complex ode = amplitude_ode(omega, profile, t, tight);
      const double deviation = std::abs(closed - ode);
      if (deviation > worst) {
        worst = deviation;
        worst_case = fmt("%s omega=%.3f t=%.3f", label.c_str(), omega, t);
      }
    }
  };

  run_profile("static", PotentialProfile::static_coupling(1.0), 5.0);
  run_profile("step", PotentialProfile::step(1.0), PotentialProfile::step(1.0).switch_off_time());
  run_profile("rational", PotentialProfile::rational(1.0, 2.0),
              PotentialProfile::rational(1.0, 2.0).switch_off_time());

  report(3, "closed forms vs adaptive ODE (150 samples)", worst <= 1e-8,
         fmt("max |dev| %.2e <= 1e-8 at %s", worst, worst_case.c_str()));
}

void criterion_4_density_oracle() {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  const double T = profile.switch_off_time();
  const double A = std::sqrt(2.0);  // box length 1 bookkeeping
  const double h = 1e-6;
  std::mt19937 rng(404);
  std::uniform_real_distribution<double> omegas(0.3, 5.0), xs(0.05, 2.0),
      us(0.05 * T, 0.95 * T);

  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double omega = omegas(rng), x = xs(rng), u = us(rng);
    const double t = u + x;
    const Complex dfdt = (mode_function(omega, x, t + h, profile, A) -
                          mode_function(omega, x, t - h, profile, A)) /
                         (2.0 * h);
    const Complex dfdx = (mode_function(omega, x + h, t, profile, A) -
                          mode_function(omega, x - h, t, profile, A)) /
                         (2.0 * h);
    const double fd =
        (0.5 * (std::norm(dfdt) + std::norm(dfdx)) - 0.5 * omega) / (2.0 * kPi);
    const double direct = pulse_mode_density(omega, u, profile);
    worst = std::max(worst, std::fabs(fd - direct) / std::fabs(direct));
  }
  report(4, "finite-difference density oracle (20 points)", worst <= 1e-4,
         fmt("max rel dev %.2e <= 1e-4", worst));
}

void criterion_5_causality() {
  std::mt19937 rng(505);
  std::uniform_real_distribution<double> xs(0.0, 3.0), gaps(0.01, 2.0), sign(0.0, 1.0);
  double worst = 0.0;
  for (const TableRow& row : kTable) {
    const auto profile = PotentialProfile::rational(row.lambda0, row.f2);
    const double T = profile.switch_off_time();
    for (int i = 0; i < 20; ++i) {  // ahead of the light cone, u < 0
      double x = xs(rng) + 0.01;
      const double t = x - gaps(rng);
      if (sign(rng) < 0.5) x = -x;
      worst = std::max(worst, std::fabs(pulse_density(x, t, profile).value));
    }
    for (int i = 0; i < 20; ++i) {  // behind the pulse, u > T
      double x = xs(rng);
      const double t = x + T + gaps(rng);
      if (sign(rng) < 0.5) x = -x;
      worst = std::max(worst, std::fabs(pulse_density(x, t, profile).value));
    }
  }
  report(5, "causal shell: density vanishes outside (200 probes)", worst <= 1e-8,
         fmt("max |T00R| outside shell %.2e <= 1e-8", worst));
}

void criterion_6_energy_consistency(const std::vector<RowResult>& rows) {
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  const double T = profile.switch_off_time();
  const double reference = rows[2].report.radiated_half;  // row (2, 1)

  QuadratureSpec outer;
  outer.rel_tol = 1e-7;
  outer.abs_tol = 1e-10;
  const double spatial =
      integrate_1d([&](double x) { return pulse_density(x, T, profile).value; }, 0.0,
                   T, outer)
          .value;
  const double diff = std::fabs(spatial - reference);
  report(6, "snapshot integral equals radiated energy", diff <= 1e-4,
         fmt("|%.8e - %.8e| = %.2e <= 1e-4", spatial, reference, diff));
}

void criterion_7_step_case() {
  const double lambda0 = 1.0;
  const double T = 100.0 / lambda0;

  // Re-derive the constant by quadrature before using it. The elementary
  // integral int_0^inf w dw / ((w^2+a^2)(w^2+b^2)) = ln(b^2/a^2)/(2(b^2-a^2))
  // with a = lambda0/2 and b = lambda0 gives a total of -lambda0 ln2 / (4 pi).
  QuadratureSpec wide;
  wide.rel_tol = 1e-12;
  const double a = 0.5 * lambda0, b = lambda0;
  const double elementary_quad =
      integrate_1d(
          [&](double w) { return w / ((w * w + a * a) * (w * w + b * b)); }, 0.0,
          1e6, wide)
          .value;
  const double elementary_closed =
      std::log((b * b) / (a * a)) / (2.0 * (b * b - a * a));
  const bool constant_ok =
      std::fabs(elementary_quad - elementary_closed) <= 1e-8 * elementary_closed;
  const double derived_constant =
      -(3.0 * lambda0 * lambda0 * lambda0 / (16.0 * kPi)) * elementary_closed;
  info(fmt("re-derived total: %.9f (= -lambda0 ln2 / 4pi; elementary integral "
           "quad vs closed rel dev %.1e)",
           derived_constant,
           std::fabs(elementary_quad - elementary_closed) / elementary_closed));

  double worst_rel = 0.0;
  bool all_negative = true;
  for (int i = 0; i < 50; ++i) {
    const double omega = std::pow(10.0, -2.0 + (std::log10(50.0) + 2.0) * i / 49.0);
    const double exact = step_mode_energy_change_exact(omega, lambda0, T);
    const double approx = step_mode_energy_change(omega, lambda0);
    worst_rel = std::max(worst_rel, std::fabs(exact - approx) / std::fabs(approx));
    all_negative = all_negative && exact < 0.0 && approx < 0.0;
  }
  for (int i = 0; i < 200; ++i) {
    const double omega = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
    all_negative = all_negative && step_mode_energy_change(omega, lambda0) < 0.0;
  }

  const double total = step_energy_total(lambda0);
  const double total_rel =
      std::fabs(total - derived_constant) / std::fabs(derived_constant);

  const bool pass =
      constant_ok && worst_rel <= 1e-12 && all_negative && total_rel <= 1e-6;
  report(7, "step case: exact vs large-T form and total", pass,
         fmt("exact/approx rel %.1e <= 1e-12; spectrum negative; total %.9f "
             "(rel %.1e <= 1e-6)",
             worst_rel, total, total_rel));
}

void criterion_8_quasistatic_balance() {
  bool closed_ok = true;
  for (double lambda0 : {0.5, 1.0, 2.0}) {
    closed_ok = closed_ok &&
                std::fabs(static_total_energy(lambda0) + quasistatic_total(lambda0)) <=
                    1e-15 * lambda0;
  }

  // Independent reproduction by 2D quadrature over time and frequency using
  // the explicit slope of the rational coupling.
  const auto profile = PotentialProfile::rational(1.0, 2.0);
  const double f2 = profile.f2();
  const double T = profile.switch_off_time();
  auto slope = [&](double t) {
    const double s = 1.0 + f2 * t;
    return -f2 * f2 / (s * s);
  };
  QuadratureSpec spec;
  spec.rel_tol = 1e-9;
  spec.abs_tol = 1e-13;
  spec.cutoff = 1e4;
  const auto quad2d = integrate_2d(
      [&](double t, double w) {
        const double lam = profile.lambda(t);
        const double denom = w * w + lam * lam;
        return 2.0 * w * lam * lam / (denom * denom) * slope(t) / (2.0 * kPi);
      },
      0.0, T, spec);
  const double diff = std::fabs(quad2d.value - quasistatic_total(1.0));

  const bool pass = closed_ok && diff <= 1e-6;
  report(8, "quasi-static balance with 2D quadrature check", pass,
         fmt("closed balance exact; 2D quadrature %.8f vs %.8f (|diff| %.1e <= 1e-6)",
             quad2d.value, quasistatic_total(1.0), diff));
}

void criterion_9_tail(const std::vector<RowResult>& rows_100) {
  const auto rows_200 = run_table(200.0);
  bool pass = true;
  double worst = 0.0;
  for (std::size_t i = 0; i < kTable.size(); ++i) {
    const double change = std::fabs(rows_200[i].report.radiated_half -
                                    rows_100[i].report.radiated_half);
    worst = std::max(worst, change);
    const bool row_ok = change < 1e-5;
    pass = pass && row_ok;
    info(fmt("row f2=%g lambda0=%g: |E(200) - E(100)| = %.2e %s", kTable[i].f2,
             kTable[i].lambda0, change, row_ok ? "< 1e-5" : ">= 1e-5"));
  }
  report(9, "tail robustness: cutoff 100 -> 200 shift < 1e-5", pass,
         fmt("largest shift %.2e", worst));
}

void criterion_10_box_spectrum() {
  const double lambda0 = 1.0, L = 100.0;
  const auto spectrum = quantized_frequencies(lambda0, L, 50);

  double worst_residual = 0.0, worst_norm = 0.0;
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  for (const auto& mode : spectrum.modes) {
    const double residual = std::fabs(mode.omega * std::cos(mode.omega * L / 2.0) +
                                      lambda0 * std::sin(mode.omega * L / 2.0));
    worst_residual = std::max(worst_residual, residual);

    const Complex b0 = amplitude_static(mode.omega, lambda0) - 1.0;
    const double norm =
        2.0 * mode.a_squared *
        integrate_1d(
            [&](double x) {
              return std::norm(std::cos(mode.omega * x) +
                               b0 * std::exp(kI * mode.omega * x));
            },
            0.0, L / 2.0, spec)
            .value;
    worst_norm = std::max(worst_norm, std::fabs(norm - 1.0));
  }

  const bool pass = worst_residual <= 1e-10 && worst_norm <= 1e-6;
  report(10, "box spectrum: residuals and Klein-Gordon norm", pass,
         fmt("max residual %.2e <= 1e-10; max |norm - 1| %.2e <= 1e-6",
             worst_residual, worst_norm));
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  const auto rows = run_table(100.0);

  criterion_1_table(rows);
  criterion_2_static_sector();
  criterion_3_oracle_equivalence();
  criterion_4_density_oracle();
  criterion_5_causality();
  criterion_6_energy_consistency(rows);
  criterion_7_step_case();
  criterion_8_quasistatic_balance();
  criterion_9_tail(rows);
  criterion_10_box_spectrum();

  std::printf("%d of 10 criteria passed\n", 10 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
