#include "vacpulse/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace vacpulse {

namespace {

// Gauss-Kronrod 7-15 pair. Abscissae and weights on [-1, 1]; even entries of
// xk are the Kronrod-only nodes, odd entries carry the embedded 7-point Gauss
// rule with weights wg.
constexpr double kXk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr double kWk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;

  bool operator<(const Segment& other) const {
    // priority_queue pops the largest-error segment; break ties by position
    // so the subdivision order is deterministic.
    if (error != other.error) return error < other.error;
    return a > other.a;
  }
};

// One 15-point Kronrod evaluation with the QUADPACK error heuristic.
Segment gk15(const Integrand& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double center = 0.5 * (a + b);

  double fv[15];
  for (int i = 0; i < 7; ++i) {
    fv[i] = f(center - half * kXk[i]);
    fv[14 - i] = f(center + half * kXk[i]);
  }
  fv[7] = f(center);

  double resk = kWk[7] * fv[7];
  double resg = kWg[3] * fv[7];
  double resabs = kWk[7] * std::fabs(fv[7]);
  for (int i = 0; i < 7; ++i) {
    const double sum = fv[i] + fv[14 - i];
    resk += kWk[i] * sum;
    resabs += kWk[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
    if (i % 2 == 1) resg += kWg[i / 2] * sum;
  }

  const double mean = 0.5 * resk;
  double resasc = kWk[7] * std::fabs(fv[7] - mean);
  for (int i = 0; i < 7; ++i) {
    resasc += kWk[i] * (std::fabs(fv[i] - mean) + std::fabs(fv[14 - i] - mean));
  }

  const double scale = std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  const double asc = resasc * scale;
  if (asc != 0.0 && err != 0.0) {
    err = asc * std::min(1.0, std::pow(200.0 * err / asc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double uflow = std::numeric_limits<double>::min();
  if (resabs * scale > uflow / (50.0 * eps)) {
    err = std::max(eps * 50.0 * resabs * scale, err);
  }

  Segment seg;
  seg.a = a;
  seg.b = b;
  seg.value = resk * half;
  seg.error = err;
  if (!std::isfinite(seg.value)) {
    throw QuadratureError("non-finite integrand value on [" + std::to_string(a) +
                              ", " + std::to_string(b) + "]",
                          seg.value, std::numeric_limits<double>::infinity());
  }
  return seg;
}

// Order-independent final reduction: sum segments left to right with
// compensated accumulation.
std::pair<double, double> reduce(std::vector<Segment> segments) {
  std::sort(segments.begin(), segments.end(),
            [](const Segment& x, const Segment& y) { return x.a < y.a; });
  double sum = 0.0, comp = 0.0, err = 0.0;
  for (const Segment& s : segments) {
    const double y = s.value - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    err += s.error;
  }
  return {sum, err};
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("quadrature tolerances must be positive");
  if (max_subdivisions < 1)
    throw std::invalid_argument("max_subdivisions must be at least 1");
  if (!(cutoff > 0.0)) throw std::invalid_argument("cutoff must be positive");
}

Integral integrate_1d(const Integrand& f, double a, double b,
                      const QuadratureSpec& spec) {
  spec.validate();
  if (!(a <= b)) throw std::invalid_argument("integrate_1d requires a <= b");
  if (a == b) return {0.0, 0.0, 0};

  std::priority_queue<Segment> queue;
  queue.push(gk15(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;
  int subdivisions = 0;

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total_value));
  };

  bool settled = total_error <= tolerance();
  while (!settled && subdivisions < spec.max_subdivisions) {
    Segment worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // interval at rounding limit
    queue.pop();

    const Segment left = gk15(f, worst.a, mid);
    const Segment right = gk15(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
    settled = total_error <= tolerance();
  }

  std::vector<Segment> segments;
  segments.reserve(queue.size());
  while (!queue.empty()) {
    segments.push_back(queue.top());
    queue.pop();
  }
  auto [value, error] = reduce(std::move(segments));

  if (!settled && error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
    throw QuadratureError(
        "integrate_1d: tolerance not reached after " +
            std::to_string(subdivisions) + " subdivisions (error " +
            std::to_string(error) + ")",
        value, error);
  }
  return {value, error, subdivisions};
}

SemiInfiniteIntegral integrate_semi_infinite(const Integrand& f, double a,
                                             const QuadratureSpec& spec) {
  spec.validate();
  if (!(a < spec.cutoff))
    throw std::invalid_argument("lower limit must be below the cutoff");

  const Integral main = integrate_1d(f, a, spec.cutoff, spec);
  const Integral band = integrate_1d(f, spec.cutoff, 2.0 * spec.cutoff, spec);

  SemiInfiniteIntegral result;
  result.value = main.value;
  result.error_estimate = main.error_estimate;
  result.tail_estimate = std::fabs(band.value);
  result.subdivisions = main.subdivisions + band.subdivisions;
  return result;
}

Integral2D integrate_2d(const Integrand2D& f, double u_lo, double u_hi,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (!(u_lo <= u_hi)) throw std::invalid_argument("integrate_2d requires u_lo <= u_hi");
  if (u_lo == u_hi) return {};

  // Inner integrals run at a tolerance below the outer one so their error
  // does not dominate the outer estimate.
  QuadratureSpec inner = spec;
  inner.rel_tol = std::max(0.1 * spec.rel_tol, 1e-14);
  inner.abs_tol = std::max(0.1 * spec.abs_tol, 1e-15);

  auto inner_main = [&](double u) {
    return integrate_1d([&](double w) { return f(u, w); }, 0.0, spec.cutoff, inner)
        .value;
  };
  auto inner_band = [&](double u) {
    return integrate_1d([&](double w) { return f(u, w); }, spec.cutoff,
                        2.0 * spec.cutoff, inner)
        .value;
  };

  // Outer segments carry the band integral along on the same Kronrod nodes;
  // adaptivity is driven by the main value only.
  struct OuterSegment {
    Segment main;
    double band = 0.0;

    bool operator<(const OuterSegment& other) const { return main < other.main; }
  };

  auto eval = [&](double a, double b) {
    OuterSegment seg;
    seg.main = gk15(inner_main, a, b);
    const double half = 0.5 * (b - a);
    const double center = 0.5 * (a + b);
    double resk = kWk[7] * inner_band(center);
    for (int i = 0; i < 7; ++i) {
      resk += kWk[i] * (inner_band(center - half * kXk[i]) +
                        inner_band(center + half * kXk[i]));
    }
    seg.band = resk * half;
    return seg;
  };

  std::priority_queue<OuterSegment> queue;
  queue.push(eval(u_lo, u_hi));
  double total_value = queue.top().main.value;
  double total_error = queue.top().main.error;
  int subdivisions = 0;

  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total_value));
  };
  bool settled = total_error <= tolerance();
  while (!settled && subdivisions < spec.max_subdivisions) {
    OuterSegment worst = queue.top();
    const double mid = 0.5 * (worst.main.a + worst.main.b);
    if (mid <= worst.main.a || mid >= worst.main.b) break;
    queue.pop();

    const OuterSegment left = eval(worst.main.a, mid);
    const OuterSegment right = eval(mid, worst.main.b);
    total_value += left.main.value + right.main.value - worst.main.value;
    total_error += left.main.error + right.main.error - worst.main.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
    settled = total_error <= tolerance();
  }

  std::vector<Segment> mains;
  double band_sum = 0.0, band_comp = 0.0;
  std::vector<OuterSegment> outer;
  outer.reserve(queue.size());
  while (!queue.empty()) {
    outer.push_back(queue.top());
    queue.pop();
  }
  std::sort(outer.begin(), outer.end(), [](const OuterSegment& x, const OuterSegment& y) {
    return x.main.a < y.main.a;
  });
  for (const OuterSegment& s : outer) {
    mains.push_back(s.main);
    const double y = s.band - band_comp;
    const double t = band_sum + y;
    band_comp = (t - band_sum) - y;
    band_sum = t;
  }
  auto [value, error] = reduce(std::move(mains));

  if (!settled && error > std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
    throw QuadratureError(
        "integrate_2d: tolerance not reached after " +
            std::to_string(subdivisions) + " outer subdivisions (error " +
            std::to_string(error) + ")",
        value, error);
  }

  Integral2D result;
  result.value = value;
  result.error_estimate = error;
  result.tail_estimate = band_sum;
  result.outer_subdivisions = subdivisions;
  return result;
}

}  // namespace vacpulse
