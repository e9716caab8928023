#include "rcl/ode.hpp"

#include <algorithm>
#include <cmath>

namespace rcl {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                 b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - b* (difference against the embedded 4th-order weights).
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

std::vector<double> uniform_times(double t0, double t1, std::size_t n) {
  std::vector<double> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k)
    out[k] = t0 + (t1 - t0) * static_cast<double>(k) / static_cast<double>(n);
  out.back() = t1;
  return out;
}

OdeStats integrate_sampled(const OdeRhs& rhs, CVec y, double t0, double t1, double tol,
                           std::span<const double> sample_times,
                           const std::function<void(std::size_t, double, const CVec&)>& on_sample) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  OdeStats stats;
  const std::size_t n = y.size();
  const double dir = (t1 >= t0) ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);

  std::size_t next_sample = 0;
  double t = t0;
  // Steps land exactly on sample times (see clipping below), so the state
  // passed here is the state at the nominal sample time.
  auto emit_samples_at = [&](double tc, const CVec& yc) {
    while (next_sample < sample_times.size() &&
           (sample_times[next_sample] - tc) * dir <= 1e-14 * std::max(1.0, std::abs(tc))) {
      on_sample(next_sample, sample_times[next_sample], yc);
      ++next_sample;
    }
  };
  emit_samples_at(t, y);
  if (span == 0) return stats;

  CVec k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);
  rhs(t, y, k1);
  ++stats.rhs_evals;

  double h = dir * std::min(span, std::max(1e-6, 0.01 * span));
  const double hmin_scale = 1e-14;

  while ((t1 - t) * dir > 1e-14 * std::max(1.0, std::abs(t))) {
    // Clip to the next boundary we must hit exactly: sample time or t1.
    double bound = t1;
    if (next_sample < sample_times.size() &&
        (sample_times[next_sample] - t1) * dir < 0)
      bound = sample_times[next_sample];
    if ((t + h - bound) * dir > 0) h = bound - t;

    const double habs = std::abs(h);
    if (habs < hmin_scale * std::max(1.0, std::abs(t)))
      throw StepFailure("step size underflow at t=" + std::to_string(t), t);

    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
    rhs(t + c2 * h, ytmp, k2);
    for (std::size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    rhs(t + c3 * h, ytmp, k3);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    rhs(t + c4 * h, ytmp, k4);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    rhs(t + c5 * h, ytmp, k5);
    for (std::size_t i = 0; i < n; ++i)
      ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    rhs(t + h, ytmp, k6);
    for (std::size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    rhs(t + h, ynew, k7);
    stats.rhs_evals += 6;

    // RMS of the embedded error against scale 1 + |y| (error per step),
    // accepted when below tol * |h| (error per unit time).
    double err2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> d =
          h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      double sc = 1.0 + std::max(std::abs(y[i]), std::abs(ynew[i]));
      err2 += std::norm(d) / (sc * sc);
    }
    double err = std::sqrt(err2 / static_cast<double>(n));
    double target = tol * habs;

    if (err <= target || habs <= hmin_scale * std::max(1.0, std::abs(t)) * 2.0) {
      t += h;
      std::swap(y, ynew);
      std::swap(k1, k7);  // FSAL
      ++stats.steps;
      emit_samples_at(t, y);
    } else {
      ++stats.rejected;
    }

    double factor = (err > 0) ? 0.9 * std::pow(target / err, 0.25) : 5.0;
    factor = std::clamp(factor, 0.2, 5.0);
    h = dir * std::min(std::abs(h) * factor, span);
  }
  // Flush any samples that coincide with t1 within roundoff.
  emit_samples_at(t + dir * 1e-13 * std::max(1.0, std::abs(t)), y);
  return stats;
}

CVec integrate_to(const OdeRhs& rhs, CVec y0, double t0, double t1, double tol, OdeStats* stats) {
  CVec out = y0;
  std::vector<double> ends{t1};
  OdeStats st = integrate_sampled(
      rhs, std::move(y0), t0, t1, tol, ends,
      [&](std::size_t, double, const CVec& y) { out = y; });
  if (stats) *stats = st;
  return out;
}

}  // namespace rcl
