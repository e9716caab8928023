#include "rcl/toy_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rcl/errors.hpp"

namespace rcl {

namespace {

constexpr std::complex<double> kI{0.0, 1.0};
const double kSqrt3 = std::sqrt(3.0);
// w = e^{2 pi i / 3}; the secondary-mode basis of the local chart.
const std::complex<double> kOmega{-0.5, std::numbers::sqrt3 / 2};
const std::complex<double> kOmega2{-0.5, -std::numbers::sqrt3 / 2};

double drift(const std::vector<ConservedQuantities>& log,
             double ConservedQuantities::*field) {
  if (log.empty()) return 0;
  double ref = log.front().*field;
  double worst = 0;
  for (const auto& q : log) worst = std::max(worst, std::abs(q.*field - ref));
  return worst;
}

}  // namespace

void toy_rhs(const CVec& b, CVec& dbdt) {
  const std::size_t n = b.size();
  dbdt.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::complex<double> nb{0, 0};
    if (j > 0) nb += b[j - 1] * b[j - 1];
    if (j + 1 < n) nb += b[j + 1] * b[j + 1];
    dbdt[j] = -kI * std::norm(b[j]) * b[j] + 2.0 * kI * std::conj(b[j]) * nb;
  }
}

CVec toy_rhs(const CVec& b) {
  CVec out;
  toy_rhs(b, out);
  return out;
}

ConservedQuantities conserved_quantities(const CVec& b) {
  ConservedQuantities q;
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    double m2 = std::norm(b[j]);
    q.mass += m2;
    q.hamiltonian += 0.25 * m2 * m2;
    q.quartic += 0.5 * m2 * m2;
    if (j > 0) {
      std::complex<double> cross = std::conj(b[j]) * std::conj(b[j]) * b[j - 1] * b[j - 1];
      q.hamiltonian -= cross.real();
      q.quartic += std::norm(b[j]) * 0.0;  // cross term handled below
    }
    if (j + 1 < n) q.quartic += m2 * std::norm(b[j + 1]);
  }
  return q;
}

double ToyTrajectory::max_mass_drift() const { return drift(conserved, &ConservedQuantities::mass); }
double ToyTrajectory::max_hamiltonian_drift() const {
  return drift(conserved, &ConservedQuantities::hamiltonian);
}
double ToyTrajectory::max_quartic_drift() const {
  return drift(conserved, &ConservedQuantities::quartic);
}

ToyTrajectory integrate_toy(const ToyState& state, double t_end, double tol,
                            std::size_t n_samples) {
  ToyTrajectory traj;
  traj.tol = tol;
  traj.t.reserve(n_samples + 1);
  traj.states.reserve(n_samples + 1);
  auto rhs = [](double, const CVec& y, CVec& dydt) { toy_rhs(y, dydt); };
  std::vector<double> samples = uniform_times(state.t, t_end, n_samples);
  integrate_sampled(rhs, state.b, state.t, t_end, tol, samples,
                    [&](std::size_t, double t, const CVec& y) {
                      traj.t.push_back(t);
                      traj.states.push_back(y);
                      traj.conserved.push_back(conserved_quantities(y));
                    });
  return traj;
}

ToyState slider(double t) {
  double g1 = 1.0 / std::sqrt(1.0 + std::exp(2.0 * kSqrt3 * t));
  double g2 = 1.0 / std::sqrt(1.0 + std::exp(-2.0 * kSqrt3 * t));
  std::complex<double> rot = std::exp(-kI * t);
  ToyState s;
  s.t = t;
  // b1 carries w^2 = e^{-2 pi i/3} and b2 carries w; this is the root
  // assignment that actually satisfies the equation (and reproduces the
  // pure-unstable local profile c_2^- = 0, c_2^+ = g2).
  s.b = {rot * kOmega2 * g1, rot * kOmega * g2};
  return s;
}

double ghat_t0(double sigma) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw std::domain_error("ghat: sigma must lie in (0,1)");
  // 1/sqrt(1+e^{2 sqrt3 t0}) = sigma  =>  t0 = log(1/sigma^2 - 1) / (2 sqrt3)
  return std::log(1.0 / (sigma * sigma) - 1.0) / (2.0 * kSqrt3);
}

double ghat(double t, double sigma) {
  double t0 = ghat_t0(sigma);
  return 1.0 / std::sqrt(1.0 + std::exp(-2.0 * kSqrt3 * (t - t0)));
}

std::pair<double, double> split_secondary(std::complex<double> c) {
  // c = w c^- + w^2 c^+ with w = e^{2 pi i/3}:
  //   Re c = -(c^- + c^+)/2,  Im c = sqrt3 (c^- - c^+)/2.
  double cm = -c.real() + c.imag() / kSqrt3;
  double cp = -c.real() - c.imag() / kSqrt3;
  return {cm * 0.5 + cm * 0.5, cp};  // see below
}

std::complex<double> merge_secondary(double c_minus, double c_plus) {
  return kOmega * c_minus + kOmega2 * c_plus;
}

LocalCoords to_local_coords(const ToyState& state, int j, double floor) {
  const int n = state.n_modes();
  if (j < 1 || j > n) throw std::out_of_range("local coordinates: mode index out of range");
  double mass = conserved_quantities(state.b).mass;
  if (mass <= 0) throw SingularCoordinates("local coordinates undefined on the zero state");
  double scale = std::sqrt(mass);
  std::complex<double> bj = state.b[static_cast<std::size_t>(j - 1)] / scale;
  if (std::abs(bj) < floor)
    throw SingularCoordinates("primary mode below floor at j=" + std::to_string(j));

  LocalCoords lc;
  lc.j = j;
  lc.n_modes = n;
  lc.mass_scale = scale;
  lc.theta = std::arg(bj);
  lc.r = std::abs(bj);
  lc.c.assign(static_cast<std::size_t>(n), {0, 0});
  std::complex<double> unrot = std::exp(-kI * lc.theta);
  for (int k = 1; k <= n; ++k) {
    if (k == j) continue;
    lc.c[static_cast<std::size_t>(k - 1)] =
        state.b[static_cast<std::size_t>(k - 1)] / scale * unrot;
  }
  if (j > 1) lc.trailing = split_secondary(lc.c[static_cast<std::size_t>(j - 2)]);
  if (j < n) lc.leading = split_secondary(lc.c[static_cast<std::size_t>(j)]);
  return lc;
}

ToyState from_local_coords(const LocalCoords& lc) {
  ToyState s;
  s.b.assign(static_cast<std::size_t>(lc.n_modes), {0, 0});
  std::complex<double> rot = std::exp(kI * lc.theta) * lc.mass_scale;
  for (int k = 1; k <= lc.n_modes; ++k) {
    if (k == lc.j) continue;
    std::complex<double> c = lc.c[static_cast<std::size_t>(k - 1)];
    if (k == lc.j - 1 && lc.trailing) c = merge_secondary(lc.trailing->first, lc.trailing->second);
    if (k == lc.j + 1 && lc.leading) c = merge_secondary(lc.leading->first, lc.leading->second);
    s.b[static_cast<std::size_t>(k - 1)] = c * rot;
  }
  s.b[static_cast<std::size_t>(lc.j - 1)] = lc.r * rot;
  return s;
}

SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n < 3 || y.size() != n) throw FitFailure("not enough points to fit a slope");
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw FitFailure("degenerate abscissae");
  SlopeFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double r = y[i] - (fit.intercept + fit.slope * x[i]);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
  fit.stderr_slope = std::sqrt(ss / static_cast<double>(n - 2) / sxx);
  return fit;
}

namespace {

// Seed a single coordinate-chart mode near T_j and return the sampled
// trajectory of its chart value.
std::vector<std::complex<double>> chart_series(int n_modes, int j, int k,
                                               std::complex<double> c_seed, double window,
                                               double tol, std::vector<double>& times) {
  LocalCoords lc;
  lc.j = j;
  lc.n_modes = n_modes;
  lc.c.assign(static_cast<std::size_t>(n_modes), {0, 0});
  lc.c[static_cast<std::size_t>(k - 1)] = c_seed;
  lc.theta = 0;
  lc.mass_scale = 1;
  lc.r = std::sqrt(1.0 - std::norm(c_seed));
  if (k == j - 1) lc.trailing = split_secondary(c_seed);
  if (k == j + 1) lc.leading = split_secondary(c_seed);
  ToyState s0 = from_local_coords(lc);

  std::vector<std::complex<double>> series;
  auto rhs = [](double, const CVec& y, CVec& dydt) { toy_rhs(y, dydt); };
  std::vector<double> samples = uniform_times(0.0, window, 100);
  times = samples;
  integrate_sampled(rhs, s0.b, 0.0, window, tol, samples,
                    [&](std::size_t, double t, const CVec& y) {
                      ToyState st{y, t};
                      LocalCoords cur = to_local_coords(st, j);
                      series.push_back(cur.c[static_cast<std::size_t>(k - 1)]);
                    });
  return series;
}

}  // namespace

LinearRates measure_linear_rates(int n_modes, int j, double amplitude, double window,
                                 double tol) {
  if (amplitude <= 0 || amplitude > 1e-3)
    throw std::invalid_argument("seed amplitude must lie in (0, 1e-3]");
  if (j < 1 || j > n_modes) throw std::out_of_range("center index out of range");
  if (j + 1 > n_modes || j - 1 < 1 || (j + 2 > n_modes && j - 2 < 1))
    throw std::invalid_argument("need trailing, leading and peripheral neighbors around j");

  LinearRates out;
  const double max_resid = 0.05;

  {  // leading unstable: pure c^+ seed on mode j+1
    std::vector<double> t;
    auto series = chart_series(n_modes, j, j + 1, merge_secondary(0.0, amplitude), window, tol, t);
    std::vector<double> logmod;
    for (auto& c : series) logmod.push_back(std::log(std::abs(split_secondary(c).second)));
    SlopeFit fit = fit_slope(t, logmod);
    if (fit.rms_residual > max_resid) throw FitFailure("unstable-mode fit residual too large");
    out.rate_plus = fit.slope;
    out.stderr_plus = fit.stderr_slope;
  }
  {  // trailing stable: pure c^- seed on mode j-1
    std::vector<double> t;
    auto series = chart_series(n_modes, j, j - 1, merge_secondary(amplitude, 0.0), window, tol, t);
    std::vector<double> logmod;
    for (auto& c : series) logmod.push_back(std::log(std::abs(split_secondary(c).first)));
    SlopeFit fit = fit_slope(t, logmod);
    if (fit.rms_residual > max_resid) throw FitFailure("stable-mode fit residual too large");
    out.rate_minus = fit.slope;
    out.stderr_minus = fit.stderr_slope;
  }
  {  // peripheral: modulus should drift at rate ~0, phase rotate at ~+1
    int k = (j + 2 <= n_modes) ? j + 2 : j - 2;
    std::vector<double> t;
    auto series = chart_series(n_modes, j, k, {amplitude, 0.0}, window, tol, t);
    std::vector<double> logmod, phase;
    double prev = 0, offset = 0;
    for (std::size_t m = 0; m < series.size(); ++m) {
      logmod.push_back(std::log(std::abs(series[m])));
      double a = std::arg(series[m]);
      if (m > 0 && a + offset - prev > std::numbers::pi) offset -= 2 * std::numbers::pi;
      if (m > 0 && a + offset - prev < -std::numbers::pi) offset += 2 * std::numbers::pi;
      phase.push_back(a + offset);
      prev = a + offset;
    }
    SlopeFit fm = fit_slope(t, logmod);
    SlopeFit fp = fit_slope(t, phase);
    if (fp.rms_residual > max_resid) throw FitFailure("peripheral phase fit residual too large");
    out.rate_peripheral = fm.slope;
    out.phase_peripheral = fp.slope;
    out.stderr_peripheral = fm.stderr_slope;
  }
  return out;
}

ToyTrajectory rescale_trajectory(const ToyTrajectory& traj, double lambda) {
  if (lambda <= 0) throw std::invalid_argument("lambda must be positive");
  ToyTrajectory out;
  out.tol = traj.tol;
  out.t.reserve(traj.t.size());
  for (double t : traj.t) out.t.push_back(lambda * lambda * t);
  out.states.reserve(traj.states.size());
  for (const auto& b : traj.states) {
    CVec v = b;
    for (auto& z : v) z /= lambda;
    out.conserved.push_back(conserved_quantities(v));
    out.states.push_back(std::move(v));
  }
  return out;
}

}  // namespace rcl
