#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "rcl/ode.hpp"

namespace rcl {

// State of the N-mode cascade system
//   d/dt b_j = -i |b_j|^2 b_j + 2i conj(b_j) (b_{j-1}^2 + b_{j+1}^2),
// with the convention b_0 = b_{N+1} = 0.
struct ToyState {
  CVec b;
  double t = 0;
  int n_modes() const { return static_cast<int>(b.size()); }
};

void toy_rhs(const CVec& b, CVec& dbdt);
CVec toy_rhs(const CVec& b);

struct ConservedQuantities {
  double mass = 0;         // sum |b_j|^2
  double hamiltonian = 0;  // sum 1/4 |b_j|^4 - Re(conj(b_j)^2 b_{j-1}^2)
  double quartic = 0;      // 1/2 sum |b_j|^4 + sum |b_j|^2 |b_{j+1}|^2
};
ConservedQuantities conserved_quantities(const CVec& b);

struct ToyTrajectory {
  double tol = 0;
  std::vector<double> t;
  std::vector<CVec> states;
  std::vector<ConservedQuantities> conserved;
  int n_modes() const { return states.empty() ? 0 : static_cast<int>(states.front().size()); }

  double max_mass_drift() const;
  double max_hamiltonian_drift() const;
  double max_quartic_drift() const;
};

// Adaptive integration with conservation logging at every sample. Supports
// t_end on either side of state.t. Throws StepFailure on controller failure.
ToyTrajectory integrate_toy(const ToyState& state, double t_end, double tol,
                            std::size_t n_samples = 512);

// The explicit two-mode heteroclinic connecting the invariant circles T_1
// and T_2 at rate sqrt(3). The cube root entering the closed form is
// w = e^{-2 pi i / 3}; the conjugate root does not solve the equation.
ToyState slider(double t);

// Scalar unstable-mode profile: solution of g' = sqrt(3)(1 - g^2) g with
// g(0) = sigma; flows from sigma to sqrt(1 - sigma^2) by time 2 t0.
double ghat(double t, double sigma);
double ghat_t0(double sigma);  // the crossing time: ghat(t0) = 1/sqrt(2)

// Local coordinates near the invariant circle T_j (1-based j):
//   b_j = r e^{i theta},  b_k = c_k e^{i theta},
// on the unit-mass sphere; the secondary modes are split over the basis
// (w, w^2), w = e^{2 pi i / 3}, as c = w c^- + w^2 c^+ with real c^-/c^+.
struct LocalCoords {
  int j = 0;  // 1-based center index
  int n_modes = 0;
  double r = 0;
  double theta = 0;
  double mass_scale = 1;  // sqrt(mass) factored out before the chart
  CVec c;                 // size N, entry j-1 is zero by convention
  // Secondary splittings; present when the neighbor exists.
  std::optional<std::pair<double, double>> trailing;  // (c_{j-1}^-, c_{j-1}^+)
  std::optional<std::pair<double, double>> leading;   // (c_{j+1}^-, c_{j+1}^+)
};

// Real-linear bijection between c and (c^-, c^+).
std::pair<double, double> split_secondary(std::complex<double> c);
std::complex<double> merge_secondary(double c_minus, double c_plus);

LocalCoords to_local_coords(const ToyState& state, int j, double floor = 1e-12);
ToyState from_local_coords(const LocalCoords& lc);

struct LinearRates {
  double rate_minus = 0;       // fitted decay of a seeded trailing stable mode
  double rate_plus = 0;        // fitted growth of a seeded leading unstable mode
  double rate_peripheral = 0;  // fitted modulus drift of a seeded peripheral mode
  double phase_peripheral = 0; // fitted phase rotation of the peripheral mode
  double stderr_minus = 0, stderr_plus = 0, stderr_peripheral = 0;
};

// Seeds one mode of each class at the given amplitude near T_j, integrates
// over the window, and fits exponential rates by least squares on the log
// modulus (phase slope for the peripheral mode). Throws FitFailure if the
// residuals are too large for a rate to mean anything.
LinearRates measure_linear_rates(int n_modes, int j, double amplitude, double window = 2.0,
                                 double tol = 1e-12);

// b(t) -> lambda^{-1} b(t / lambda^2): amplitudes and the time grid rescale.
ToyTrajectory rescale_trajectory(const ToyTrajectory& traj, double lambda);

// Least-squares slope (and its standard error) of y against x.
struct SlopeFit {
  double slope = 0;
  double intercept = 0;
  double stderr_slope = 0;
  double rms_residual = 0;
};
SlopeFit fit_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace rcl
