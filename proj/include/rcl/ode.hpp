#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "rcl/errors.hpp"

namespace rcl {

using CVec = std::vector<std::complex<double>>;
using OdeRhs = std::function<void(double t, const CVec& y, CVec& dydt)>;

struct OdeStats {
  std::size_t steps = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evals = 0;
};

// Dormand-Prince 5(4) with FSAL and error-per-unit-step control: a step of
// size h is accepted when the embedded error estimate is below tol * |h|,
// so conserved-quantity drift stays of order tol * elapsed-time. Steps are
// clipped to land exactly on the requested sample times (no interpolation),
// which keeps sampled output bit-reproducible for a fixed configuration.
// Supports forward (t1 > t0) and backward (t1 < t0) integration.
//
// on_sample is invoked once per entry of sample_times, in order; sample
// times must be monotone from t0 towards t1. Throws StepFailure when the
// controller cannot meet the tolerance.
OdeStats integrate_sampled(const OdeRhs& rhs, CVec y0, double t0, double t1, double tol,
                           std::span<const double> sample_times,
                           const std::function<void(std::size_t, double, const CVec&)>& on_sample);

// Convenience: integrate to t1 and return the final state.
CVec integrate_to(const OdeRhs& rhs, CVec y0, double t0, double t1, double tol,
                  OdeStats* stats = nullptr);

// Uniform grid of n+1 sample times from t0 to t1 inclusive.
std::vector<double> uniform_times(double t0, double t1, std::size_t n);

}  // namespace rcl
