#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rcl/rational_complex.hpp"
#include "rcl/sigma.hpp"

namespace rcl {

// The complete placement function f: Sigma -> Q[i]. Values are indexed by
// the SigmaIndex point order; angles store e^{i theta(F)} per family as an
// exact unit rational.
struct PlacementFunction {
  SigmaIndex sigma;
  std::vector<RationalComplex> initial;  // f restricted to Sigma_1
  std::vector<RationalComplex> angles;   // per family
  std::vector<RationalComplex> values;   // per point
};

// Recursively extend f1 to all of Sigma. For a family F with angle q =
// e^{i theta(F)}, the children sit diametrically opposite on the circle
// whose diameter joins the parents:
//   f(F_{1+i}) = (1+q)/2 f(F_1) + (1-q)/2 f(F_i)
//   f(F_0)     = (1-q)/2 f(F_1) + (1+q)/2 f(F_i)
// so parents and children always share midpoint and circumradius.
// Throws std::invalid_argument on missing values or a non-unit angle.
PlacementFunction place_recursive(const SigmaIndex& sigma,
                                  const std::vector<RationalComplex>& f1,
                                  const std::vector<RationalComplex>& angles);

// The model example: f1(z) = R z_1 ... z_{N-1}, all angles e^{i pi/2} = i.
// The induced f keeps the product closed form in every generation.
PlacementFunction model_example(int n_generations, long radius);

// All unit rationals (+-a +- b i)/c with a^2 + b^2 = c^2, c <= max_hyp
// (both coordinate orders), plus the axis phases {1, i, -1, -i}.
// Deduplicated, deterministic order. Requires max_hyp >= 5.
std::vector<RationalComplex> pythagorean_angles(long max_hyp);

struct GenerationMoments {
  std::string sum_re, sum_im;  // sum of n over the generation (exact, decimal)
  std::string sum_norm2;       // sum of |n|^2 (exact, decimal)
};

// Verification certificate. Failures are recorded with witnesses, never
// thrown; pass() is the conjunction of everything that applies.
struct LambdaCertificate {
  int n_generations = 0;
  double s = 0;

  bool nonzero = false;
  bool injective = false;
  bool integral = false;        // LCD scaling clears all denominators
  bool scan_run = false;        // O(|Lambda|^3) right-triangle scan executed
  bool faithful = false;        // every right triangle comes from one family
  bool closed = false;          // fourth corners present and family-complete
  bool magnitude_ok = false;    // max|n| <= ratio_bound * min|n|
  bool moments_ok = false;      // generation sums of n and |n|^2 constant
  bool ratio_ok = false;        // norm explosion (applies when N >= 6)
  bool ratio_applicable = false;

  std::int64_t min_norm2 = 0;
  std::int64_t max_norm2 = 0;
  double magnitude_ratio = 0;   // max|n| / min|n|
  long right_triangle_count = 0;
  std::string lcd;              // least common denominator cleared (decimal)

  std::vector<double> norm_sums;        // S_j, float view
  std::vector<std::string> norm_sums_exact;  // exact when 2s is an even integer
  bool norm_sums_are_exact = false;
  double explosion_ratio = 0;           // S_{N-2} / S_3 when applicable
  double explosion_threshold = 0;       // 0.5 * 2^{(s-1)(N-5)}

  std::vector<GenerationMoments> moments;
  std::vector<std::string> violations;  // first few witnesses, human readable

  bool pass() const {
    return nonzero && injective && integral && scan_run && faithful && closed &&
           magnitude_ok && moments_ok && (!ratio_applicable || ratio_ok);
  }
};

struct VerifyOptions {
  double ratio_bound = 0;       // 0 = default 8^N
  int max_scan_generations = 9; // refuse the cubic scan above this without opt-in
  bool allow_large_scan = false;
  int max_witnesses = 8;
};

// Certified frequency set: the image of Sigma under an integral placement,
// split into generations, together with the family maps and certificate.
struct LambdaSet {
  int n_generations = 0;
  double s = 0;
  std::uint64_t seed = 0;
  int attempts_used = 0;
  long inner_radius_target = 0;

  SigmaIndex sigma;
  std::vector<FreqPoint> points;                 // per sigma point
  std::vector<std::vector<FreqPoint>> generations;
  LambdaCertificate certificate;

  const FreqPoint& point_of(const CombinatorialPoint& x) const {
    return points[static_cast<std::size_t>(sigma.index_of(x))];
  }
  int generation_of_index(int idx) const { return sigma.generation_of[static_cast<std::size_t>(idx)]; }
};

// Full verification of a placement function at Sobolev exponent s:
// (i) injectivity, (ii) non-zero values, (iii) integrality after LCD
// scaling, (iv) magnitude bounds, (v) faithfulness via the exact
// right-triangle scan, (vi) closure, (vii) norm sums and explosion ratio,
// plus the generation moment identities.
LambdaCertificate verify_lambda(const PlacementFunction& f, double s,
                                const VerifyOptions& opts = {});

// Norm sums S_j = sum_{n in Lambda_j} |n|^{2s}, with multiplicity.
struct NormSums {
  std::vector<double> value;
  std::vector<std::string> exact;  // decimal strings; empty unless exact mode
  bool exact_mode = false;
};
NormSums norm_sums(const std::vector<std::vector<FreqPoint>>& generations, double s);
NormSums norm_sums(const LambdaSet& lambda, double s);

struct ConstructOptions {
  long base_radius = 4;      // magnitude scale of the initial generation
  long grid_denominator = 7; // f1 is perturbed on the grid (Z + Zi)/D
  long grid_span = 3;        // perturbation numerators drawn from [-span, span]
  long angle_pool_hyp = 5;   // Pythagorean pool: hypotenuses <= this
  double ratio_bound = 0;    // 0 = default 8^N
  bool exclude_degenerate_angles = true;  // drop +-1 (children collide with parents)
};

struct BudgetExhausted : std::runtime_error {
  LambdaCertificate best_certificate;
  int attempts = 0;
  BudgetExhausted(std::string msg, LambdaCertificate best, int n)
      : std::runtime_error(std::move(msg)), best_certificate(std::move(best)), attempts(n) {}
};

// Randomized search with exact certification: perturb the model example's
// initial values on a rational grid, draw Pythagorean family angles, and
// keep the first draw whose certificate passes. The certified values are
// scaled by their LCD (integrality) and then by an integer factor so that
// min |n| >= radius_target. Deterministic in (seed, budget).
LambdaSet construct_good_lambda(int n_generations, double s, long radius_target,
                                std::uint64_t seed, int budget,
                                const ConstructOptions& opts = {});

// Dilate every point by an integer factor k >= 1 (test/scaling helper).
LambdaSet dilate(const LambdaSet& lambda, long k);

}  // namespace rcl
