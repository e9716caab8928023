#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "rcl/errors.hpp"

namespace rcl {

using Wide = __int128;

// Gaussian integer n = re + i*im on the frequency lattice.
//
// Coordinates are stored as int64 but every quadratic form (norms, dot
// products, resonance phases) is evaluated in 128-bit arithmetic, so all
// predicates are exact as long as |re|, |im| <= kCoordLimit. Construction
// paths that could exceed the limit (clearing denominators of rational
// placements, JSON input) go through checked().
struct FreqPoint {
  std::int64_t re = 0;
  std::int64_t im = 0;

  static constexpr std::int64_t kCoordLimit = std::int64_t(1) << 31;

  static FreqPoint checked(Wide re, Wide im) {
    if (re > kCoordLimit || re < -kCoordLimit || im > kCoordLimit || im < -kCoordLimit)
      throw LatticeOverflow("lattice coordinate exceeds checked range");
    return FreqPoint{static_cast<std::int64_t>(re), static_cast<std::int64_t>(im)};
  }

  friend FreqPoint operator+(FreqPoint a, FreqPoint b) { return {a.re + b.re, a.im + b.im}; }
  friend FreqPoint operator-(FreqPoint a, FreqPoint b) { return {a.re - b.re, a.im - b.im}; }
  FreqPoint operator-() const { return {-re, -im}; }
  friend FreqPoint operator*(std::int64_t k, FreqPoint a) { return {k * a.re, k * a.im}; }
  friend bool operator==(FreqPoint a, FreqPoint b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(FreqPoint a, FreqPoint b) { return !(a == b); }
  friend bool operator<(FreqPoint a, FreqPoint b) {
    return a.re != b.re ? a.re < b.re : a.im < b.im;
  }

  std::string str() const {
    return "(" + std::to_string(re) + "," + std::to_string(im) + ")";
  }
};

struct FreqPointHash {
  std::size_t operator()(FreqPoint p) const {
    std::uint64_t h = static_cast<std::uint64_t>(p.re) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::uint64_t>(p.im) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

// |n|^2 in exact integer arithmetic.
std::int64_t norm2(FreqPoint n);

std::int64_t dot(FreqPoint a, FreqPoint b);

// omega4 = |n1|^2 - |n2|^2 + |n3|^2 - |n|^2, the phase of the non-resonant
// interactions. Exact; throws LatticeOverflow if the result leaves int64.
std::int64_t omega4(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n);

// Membership in Gamma_res(n): n1 - n2 + n3 = n, n1 != n, n3 != n, omega4 = 0.
bool is_resonant(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n);

// The four points form a nondegenerate rectangle with (n1,n3) and (n2,n)
// as the two diagonals. Degenerate (repeated-point or collinear)
// configurations are rejected.
bool is_rectangle(FreqPoint n1, FreqPoint n2, FreqPoint n3, FreqPoint n);

// Right angle at vertex a, spanned by b and c. Requires distinct inputs.
bool right_angle_at(FreqPoint a, FreqPoint b, FreqPoint c);

}  // namespace rcl
