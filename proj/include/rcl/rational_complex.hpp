#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "rcl/gaussian.hpp"

namespace rcl {

// Exact element of Q[i]. Backed by GMP rationals so the placement recursion
// never rounds, whatever denominators the Pythagorean angles introduce.
struct RationalComplex {
  mpq_class re{0};
  mpq_class im{0};

  RationalComplex() = default;
  RationalComplex(mpq_class r, mpq_class i) : re(std::move(r)), im(std::move(i)) {
    re.canonicalize();
    im.canonicalize();
  }
  static RationalComplex integer(long r, long i) {
    return RationalComplex(mpq_class(r), mpq_class(i));
  }
  // (nr + ni*i) / den
  static RationalComplex fraction(long nr, long ni, long den) {
    return RationalComplex(mpq_class(nr, den), mpq_class(ni, den));
  }

  bool is_zero() const { return re == 0 && im == 0; }

  RationalComplex conj() const { return RationalComplex(re, -im); }

  mpq_class norm2() const { return re * re + im * im; }

  bool unit_modulus() const { return norm2() == 1; }

  friend RationalComplex operator+(const RationalComplex& a, const RationalComplex& b) {
    return RationalComplex(a.re + b.re, a.im + b.im);
  }
  friend RationalComplex operator-(const RationalComplex& a, const RationalComplex& b) {
    return RationalComplex(a.re - b.re, a.im - b.im);
  }
  RationalComplex operator-() const { return RationalComplex(-re, -im); }
  friend RationalComplex operator*(const RationalComplex& a, const RationalComplex& b) {
    return RationalComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend RationalComplex operator/(const RationalComplex& a, const RationalComplex& b) {
    mpq_class n2 = b.norm2();
    if (n2 == 0) throw std::domain_error("RationalComplex division by zero");
    RationalComplex num = a * b.conj();
    return RationalComplex(num.re / n2, num.im / n2);
  }
  friend bool operator==(const RationalComplex& a, const RationalComplex& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const RationalComplex& a, const RationalComplex& b) { return !(a == b); }

  // Common-denominator view (numerator_re, numerator_im, denominator > 0,
  // gcd(n_re, n_im, den) = 1 holds by mpq canonicalization of each part).
  mpz_class denominator() const;
  mpz_class numerator_re() const { return re.get_num() * (denominator() / re.get_den()); }
  mpz_class numerator_im() const { return im.get_num() * (denominator() / im.get_den()); }

  double re_d() const { return re.get_d(); }
  double im_d() const { return im.get_d(); }

  std::string str() const;
};

// Total order used for deterministic dedup/sort (not a numeric order).
bool rc_less(const RationalComplex& a, const RationalComplex& b);

// lcm of all denominators of the set (re and im parts).
mpz_class common_denominator(const std::vector<RationalComplex>& values);

// Scale by an integer and convert to an exact lattice point; throws unless
// scale clears the denominators and the result fits in checked range.
FreqPoint to_freq_point(const RationalComplex& v, const mpz_class& scale);

}  // namespace rcl
