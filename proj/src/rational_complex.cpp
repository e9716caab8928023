#include "rcl/rational_complex.hpp"

namespace rcl {

mpz_class RationalComplex::denominator() const {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), re.get_den().get_mpz_t(), im.get_den().get_mpz_t());
  return l;
}

std::string RationalComplex::str() const {
  return re.get_str() + (sgn(im) < 0 ? "" : "+") + im.get_str() + "i";
}

bool rc_less(const RationalComplex& a, const RationalComplex& b) {
  mpz_class da = a.denominator(), db = b.denominator();
  if (da != db) return da < db;
  mpz_class ra = a.numerator_re(), rb = b.numerator_re();
  if (ra != rb) return ra < rb;
  return a.numerator_im() < b.numerator_im();
}

mpz_class common_denominator(const std::vector<RationalComplex>& values) {
  mpz_class l = 1;
  for (const auto& v : values) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
  }
  return l;
}

FreqPoint to_freq_point(const RationalComplex& v, const mpz_class& scale) {
  mpq_class r = v.re * scale;
  mpq_class i = v.im * scale;
  r.canonicalize();
  i.canonicalize();
  if (r.get_den() != 1 || i.get_den() != 1)
    throw LatticeOverflow("scale does not clear denominators");
  if (!r.get_num().fits_slong_p() || !i.get_num().fits_slong_p())
    throw LatticeOverflow("scaled coordinate exceeds integer range");
  return FreqPoint::checked(Wide(r.get_num().get_si()), Wide(i.get_num().get_si()));
}

}  // namespace rcl
