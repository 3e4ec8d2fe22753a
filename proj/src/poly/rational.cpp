#include "wpaths/poly/rational.hpp"

#include "wpaths/error.hpp"

namespace wpaths {

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DivisionByZero();
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Integer mod_floor(const Integer& z, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace wpaths
