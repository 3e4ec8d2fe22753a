#pragma once

#include <gmpxx.h>

#include <string>

namespace wpaths {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. mpq_class keeps values canonical (lowest
/// terms, positive denominator, zero as 0/1) after every arithmetic
/// operation; make_rational() canonicalizes the one constructor that does not.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Decimal text: "7", "-3/4".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Nonnegative remainder of z modulo m (m > 0).
Integer mod_floor(const Integer& z, const Integer& m);

}  // namespace wpaths
