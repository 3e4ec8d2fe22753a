#pragma once

#include <string>

#include "wpaths/poly/rational.hpp"

namespace wpaths {

/// Element rat + irr*sqrt(D) of the quadratic field Q(sqrt(D)). D is a
/// square-free integer other than 0 and 1, carried with every value; values
/// over different D never combine.
class QuadExt {
 public:
  QuadExt(Rational rat, Rational irr, long discriminant);

  static QuadExt rational(const Rational& r, long discriminant) { return {r, 0, discriminant}; }
  /// sqrt(D) itself.
  static QuadExt root(long discriminant) { return {0, 1, discriminant}; }

  const Rational& rat() const { return rat_; }
  const Rational& irr() const { return irr_; }
  long discriminant() const { return d_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(irr_) == 0; }
  bool is_rational() const { return sgn(irr_) == 0; }

  QuadExt conjugate() const { return {rat_, -irr_, d_}; }
  /// rat^2 - D*irr^2.
  Rational norm() const;

  QuadExt operator-() const { return {-rat_, -irr_, d_}; }
  QuadExt& operator+=(const QuadExt& rhs);
  QuadExt& operator-=(const QuadExt& rhs);
  QuadExt& operator*=(const QuadExt& rhs);
  QuadExt& operator/=(const QuadExt& rhs);
  QuadExt& operator*=(const Rational& rhs);

  friend QuadExt operator+(QuadExt lhs, const QuadExt& rhs) { return lhs += rhs; }
  friend QuadExt operator-(QuadExt lhs, const QuadExt& rhs) { return lhs -= rhs; }
  friend QuadExt operator*(QuadExt lhs, const QuadExt& rhs) { return lhs *= rhs; }
  friend QuadExt operator*(QuadExt lhs, const Rational& rhs) { return lhs *= rhs; }
  friend QuadExt operator*(const Rational& lhs, QuadExt rhs) { return rhs *= lhs; }
  friend QuadExt operator/(QuadExt lhs, const QuadExt& rhs) { return lhs /= rhs; }

  /// Throws UsageError when the discriminants differ.
  friend bool operator==(const QuadExt& lhs, const QuadExt& rhs);

  /// `3`, `-1/2*sqrt(2)`, `3/7 + 1/7*sqrt(2)`.
  std::string to_string() const;

 private:
  void require_same_field(const QuadExt& other) const;

  Rational rat_;
  Rational irr_;
  long d_;
};

/// Throws DivisionByZero for the zero element.
QuadExt quad_inverse(const QuadExt& z);

/// Integer power; negative exponents go through quad_inverse.
QuadExt pow(const QuadExt& z, long k);

bool is_square_free(long d);

}  // namespace wpaths
