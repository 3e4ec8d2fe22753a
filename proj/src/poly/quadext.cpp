#include "wpaths/poly/quadext.hpp"

#include <cstdlib>
#include <utility>

#include "wpaths/error.hpp"

namespace wpaths {

bool is_square_free(long d) {
  unsigned long m = static_cast<unsigned long>(std::labs(d));
  for (unsigned long p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

QuadExt::QuadExt(Rational rat, Rational irr, long discriminant)
    : rat_(std::move(rat)), irr_(std::move(irr)), d_(discriminant) {
  if (d_ == 0 || d_ == 1 || !is_square_free(d_)) {
    throw UsageError("discriminant must be square-free and not 0 or 1, got " + std::to_string(d_));
  }
}

void QuadExt::require_same_field(const QuadExt& other) const {
  if (d_ != other.d_) {
    throw UsageError("cannot mix sqrt(" + std::to_string(d_) + ") and sqrt(" +
                     std::to_string(other.d_) + ")");
  }
}

Rational QuadExt::norm() const { return rat_ * rat_ - Rational(d_) * irr_ * irr_; }

QuadExt& QuadExt::operator+=(const QuadExt& rhs) {
  require_same_field(rhs);
  rat_ += rhs.rat_;
  irr_ += rhs.irr_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& rhs) {
  require_same_field(rhs);
  rat_ -= rhs.rat_;
  irr_ -= rhs.irr_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& rhs) {
  require_same_field(rhs);
  // (p + q r)(s + t r) = (ps + D qt) + (pt + qs) r
  Rational rat = rat_ * rhs.rat_ + Rational(d_) * irr_ * rhs.irr_;
  Rational irr = rat_ * rhs.irr_ + irr_ * rhs.rat_;
  rat_ = std::move(rat);
  irr_ = std::move(irr);
  return *this;
}

QuadExt& QuadExt::operator*=(const Rational& rhs) {
  rat_ *= rhs;
  irr_ *= rhs;
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& rhs) {
  require_same_field(rhs);
  return *this *= quad_inverse(rhs);
}

bool operator==(const QuadExt& lhs, const QuadExt& rhs) {
  lhs.require_same_field(rhs);
  return lhs.rat_ == rhs.rat_ && lhs.irr_ == rhs.irr_;
}

std::string QuadExt::to_string() const {
  const std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (sgn(irr_) == 0) return rat_.get_str();

  std::string irr_part;
  Rational mag = abs(irr_);
  if (mag == 1) {
    irr_part = root;
  } else {
    irr_part = mag.get_str() + "*" + root;
  }
  if (sgn(rat_) == 0) return (sgn(irr_) < 0 ? "-" : "") + irr_part;
  return rat_.get_str() + (sgn(irr_) < 0 ? " - " : " + ") + irr_part;
}

QuadExt quad_inverse(const QuadExt& z) {
  if (z.is_zero()) throw DivisionByZero();
  // Nonzero norm is guaranteed because D is not a perfect square.
  Rational n = z.norm();
  return {z.rat() / n, -z.irr() / n, z.discriminant()};
}

QuadExt pow(const QuadExt& z, long k) {
  QuadExt base = k < 0 ? quad_inverse(z) : z;
  unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
  QuadExt result = QuadExt::rational(1, z.discriminant());
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

}  // namespace wpaths
