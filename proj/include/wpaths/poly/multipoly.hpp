#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "wpaths/poly/quadext.hpp"
#include "wpaths/poly/rational.hpp"

namespace wpaths {

/// The fixed variable universe. Declaration order is alphabetical by name
/// and doubles as the variable order for display.
enum class Var : std::uint8_t { a, a1, a2, al, b, be, x };

inline constexpr std::size_t kVarCount = 7;
inline constexpr std::array<Var, kVarCount> kAllVars = {Var::a,  Var::a1, Var::a2, Var::al,
                                                        Var::b,  Var::be, Var::x};

std::string_view var_name(Var v);

/// Throws UsageError for names outside the variable universe.
Var var_from_name(std::string_view name);

/// A power product of the variables. The constant monomial has every
/// exponent zero.
class Monomial {
 public:
  Monomial() = default;

  static Monomial of(Var v, unsigned exponent = 1);

  unsigned exponent(Var v) const { return exps_[static_cast<std::size_t>(v)]; }
  unsigned degree() const;
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;

  /// `a^2*b`; empty string for the constant monomial.
  std::string to_string() const;

  const std::array<std::uint16_t, kVarCount>& exponents() const { return exps_; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint16_t, kVarCount> exps_{};
};

/// Graded lexicographic, descending: higher total degree first, ties broken
/// by comparing exponent vectors in variable order with larger first. The
/// constant term sorts last.
struct DisplayOrder {
  bool operator()(const Monomial& lhs, const Monomial& rhs) const;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so structural equality is polynomial
/// equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, DisplayOrder>;

  MultiPoly() = default;
  MultiPoly(long constant);             // NOLINT(google-explicit-constructor)
  MultiPoly(const Integer& constant);   // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static MultiPoly variable(Var v);
  static MultiPoly term(const Rational& coefficient, const Monomial& monomial);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws UsageError otherwise.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  unsigned degree() const;
  /// True when every coefficient is an integer.
  bool is_integral() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);

  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs -= rhs; }
  friend MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs);
  friend bool operator==(const MultiPoly& lhs, const MultiPoly& rhs) {
    return lhs.terms_ == rhs.terms_;
  }

  /// Canonical text form, e.g. `a^2 + 2*a*b + b^2`, `0` for zero.
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);

  TermMap terms_;
};

MultiPoly add(const MultiPoly& p, const MultiPoly& q);
MultiPoly mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly pow(const MultiPoly& p, unsigned k);

/// Replace every occurrence of `var` by `replacement`.
MultiPoly substitute(const MultiPoly& p, Var var, const MultiPoly& replacement);

/// Simultaneous substitution: all replacements read the original variables,
/// so {a -> b, b -> a + b} does not feed the new `b` into the old `a`.
MultiPoly substitute(const MultiPoly& p, const std::map<Var, MultiPoly>& replacements);

/// Throws UsageError if a variable of p is missing from the assignment.
Rational eval_rational(const MultiPoly& p, const std::map<Var, Rational>& assignment);

/// Evaluate in Q(sqrt(D)). Throws UsageError if an assigned value lives in a
/// different field or a variable is missing.
QuadExt eval_quad(const MultiPoly& p, const std::map<Var, QuadExt>& assignment, long discriminant);

}  // namespace wpaths
