#include <random>

#include <gtest/gtest.h>

#include "printers.hpp"

#include "wpaths/error.hpp"
#include "wpaths/poly/multipoly.hpp"
#include "wpaths/poly/quadext.hpp"
#include "wpaths/poly/rational.hpp"

using namespace wpaths;

namespace {

const MultiPoly A = MultiPoly::variable(Var::a);
const MultiPoly B = MultiPoly::variable(Var::b);
const MultiPoly X = MultiPoly::variable(Var::x);

MultiPoly random_poly(std::mt19937& rng, int terms = 4) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::uniform_int_distribution<int> ex(0, 3);
  MultiPoly p;
  for (int i = 0; i < terms; ++i) {
    Monomial m = Monomial::of(Var::a, ex(rng)) * Monomial::of(Var::b, ex(rng)) * Monomial::of(Var::x, ex(rng));
    p += MultiPoly::term(make_rational(coef(rng), 1 + ex(rng)), m);
  }
  return p;
}

}  // namespace

TEST(Rational, Canonical) {
  EXPECT_EQ(make_rational(2, -4), Rational(-1, 2));
  EXPECT_EQ(to_string(make_rational(2, -4)), "-1/2");
  EXPECT_EQ(to_string(make_rational(0, 7)), "0");
  EXPECT_THROW(make_rational(1, 0), DivisionByZero);
  EXPECT_EQ(mod_floor(Integer(-1), Integer(7)), 6);
}

TEST(QuadExt, Inverse) {
  QuadExt z(3, -1, 2);  // 3 - sqrt2
  QuadExt inv = quad_inverse(z);
  EXPECT_EQ(inv, QuadExt(Rational(3, 7), Rational(1, 7), 2));
  EXPECT_EQ(inv.to_string(), "3/7 + 1/7*sqrt(2)");
  EXPECT_EQ(z * inv, QuadExt::rational(1, 2));
  EXPECT_THROW(quad_inverse(QuadExt::rational(0, 2)), DivisionByZero);
}

TEST(QuadExt, Text) {
  EXPECT_EQ(QuadExt::rational(3, 2).to_string(), "3");
  EXPECT_EQ(QuadExt(0, Rational(-1, 2), 2).to_string(), "-1/2*sqrt(2)");
  EXPECT_EQ(QuadExt::rational(0, 5).to_string(), "0");
}

TEST(QuadExt, SixthRootOfUnity) {
  QuadExt w(Rational(1, 2), Rational(1, 2), -3);
  EXPECT_EQ(pow(w, 6), QuadExt::rational(1, -3));
  EXPECT_EQ(pow(w, -1), w.conjugate());
  EXPECT_EQ(w.norm(), 1);
}

TEST(QuadExt, RejectsMixedFields) {
  EXPECT_THROW((void)(QuadExt::root(2) + QuadExt::root(3)), UsageError);
  EXPECT_THROW((void)(QuadExt::root(2) == QuadExt::root(3)), UsageError);
  EXPECT_THROW(QuadExt(0, 1, 4), UsageError);
  EXPECT_THROW(QuadExt(0, 1, 1), UsageError);
  EXPECT_THROW(QuadExt(0, 1, 0), UsageError);
}

TEST(QuadExt, FieldProperties) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int i = 0; i < 200; ++i) {
    QuadExt p(make_rational(d(rng), 1 + std::abs(d(rng))), d(rng), 2);
    QuadExt q(d(rng), make_rational(d(rng), 1 + std::abs(d(rng))), 2);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q).norm(), p.norm() * q.norm());
    if (!q.is_zero()) EXPECT_EQ((p / q) * q, p);
  }
}

TEST(MultiPoly, CanonicalText) {
  EXPECT_EQ(pow(A + B, 2).to_string(), "a^2 + 2*a*b + b^2");
  EXPECT_EQ((B - A).to_string(), "-a + b");
  EXPECT_EQ(MultiPoly().to_string(), "0");
  EXPECT_EQ((A * A * A - MultiPoly(Rational(1, 2)) * X).to_string(), "a^3 - 1/2*x");
  EXPECT_EQ(MultiPoly(-3).to_string(), "-3");
}

TEST(MultiPoly, VariableNames) {
  EXPECT_EQ(var_from_name("a1"), Var::a1);
  EXPECT_EQ(var_name(Var::be), "be");
  EXPECT_THROW(var_from_name("q"), UsageError);
}

TEST(MultiPoly, SimultaneousSubstitution) {
  MultiPoly p = A * B;
  EXPECT_EQ(substitute(p, {{Var::a, B}, {Var::b, A + B}}), B * (A + B));
  EXPECT_EQ(substitute(substitute(p, Var::a, B), Var::b, A + B), pow(A + B, 2));
}

TEST(MultiPoly, Evaluation) {
  MultiPoly p = pow(A, 2) + 3 * A * B - 1;
  EXPECT_EQ(eval_rational(p, {{Var::a, 2}, {Var::b, Rational(1, 3)}}), 5);
  EXPECT_THROW(eval_rational(p, {{Var::a, 2}}), UsageError);
  QuadExt r = QuadExt::root(2);
  EXPECT_EQ(eval_quad(p, {{Var::a, r}, {Var::b, r}}, 2), QuadExt::rational(7, 2));
  EXPECT_THROW(eval_quad(p, {{Var::a, QuadExt::root(3)}, {Var::b, r}}, 2), UsageError);
}

TEST(MultiPoly, RingProperties) {
  std::mt19937 rng(12345);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(pow(p, 3), p * p * p);
  }
}

TEST(MultiPoly, SubstitutionIsAHomomorphism) {
  std::mt19937 rng(99);
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), s = random_poly(rng, 2);
    EXPECT_EQ(substitute(p * q, Var::x, s), substitute(p, Var::x, s) * substitute(q, Var::x, s));
    EXPECT_EQ(substitute(p + q, Var::a, s), substitute(p, Var::a, s) + substitute(q, Var::a, s));
  }
}

TEST(MultiPoly, EvaluationIsAHomomorphism) {
  std::mt19937 rng(5);
  std::map<Var, Rational> pt{{Var::a, Rational(2, 3)}, {Var::b, -4}, {Var::x, Rational(5, 7)}};
  for (int i = 0; i < 50; ++i) {
    MultiPoly p = random_poly(rng), q = random_poly(rng);
    EXPECT_EQ(eval_rational(p * q, pt), eval_rational(p, pt) * eval_rational(q, pt));
    EXPECT_EQ(eval_rational(p - q, pt), eval_rational(p, pt) - eval_rational(q, pt));
  }
}

TEST(MultiPoly, DegreeAndCoefficients) {
  MultiPoly p = pow(A + X, 3);
  EXPECT_EQ(p.degree(), 3U);
  EXPECT_EQ(p.coefficient(Monomial::of(Var::a, 2) * Monomial::of(Var::x)), 3);
  EXPECT_TRUE(p.is_integral());
  EXPECT_FALSE((p * MultiPoly(Rational(1, 2))).is_integral());
  EXPECT_THROW(p.constant_value(), UsageError);
}
