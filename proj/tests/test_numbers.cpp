#include <gtest/gtest.h>

#include "printers.hpp"

#include "oracles.hpp"
#include "wpaths/error.hpp"
#include "wpaths/numbers/numbers.hpp"

using namespace wpaths;

namespace {

const MultiPoly A = MultiPoly::variable(Var::a);
const MultiPoly B = MultiPoly::variable(Var::b);

Integer big(oracle::u64 v) { return Integer(std::to_string(v)); }

}  // namespace

TEST(Numbers, PublishedValues) {
  for (std::size_t n = 0; n < oracle::kCatalan.size(); ++n) EXPECT_EQ(catalan(n), big(oracle::kCatalan[n]));
  for (std::size_t n = 0; n < oracle::kMotzkin.size(); ++n) EXPECT_EQ(motzkin(n), big(oracle::kMotzkin[n]));
  for (std::size_t n = 0; n < oracle::kSchroder.size(); ++n) EXPECT_EQ(schroder(n), big(oracle::kSchroder[n]));
  EXPECT_EQ(schroder(10), 1037718);
  EXPECT_EQ(catalan(12), 208012);
  EXPECT_EQ(motzkin(14), 113634);
}

TEST(Numbers, ClosedFormsMatchRecurrences) {
  for (int n = 0; n <= 60; ++n) {
    EXPECT_EQ(motzkin(n), motzkin_recurrence(n)) << n;
    EXPECT_EQ(schroder(n), schroder_recurrence(n)) << n;
  }
}

TEST(Numbers, BinomialAgainstPascal) {
  for (int n = 0; n <= 40; ++n) {
    for (int k = -1; k <= n + 1; ++k) EXPECT_EQ(binomial(n, k), big(oracle::binom(n, k)));
  }
  EXPECT_THROW(binomial(-1, 0), UsageError);
}

TEST(Numbers, NarayanaRows) {
  for (int n = 1; n <= 20; ++n) {
    Integer row = 0;
    for (int k = 0; k < n; ++k) {
      EXPECT_EQ(narayana(n, k), big(oracle::narayana(n, k)));
      EXPECT_EQ(narayana(n, k), narayana(n, n - 1 - k));
      row += narayana(n, k);
    }
    EXPECT_EQ(row, catalan(n));
    EXPECT_EQ(narayana(n, n), 0);
  }
  EXPECT_THROW(narayana(0, 0), UsageError);
}

TEST(Numbers, SchroderRefinements) {
  for (int n = 1; n <= 15; ++n) {
    Integer by_e = 0, by_d = 0;
    for (int k = 0; k <= n; ++k) {
      by_e += schroder_e_count(n, k);
      by_d += schroder_diag_count(n, k);
    }
    EXPECT_EQ(by_e, schroder(n));
    EXPECT_EQ(by_d, schroder(n));
  }
}

TEST(Numbers, MotzkinPolynomial) {
  EXPECT_EQ(motzkin_poly_dp(4).to_string(), "a^4 + 6*a^2*b + 2*b^2");
  for (int n = 0; n <= 14; ++n) {
    EXPECT_EQ(motzkin_poly(n), motzkin_poly_dp(n));
    EXPECT_EQ(motzkin_poly(n, 1, 1).constant_value(), motzkin(n));
    EXPECT_EQ(motzkin_poly(n, A, B), motzkin_poly(n));
  }
}

TEST(Numbers, SchroderPolynomial) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(schroder_poly(n), schroder_poly_dp(n));
    EXPECT_EQ(schroder_poly(n, 1, 1).constant_value(), schroder(n));
  }
  EXPECT_EQ(schroder_poly(2).to_string(), "a^2 + 3*a*b + 2*b^2");
}

TEST(Numbers, CatalanValleyPolynomial) {
  EXPECT_EQ(catalan_valley_poly(0), MultiPoly(1));
  EXPECT_EQ(catalan_valley_poly(3).to_string(), "a^3 + 3*a^2*b + a*b^2");
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(catalan_valley_poly(n, 1, 1).constant_value(), catalan(n));
}

TEST(Numbers, SequenceNames) {
  EXPECT_EQ(sequence_from_name("narayana"), SequenceId::Narayana);
  EXPECT_EQ(sequence_name(SequenceId::SchroderNum), "schroder");
  EXPECT_THROW(sequence_from_name("fibonacci"), UsageError);
}
