#include "wpaths/numbers/numbers.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "wpaths/error.hpp"

namespace wpaths {

namespace {

void require_nonnegative(int n) {
  if (n < 0) throw UsageError("order must be nonnegative, got " + std::to_string(n));
}

Integer exact_div(const Integer& num, const Integer& den) {
  Integer q;
  Integer r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (r != 0) {
    throw std::logic_error("inexact division " + num.get_str() + " / " + den.get_str());
  }
  return q;
}

MultiPoly var(Var v) { return MultiPoly::variable(v); }

}  // namespace

std::string_view sequence_name(SequenceId s) {
  switch (s) {
    case SequenceId::CatalanNum: return "catalan";
    case SequenceId::MotzkinNum: return "motzkin";
    case SequenceId::SchroderNum: return "schroder";
    case SequenceId::Narayana: return "narayana";
  }
  return "?";
}

SequenceId sequence_from_name(std::string_view name) {
  for (SequenceId s : {SequenceId::CatalanNum, SequenceId::MotzkinNum, SequenceId::SchroderNum,
                       SequenceId::Narayana}) {
    if (sequence_name(s) == name) return s;
  }
  throw UsageError("unknown sequence '" + std::string(name) + "'");
}

Integer binomial(long n, long k) {
  if (n < 0) throw UsageError("binomial with negative n");
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer catalan(int n) {
  require_nonnegative(n);
  return exact_div(binomial(2L * n, n), n + 1);
}

Integer narayana(int n, int k) {
  if (n < 1) throw UsageError("narayana requires n >= 1");
  if (k < 0 || k > n - 1) return 0;
  return exact_div(binomial(n, k) * binomial(n, k + 1), n);
}

Integer motzkin(int n) {
  require_nonnegative(n);
  Integer total = 0;
  for (int k = 0; 2 * k <= n; ++k) total += binomial(n, 2L * k) * catalan(k);
  return total;
}

Integer motzkin_recurrence(int n) {
  require_nonnegative(n);
  std::vector<Integer> m{1};
  for (int j = 0; j < n; ++j) {
    Integer next = m[j];
    for (int k = 0; k <= j - 1; ++k) next += m[k] * m[j - 1 - k];
    m.push_back(next);
  }
  return m[n];
}

Integer schroder(int n) {
  require_nonnegative(n);
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += schroder_e_count(n, k);
  return total;
}

Integer schroder_recurrence(int n) {
  require_nonnegative(n);
  std::vector<Integer> s{1};
  for (int j = 1; j <= n; ++j) {
    Integer next = s[j - 1];
    for (int k = 0; k <= j - 1; ++k) next += s[k] * s[j - 1 - k];
    s.push_back(next);
  }
  return s[n];
}

Integer schroder_e_count(int n, int k) {
  require_nonnegative(n);
  if (k < 0 || k > n) return 0;
  return binomial(n + k, 2L * k) * catalan(k);
}

Integer schroder_diag_count(int n, int k) {
  if (n < 1) throw UsageError("schroder_diag_count requires n >= 1");
  if (k < 0 || k > n) return 0;
  return exact_div(binomial(n, k) * binomial(2L * n - k, n - 1), n);
}

MultiPoly motzkin_poly(int n) { return motzkin_poly(n, var(Var::a), var(Var::b)); }

MultiPoly motzkin_poly(int n, const MultiPoly& a, const MultiPoly& b) {
  require_nonnegative(n);
  MultiPoly total;
  for (int k = 0; 2 * k <= n; ++k) {
    total += MultiPoly(Integer(catalan(k) * binomial(n, 2L * k))) *
             pow(a, static_cast<unsigned>(n - 2 * k)) * pow(b, static_cast<unsigned>(k));
  }
  return total;
}

MultiPoly motzkin_poly_dp(int n) {
  require_nonnegative(n);
  const MultiPoly a = var(Var::a);
  const MultiPoly b = var(Var::b);
  std::vector<MultiPoly> m{MultiPoly(1)};
  for (int j = 1; j <= n; ++j) {
    MultiPoly returns;
    for (int k = 0; k <= j - 2; ++k) returns += m[k] * m[j - 2 - k];
    m.push_back(a * m[j - 1] + b * returns);
  }
  return m[n];
}

MultiPoly schroder_poly(int n) { return schroder_poly(n, var(Var::a), var(Var::b)); }

MultiPoly schroder_poly(int n, const MultiPoly& a, const MultiPoly& b) {
  require_nonnegative(n);
  MultiPoly total;
  for (int k = 0; k <= n; ++k) {
    total += MultiPoly(Integer(binomial(n + k, 2L * k) * catalan(k))) *
             pow(a, static_cast<unsigned>(n - k)) * pow(b, static_cast<unsigned>(k));
  }
  return total;
}

MultiPoly schroder_poly_dp(int n) {
  require_nonnegative(n);
  const MultiPoly a = var(Var::a);
  const MultiPoly b = var(Var::b);
  std::vector<MultiPoly> s{MultiPoly(1)};
  for (int j = 1; j <= n; ++j) {
    MultiPoly returns;
    for (int k = 0; k <= j - 1; ++k) returns += s[k] * s[j - 1 - k];
    s.push_back(a * s[j - 1] + b * returns);
  }
  return s[n];
}

MultiPoly catalan_valley_poly(int n) { return catalan_valley_poly(n, var(Var::a), var(Var::b)); }

MultiPoly catalan_valley_poly(int n, const MultiPoly& a, const MultiPoly& b) {
  require_nonnegative(n);
  if (n == 0) return 1;
  MultiPoly total;
  for (int k = 0; k <= n - 1; ++k) {
    total += MultiPoly(narayana(n, k)) * pow(a, static_cast<unsigned>(n - k)) *
             pow(b, static_cast<unsigned>(k));
  }
  return total;
}

}  // namespace wpaths
