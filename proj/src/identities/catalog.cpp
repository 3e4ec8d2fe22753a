#include "wpaths/identities/catalog.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wpaths/error.hpp"
#include "wpaths/numbers/numbers.hpp"
#include "wpaths/paths/weight.hpp"

namespace wpaths {

std::string_view kind_name(IdentityKind k) {
  switch (k) {
    case IdentityKind::Polynomial: return "polynomial";
    case IdentityKind::Quad: return "quad";
    case IdentityKind::Congruence: return "congruence";
  }
  return "polynomial";
}

std::string_view expected_name(ExpectedStatus s) {
  return s == ExpectedStatus::Holds ? "holds" : "paper-erratum";
}

namespace {

using P = MultiPoly;

const P kA = P::variable(Var::a);
const P kB = P::variable(Var::b);
const P kX = P::variable(Var::x);
const P kAl = P::variable(Var::al);
const P kBe = P::variable(Var::be);
const P kA1 = P::variable(Var::a1);
const P kA2 = P::variable(Var::a2);

P pw(const P& p, long k) { return pow(p, static_cast<unsigned>(k)); }

Integer ipow(long base, long e) {
  Integer r;
  Integer b = base;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return r;
}

Integer sign(long e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

Sides poly(P lhs, P rhs) { return PolySides{std::move(lhs), std::move(rhs)}; }
Sides ints(const Integer& lhs, const Integer& rhs) { return PolySides{P(lhs), P(rhs)}; }

constexpr long kSqrt2 = 2;
constexpr long kEis = -3;

QuadExt qz(const Integer& z, long d) { return QuadExt::rational(Rational(z), d); }

// ---- polynomial builders ----

P narayana_x(int n) {
  P s;
  for (int k = 0; k < n; ++k) s += P(narayana(n, k)) * pw(kX, k);
  return s;
}

Sides coker_narayana(int n, bool with_xk) {
  P rhs;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    P t = P(Integer(binomial(n - 1, 2 * k) * catalan(k))) * pw(1 + kX, n - 1 - 2 * k);
    if (with_xk) t *= pw(kX, k);
    rhs += t;
  }
  return poly(narayana_x(n), rhs);
}

Sides coker_catalan(int n) {
  P lhs, rhs;
  for (int k = 0; k < n; ++k) {
    lhs += P(narayana(n, k)) * pw(kX, 2 * k) * pw(1 + kX, 2 * (n - 1 - k));
    rhs += P(Integer(binomial(n - 1, k) * catalan(k + 1))) * pw(kX, k) * pw(1 + kX, k);
  }
  return poly(lhs, rhs);
}

// sum_k binom(n-1,k) M_k(a,b) x^k (x^2 - a x + b)^(n-1-k)
P motzkin_transform(int n) {
  const P q = kX * kX - kA * kX + kB;
  P s;
  for (int k = 0; k < n; ++k) {
    s += P(binomial(n - 1, k)) * motzkin_poly(k) * pw(kX, k) * pw(q, n - 1 - k);
  }
  return s;
}

Sides cmcor(int n) {
  P lhs;
  for (int k = 0; k < n; ++k) {
    lhs += P(narayana(n, k)) * pw(kX, 2 * k) * pw(kB, n - 1 - k);
  }
  return poly(lhs, motzkin_transform(n));
}

// sum_{k=0}^n binom(n+k,2k) C_k x^(2k) q^(n-k)
P schroder_x2(int n, const P& q) {
  P s;
  for (int k = 0; k <= n; ++k) {
    s += P(Integer(binomial(n + k, 2 * k) * catalan(k))) * pw(kX, 2 * k) * pw(q, n - k);
  }
  return s;
}

Sides smcor(int n) { return poly(schroder_x2(n, kB - kX * kX), kB * motzkin_transform(n)); }

Sides smabx1(int n) {
  P lhs, rhs;
  for (int k = 0; k <= n; ++k) {
    lhs += P(Integer(binomial(n + k, 2 * k) * catalan(k))) * pw(kX, k) * pw(1 - kX, n - k);
  }
  for (int k = 0; 2 * k <= n - 1; ++k) {
    rhs += P(Integer(binomial(n - 1, 2 * k) * catalan(k))) * pw(kX, k) * pw(1 + kX, n - 1 - 2 * k);
  }
  return poly(lhs, rhs);
}

Sides smabx2(int n) {
  P rhs;
  for (int k = 0; k < n; ++k) {
    rhs += P(Integer(binomial(n - 1, k) * catalan(k + 1))) * pw(kX, k) * pw(1 + kX, k + 2);
  }
  return poly(schroder_x2(n, 1 + 2 * kX), rhs);
}

Sides schroder_motzkin_32(int n) {
  Integer rhs = 0;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    rhs += binomial(n - 1, 2 * k) * catalan(k) * ipow(2, k + 1) * ipow(3, n - 1 - 2 * k);
  }
  return ints(schroder(n), rhs);
}

Sides even_north_closed(int n) {
  P rhs;
  for (int k = 0; k < n; ++k) {
    rhs += P(narayana(n, k)) * pw(kA, n - k) * pw(kB, k);
  }
  return poly(set_weight(Family::Catalan, n, WeightScheme::EvenNorth), rhs);
}

Sides cm(int n) {
  return poly(catalan_valley_poly(n), kA * motzkin_poly(n - 1, kA + kB, kA * kB));
}

Sides sc(int n) {
  return poly(kB * schroder_poly(n), (kA + kB) * catalan_valley_poly(n, kB, kA + kB));
}

Sides sm(int n) {
  return poly(schroder_poly(n), (kA + kB) * motzkin_poly(n - 1, kA + 2 * kB, kA * kB + kB * kB));
}

Sides motzkin_shift(int n) {
  P rhs;
  for (int k = 0; k <= n; ++k) {
    rhs += P(binomial(n, k)) * motzkin_poly(k, kA1, kB) * pw(kA2, n - k);
  }
  return poly(motzkin_poly(n, kA1 + kA2, kB), rhs);
}

Sides motzkin_scale(int n) {
  return poly(motzkin_poly(n, kA * kX, kB * kX * kX), pw(kX, n) * motzkin_poly(n));
}

Sides motzkin_negate(int n) {
  return poly(motzkin_poly(n), P(sign(n)) * motzkin_poly(n, -kA, kB));
}

// (-1)^n sum_k (-c)^(n-k) binom(n,k) f(k)
template <class F>
Integer self_transform(int n, long c, F f) {
  Integer s = 0;
  for (int k = 0; k <= n; ++k) s += ipow(-c, n - k) * binomial(n, k) * f(k);
  return sign(n) * s;
}

Sides motzkin_self(int n) {
  return ints(motzkin(n), self_transform(n, 2, [](int k) { return motzkin(k); }));
}
Sides catalan_self(int n) {
  return ints(catalan(n + 1), self_transform(n, 4, [](int k) { return catalan(k + 1); }));
}
Sides schroder_self(int n) {
  return ints(schroder(n + 1), self_transform(n, 6, [](int k) { return schroder(k + 1); }));
}

// sum_k binom(n-1,k) f(k+1) x^k (x-u)^(n-1-k) (x-v)^(n-1-k), k from k0
template <class F>
P quadratic_transform(int n, int k0, F f, const P& u, const P& v) {
  const P q = (kX - u) * (kX - v);
  P s;
  for (int k = k0; k < n; ++k) {
    s += P(binomial(n - 1, k)) * f(k + 1) * pw(kX, k) * pw(q, n - 1 - k);
  }
  return s;
}

P ccab_lhs(int n) {
  return quadratic_transform(n, 0, [](int m) { return catalan_valley_poly(m); }, kA, kB);
}

Sides ccab(int n) {
  P rhs;
  for (int k = 0; k < n; ++k) {
    rhs += P(narayana(n, k)) * pw(kX, 2 * k) * pw(kA, n - k) * pw(kB, n - 1 - k);
  }
  return poly(ccab_lhs(n), rhs);
}

Sides ccab2(int n) { return poly(kB * ccab_lhs(n), schroder_x2(n, kA * kB - kX * kX)); }

Sides cmcorcat(int n) {
  P rhs;
  for (int k = 0; k < n; ++k) {
    rhs += P(Integer(binomial(n - 1, k) * catalan(k + 1))) * pw(kX, k) * pw(kX - 1, 2 * (n - 1 - k));
  }
  return poly(schroder_x2(n, 1 - kX * kX), rhs);
}

P scab_lhs(int n) {
  return quadratic_transform(n, 0, [](int m) { return schroder_poly(m); }, kB, kA + kB);
}

Sides scab(int n) {
  P rhs;
  for (int k = 0; k < n; ++k) {
    rhs += P(narayana(n, k)) * pw(kX, 2 * k) * pw(kA + kB, n - k) * pw(kB, n - 1 - k);
  }
  return poly(scab_lhs(n), rhs);
}

Sides scab2(int n) { return poly(kB * scab_lhs(n), schroder_x2(n, kA * kB + kB * kB - kX * kX)); }

P narayana_x2_pow2(int n) {
  P s;
  for (int k = 0; k < n; ++k) s += P(Integer(narayana(n, k) * ipow(2, n - k))) * pw(kX, 2 * k);
  return s;
}

Sides cmcorsch(int n, int k0) {
  P lhs = quadratic_transform(n, k0, [](int m) { return P(schroder(m)); }, P(1), P(2));
  return poly(lhs, narayana_x2_pow2(n));
}

Sides cmcorsch2(int n) { return poly(narayana_x2_pow2(n), schroder_x2(n, 2 - kX * kX)); }

Sides mc_alphabeta(int n) {
  P lhs = substitute(motzkin_poly(n, kAl, kBe), {{Var::al, kA + kB}, {Var::be, kA * kB}});
  P rhs;
  for (int k = 0; k <= n; ++k) {
    rhs += P(narayana(n + 1, k)) * pw(kA, n - k) * pw(kB, k);
  }
  return poly(lhs, rhs);
}

Sides ms_alphabeta(int n, bool shifted) {
  P lhs = substitute(kBe * motzkin_poly(n, kAl, kBe),
                     {{Var::al, kA + 2 * kB}, {Var::be, kA * kB + kB * kB}});
  // Sum runs to k = n+1; with the shifted index the k = n+1 term vanishes.
  const int m = shifted ? n : n + 1;
  P rhs;
  for (int k = 0; k <= m; ++k) {
    rhs += P(Integer(catalan(k) * binomial(m + k, 2 * k))) * pw(kB, k + 1) * pw(kA, m - k);
  }
  return poly(lhs, rhs);
}

// ---- quadratic-field builders ----

Sides scsqrt2(int n, int k0) {
  const QuadExt r = QuadExt::root(kSqrt2);
  const QuadExt t = pow(r - qz(1, kSqrt2), 2);
  QuadExt sum = qz(0, kSqrt2);
  for (int k = k0; k < n; ++k) {
    sum += pow(t, n - 1 - k) * Rational(Integer(sign(k) * binomial(n - 1, k) * schroder(k + 1)));
  }
  QuadExt rhs = pow(-r, n - 1) * Rational(make_rational(1, ipow(2, n))) * sum;
  return QuadSides{qz(catalan(n), kSqrt2), rhs};
}

Sides scsqrt2b(int n) {
  const QuadExt r = QuadExt::root(kSqrt2);
  const QuadExt t = pow(r - qz(1, kSqrt2), 2);
  QuadExt rhs = qz(0, kSqrt2);
  for (int k = 0; k < n; ++k) {
    rhs += pow(r, k) * pow(t, n - 1 - k) * Rational(Integer(2 * binomial(n - 1, k) * catalan(k + 1)));
  }
  return QuadSides{qz(schroder(n), kSqrt2), rhs};
}

Sides mn_eisenstein_c(int n) {
  const QuadExt w(make_rational(1, 2), make_rational(1, 2), kEis);
  QuadExt rhs = qz(0, kEis);
  for (int k = 0; k <= n + 1; ++k) {
    rhs += pow(w, n - 2 * k) * Rational(narayana(n + 1, k));
  }
  return QuadSides{qz(motzkin(n), kEis), rhs};
}

Sides mn_eisenstein_s(int n) {
  const QuadExt w(make_rational(1, 2), make_rational(1, 2), kEis);
  const QuadExt u(make_rational(-3, 2), make_rational(1, 2), kEis);
  QuadExt sum = qz(0, kEis);
  for (int k = 0; k <= n + 1; ++k) {
    sum += pow(u, n + 1 - k) * Rational(Integer(binomial(n + 1 + k, 2 * k) * catalan(k)));
  }
  return QuadSides{qz(motzkin(n), kEis), pow(w.conjugate(), n + 2) * sum};
}

Sides mcnk1(int n) {
  Integer rhs = 0;
  for (int k = 0; k <= n; ++k) rhs += sign(n - k) * binomial(n, k) * catalan(k + 1);
  return ints(motzkin(n), rhs);
}

Sides mcnk2(int n) {
  Integer rhs = 0;
  for (int k = 0; k <= n; ++k) rhs += sign(k) * ipow(3, n - k) * binomial(n, k) * catalan(k + 1);
  return ints(motzkin(n), rhs);
}

// sqrt(2)^-(n+2) sum_k s^k (c + e sqrt 2)^(n-k) binom(n,k) S_{k+1}, s = +-1
Sides msnk(int n, long c, long e, bool alternate) {
  const QuadExt r = QuadExt::root(kSqrt2);
  const QuadExt base(c, e, kSqrt2);
  QuadExt sum = qz(0, kSqrt2);
  for (int k = 0; k <= n; ++k) {
    Integer coef = binomial(n, k) * schroder(k + 1);
    if (alternate) coef *= sign(k);
    sum += pow(base, n - k) * Rational(coef);
  }
  return QuadSides{qz(motzkin(n), kSqrt2), pow(r, -(n + 2)) * sum};
}

// sum_k s^k 2 sqrt(2)^k (c + e sqrt 2)^(n-1-k) binom(n-1,k) M_k
Sides smnk(int n, long c, long e, bool alternate) {
  const QuadExt r = QuadExt::root(kSqrt2);
  const QuadExt base(c, e, kSqrt2);
  QuadExt rhs = qz(0, kSqrt2);
  for (int k = 0; k < n; ++k) {
    Integer coef = 2 * binomial(n - 1, k) * motzkin(k);
    if (alternate) coef *= sign(k);
    rhs += pow(r, k) * pow(base, n - 1 - k) * Rational(coef);
  }
  return QuadSides{qz(schroder(n), kSqrt2), rhs};
}

// ---- congruences ----

Sides cong_3m(int n) {
  CongruenceSides out;
  for (int m = 1; m <= 5; ++m) {
    Integer s = 0;
    for (int k = 0; k <= std::min(m - 1, n); ++k) {
      s += ipow(-3, k) * binomial(n, k) * catalan(n - k + 1);
    }
    out.checks.push_back({motzkin(n), sign(n) * s, ipow(3, m)});
  }
  return out;
}

Sides cong_3(int n) {
  return CongruenceSides{{{motzkin(n), sign(n) * catalan(n + 1), Integer(3)}}};
}

Sides cong_7(int n, bool corrected) {
  Integer rhs = ipow(2, n + 2) * schroder(n + 1);
  if (corrected) rhs *= sign(n);
  return CongruenceSides{{{motzkin(n), rhs, Integer(7)}}};
}

IdentityEntry poly_entry(std::string id, std::string description, int min_order, int max_order,
                         std::function<Sides(int)> build, int limit = 1000) {
  IdentityEntry e;
  e.id = std::move(id);
  e.description = std::move(description);
  e.kind = IdentityKind::Polynomial;
  e.min_order = min_order;
  e.default_max_order = max_order;
  e.order_limit = limit;
  e.build = std::move(build);
  return e;
}

IdentityEntry quad_entry(std::string id, std::string description, long d, int min_order,
                         std::function<Sides(int)> build) {
  IdentityEntry e = poly_entry(std::move(id), std::move(description), min_order, 20, std::move(build));
  e.kind = IdentityKind::Quad;
  e.discriminant = d;
  return e;
}

IdentityEntry cong_entry(std::string id, std::string description, int max_order,
                         std::function<Sides(int)> build) {
  IdentityEntry e = poly_entry(std::move(id), std::move(description), 0, max_order, std::move(build));
  e.kind = IdentityKind::Congruence;
  return e;
}

std::vector<IdentityEntry> make_catalog() {
  const EnumerationCaps caps;
  std::vector<IdentityEntry> c;
  c.push_back(poly_entry("touchard", "C_n = sum_k binom(n-1,2k) C_k 2^(n-1-2k)", 1, 30, [](int n) {
    Integer rhs = 0;
    for (int k = 0; 2 * k <= n - 1; ++k) rhs += binomial(n - 1, 2 * k) * catalan(k) * ipow(2, n - 1 - 2 * k);
    return ints(catalan(n), rhs);
  }));
  c.push_back(poly_entry("coker_narayana",
                         "sum_k N(n,k) x^k = sum_k binom(n-1,2k) C_k x^k (1+x)^(n-1-2k)", 1, 12,
                         [](int n) { return coker_narayana(n, true); }));
  c.push_back(poly_entry("coker_catalan",
                         "sum_k N(n,k) x^2k (1+x)^2(n-1-k) = sum_k binom(n-1,k) C_(k+1) x^k (1+x)^k", 1,
                         12, coker_catalan));
  c.push_back(poly_entry("motzkin_ab_closed", "Motzkin paths weighted D->a, H->b sum to M_n(a,b)", 0, 10,
                         [](int n) {
                           return poly(set_weight(Family::Motzkin, n, WeightScheme::MotzkinAB), motzkin_poly(n));
                         },
                         caps.motzkin));
  c.push_back(poly_entry("motzkin_01", "M_n(0,1) = C_(n/2) for even n, 0 for odd n", 0, 40, [](int n) {
    Integer lhs = motzkin_poly(n, P(0), P(1)).constant_value().get_num();
    return ints(lhs, n % 2 == 0 ? catalan(n / 2) : Integer(0));
  }));
  c.push_back(poly_entry("motzkin_21", "M_n(2,1) = C_(n+1)", 0, 40, [](int n) {
    return ints(motzkin_poly(n, P(2), P(1)).constant_value().get_num(), catalan(n + 1));
  }));
  c.push_back(poly_entry("cmcor",
                         "sum_k N(n,k) x^2k b^(n-1-k) = sum_k binom(n-1,k) M_k(a,b) x^k (x^2-ax+b)^(n-1-k)",
                         1, 12, cmcor));
  c.push_back(poly_entry("smcor",
                         "sum_k binom(n+k,2k) C_k x^2k (b-x^2)^(n-k) = "
                         "b sum_k binom(n-1,k) M_k(a,b) x^k (x^2-ax+b)^(n-1-k)",
                         1, 12, smcor));
  c.push_back(poly_entry("smabx1",
                         "sum_k binom(n+k,2k) C_k x^k (1-x)^(n-k) = sum_k binom(n-1,2k) C_k x^k (1+x)^(n-1-2k)",
                         1, 12, smabx1));
  c.push_back(poly_entry("smabx2",
                         "sum_k binom(n+k,2k) C_k x^2k (1+2x)^(n-k) = sum_k binom(n-1,k) C_(k+1) x^k (1+x)^(k+2)",
                         1, 12, smabx2));
  c.push_back(poly_entry("schroder_motzkin_32", "S_n = sum_k binom(n-1,2k) C_k 2^(k+1) 3^(n-1-2k)", 1, 30,
                         schroder_motzkin_32));
  c.push_back(poly_entry("schroder_ab_closed", "Schroder paths weighted D->a, E->b sum to S_n(a,b)", 0, 9,
                         [](int n) {
                           return poly(set_weight(Family::Schroder, n, WeightScheme::SchroderAB), schroder_poly(n));
                         },
                         caps.schroder));
  c.push_back(poly_entry("catalan_valley_closed", "Catalan paths weighted by valleys sum to C_n(a,b)", 1, 10,
                         [](int n) {
                           return poly(set_weight(Family::Catalan, n, WeightScheme::Valley), catalan_valley_poly(n));
                         },
                         caps.catalan));
  c.push_back(poly_entry("even_north_closed",
                         "Catalan paths weighted at even positions sum to sum_k N(n,k) a^(n-k) b^k", 1, 10,
                         even_north_closed, caps.catalan));
  c.push_back(poly_entry("cm", "C_n(a,b) = a M_(n-1)(a+b, ab)", 1, 12, cm));
  c.push_back(poly_entry("sc", "b S_n(a,b) = (a+b) C_n(b, a+b)", 1, 12, sc));
  c.push_back(poly_entry("sm", "S_n(a,b) = (a+b) M_(n-1)(a+2b, ab+b^2)", 1, 12, sm));
  c.push_back(poly_entry("motzkin_shift", "M_n(a1+a2, b) = sum_k binom(n,k) M_k(a1,b) a2^(n-k)", 0, 12,
                         motzkin_shift));
  c.push_back(poly_entry("motzkin_scale", "M_n(ax, bx^2) = x^n M_n(a,b)", 0, 12, motzkin_scale));
  c.push_back(poly_entry("motzkin_negate", "M_n(a,b) = (-1)^n M_n(-a,b)", 0, 12, motzkin_negate));
  c.push_back(poly_entry("motzkin_self", "M_n = (-1)^n sum_k (-2)^(n-k) binom(n,k) M_k", 0, 40, motzkin_self));
  c.push_back(poly_entry("catalan_self", "C_(n+1) = (-1)^n sum_k (-4)^(n-k) binom(n,k) C_(k+1)", 0, 40,
                         catalan_self));
  c.push_back(poly_entry("schroder_self", "S_(n+1) = (-1)^n sum_k (-6)^(n-k) binom(n,k) S_(k+1)", 0, 40,
                         schroder_self));
  c.push_back(poly_entry("ccab",
                         "sum_k binom(n-1,k) C_(k+1)(a,b) x^k ((x-a)(x-b))^(n-1-k) = "
                         "sum_k N(n,k) x^2k a^(n-k) b^(n-1-k)",
                         1, 12, ccab));
  c.push_back(poly_entry("ccab2",
                         "b sum_k binom(n-1,k) C_(k+1)(a,b) x^k ((x-a)(x-b))^(n-1-k) = "
                         "sum_k binom(n+k,2k) C_k x^2k (ab-x^2)^(n-k)",
                         1, 12, ccab2));
  c.push_back(poly_entry("cmcorcat",
                         "sum_k binom(n+k,2k) C_k x^2k (1-x^2)^(n-k) = "
                         "sum_k binom(n-1,k) C_(k+1) x^k (x-1)^2(n-1-k)",
                         1, 12, cmcorcat));
  c.push_back(poly_entry("scab",
                         "sum_k binom(n-1,k) S_(k+1)(a,b) x^k ((x-b)(x-a-b))^(n-1-k) = "
                         "sum_k N(n,k) x^2k (a+b)^(n-k) b^(n-1-k)",
                         1, 12, scab));
  c.push_back(poly_entry("scab2",
                         "b sum_k binom(n-1,k) S_(k+1)(a,b) x^k ((x-b)(x-a-b))^(n-1-k) = "
                         "sum_k binom(n+k,2k) C_k x^2k (ab+b^2-x^2)^(n-k)",
                         1, 12, scab2));
  c.push_back(poly_entry("cmcorsch",
                         "sum_(k>=0) binom(n-1,k) S_(k+1) x^k ((x-1)(x-2))^(n-1-k) = sum_k N(n,k) x^2k 2^(n-k)",
                         1, 12, [](int n) { return cmcorsch(n, 0); }));
  c.push_back(poly_entry("cmcorsch2",
                         "sum_k N(n,k) x^2k 2^(n-k) = sum_k binom(n+k,2k) C_k x^2k (2-x^2)^(n-k)", 1, 12,
                         cmcorsch2));
  c.push_back(quad_entry("scsqrt2",
                         "C_n = (-sqrt2)^(n-1) / 2^n sum_(k>=0) (-1)^k binom(n-1,k) (sqrt2-1)^2(n-1-k) S_(k+1)",
                         kSqrt2, 1, [](int n) { return scsqrt2(n, 0); }));
  c.push_back(quad_entry("scsqrt2b", "S_n = sum_k 2 sqrt2^k binom(n-1,k) (sqrt2-1)^2(n-1-k) C_(k+1)", kSqrt2, 1,
                         scsqrt2b));
  c.push_back(poly_entry("mc_alphabeta",
                         "M_n(al,be) at al=a+b, be=ab equals sum_k N(n+1,k) a^(n-k) b^k", 0, 12, mc_alphabeta));
  c.push_back(poly_entry("ms_alphabeta",
                         "be M_n(al,be) at al=a+2b, be=ab+b^2 equals "
                         "sum_(k<=n+1) C_k binom(n+1+k,2k) b^(k+1) a^(n+1-k)",
                         0, 12, [](int n) { return ms_alphabeta(n, false); }));
  c.push_back(quad_entry("mn_eisenstein_c", "M_n = sum_k w^(n-2k) N(n+1,k), w = (1+sqrt-3)/2", kEis, 0,
                         mn_eisenstein_c));
  c.push_back(quad_entry("mn_eisenstein_s",
                         "M_n = conj(w)^(n+2) sum_k ((-3+sqrt-3)/2)^(n+1-k) binom(n+1+k,2k) C_k", kEis, 0,
                         mn_eisenstein_s));
  c.push_back(poly_entry("mcnk1", "M_n = sum_k (-1)^(n-k) binom(n,k) C_(k+1)", 0, 40, mcnk1));
  c.push_back(poly_entry("mcnk2", "M_n = sum_k (-1)^k 3^(n-k) binom(n,k) C_(k+1)", 0, 40, mcnk2));
  c.push_back(quad_entry("msnk1", "M_n = sqrt2^-(n+2) sum_k (sqrt2-3)^(n-k) binom(n,k) S_(k+1)", kSqrt2, 0,
                         [](int n) { return msnk(n, -3, 1, false); }));
  c.push_back(quad_entry("msnk2", "M_n = sqrt2^-(n+2) sum_k (-1)^k (3+sqrt2)^(n-k) binom(n,k) S_(k+1)", kSqrt2,
                         0, [](int n) { return msnk(n, 3, 1, true); }));
  c.push_back(quad_entry("smnk1", "S_n = sum_k 2 sqrt2^k (3-sqrt2)^(n-1-k) binom(n-1,k) M_k", kSqrt2, 1,
                         [](int n) { return smnk(n, 3, -1, false); }));
  c.push_back(quad_entry("smnk2", "S_n = sum_k (-1)^k 2 sqrt2^k (3+sqrt2)^(n-1-k) binom(n-1,k) M_k", kSqrt2, 1,
                         [](int n) { return smnk(n, 3, 1, true); }));
  c.push_back(cong_entry("cong_3m",
                         "M_n = (-1)^n sum_(k<m) (-3)^k binom(n,k) C_(n-k+1) mod 3^m, m = 1..5", 100, cong_3m));
  c.push_back(cong_entry("cong_3", "M_n = (-1)^n C_(n+1) mod 3", 200, cong_3));
  {
    IdentityEntry e = cong_entry("cong_7_paper", "M_n = 2^(n+2) S_(n+1) mod 7 (sign missing)", 200,
                                 [](int n) { return cong_7(n, false); });
    e.expected = ExpectedStatus::PaperErratum;
    e.corrected_id = "cong_7_corrected";
    e.counterexample_order = 1;
    c.push_back(std::move(e));
  }
  c.push_back(cong_entry("cong_7_corrected", "M_n = (-1)^n 2^(n+2) S_(n+1) mod 7", 200,
                         [](int n) { return cong_7(n, true); }));
  return c;
}

}  // namespace

const std::vector<IdentityEntry>& catalog() {
  static const std::vector<IdentityEntry> entries = make_catalog();
  return entries;
}

const IdentityEntry& find_identity(std::string_view id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw UsageError("unknown identity '" + std::string(id) + "'");
}

Sides build_sides(std::string_view id, int n) {
  const IdentityEntry& e = find_identity(id);
  if (n < e.min_order || n > e.order_limit) {
    throw UsageError("order " + std::to_string(n) + " outside the domain of '" + e.id + "' [" +
                     std::to_string(e.min_order) + ", " + std::to_string(e.order_limit) + "]");
  }
  return e.build(n);
}

PolySides build_sides_by_enumeration(std::string_view id, int n) {
  if (n < 1) throw UsageError("order must be at least 1");
  if (id == "cm") {
    return {set_weight(Family::Catalan, n, WeightScheme::Valley),
            kA * set_weight(Family::Motzkin, n - 1, WeightScheme::MotzkinLabeled)};
  }
  if (id == "sc") {
    P valley = set_weight(Family::Catalan, n, WeightScheme::Valley);
    return {kB * set_weight(Family::Schroder, n, WeightScheme::SchroderAB),
            (kA + kB) * substitute(valley, {{Var::a, kB}, {Var::b, kA + kB}})};
  }
  if (id == "sm") {
    P motz = set_weight(Family::Motzkin, n - 1, WeightScheme::MotzkinAB);
    return {set_weight(Family::Catalan, n, WeightScheme::PeakLabeled),
            (kA + kB) * substitute(motz, {{Var::a, kA + 2 * kB}, {Var::b, kA * kB + kB * kB}})};
  }
  throw UsageError("no enumeration form for identity '" + std::string(id) + "'");
}

Sides uncorrected_sides(UncorrectedForm form, int n) {
  switch (form) {
    case UncorrectedForm::CokerNarayanaWithoutXk: return coker_narayana(n, false);
    case UncorrectedForm::CmcorschFromK1: return cmcorsch(n, 1);
    case UncorrectedForm::Scsqrt2FromK1: return scsqrt2(n, 1);
    case UncorrectedForm::MsAlphaBetaIndexShifted: return ms_alphabeta(n, true);
  }
  throw UsageError("unknown form");
}

}  // namespace wpaths
