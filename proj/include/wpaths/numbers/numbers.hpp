#pragma once

#include <cstdint>
#include <string_view>

#include "wpaths/poly/multipoly.hpp"
#include "wpaths/poly/rational.hpp"

namespace wpaths {

enum class SequenceId : std::uint8_t { CatalanNum, MotzkinNum, SchroderNum, Narayana };

std::string_view sequence_name(SequenceId s);
SequenceId sequence_from_name(std::string_view name);

/// binom(n, k); zero when k < 0 or k > n. Requires n >= 0.
Integer binomial(long n, long k);

Integer catalan(int n);

/// binom(n,k) binom(n,k+1) / n for n >= 1; zero for k outside [0, n-1].
Integer narayana(int n, int k);

/// Sum over k of binom(n, 2k) C_k.
Integer motzkin(int n);

/// M_{n+1} = M_n + sum_{k=0}^{n-1} M_k M_{n-1-k}. Independent of motzkin().
Integer motzkin_recurrence(int n);

/// Sum over k of binom(n+k, 2k) C_k.
Integer schroder(int n);

/// S_n = S_{n-1} + sum_{k=0}^{n-1} S_k S_{n-1-k}. Independent of schroder().
Integer schroder_recurrence(int n);

/// Schroder paths of order n with exactly k E steps: binom(n+k, 2k) C_k.
Integer schroder_e_count(int n, int k);

/// Schroder paths of order n >= 1 with exactly k D steps:
/// binom(n,k) binom(2n-k, n-1) / n.
Integer schroder_diag_count(int n, int k);

// Weighted polynomial families. The two-argument overloads substitute the
// given polynomials for a and b directly in the closed form.

/// sum_k C_k binom(n, 2k) a^(n-2k) b^k.
MultiPoly motzkin_poly(int n);
MultiPoly motzkin_poly(int n, const MultiPoly& a, const MultiPoly& b);

/// First-return recurrence M_n = a M_{n-1} + b sum_{k=0}^{n-2} M_k M_{n-2-k}.
MultiPoly motzkin_poly_dp(int n);

/// sum_k binom(n+k, 2k) C_k a^(n-k) b^k.
MultiPoly schroder_poly(int n);
MultiPoly schroder_poly(int n, const MultiPoly& a, const MultiPoly& b);

/// First-return recurrence S_n = a S_{n-1} + b sum_{k=0}^{n-1} S_k S_{n-1-k}.
MultiPoly schroder_poly_dp(int n);

/// sum_k N(n,k) a^(n-k) b^k, with the empty path giving 1 at n = 0.
MultiPoly catalan_valley_poly(int n);
MultiPoly catalan_valley_poly(int n, const MultiPoly& a, const MultiPoly& b);

}  // namespace wpaths
