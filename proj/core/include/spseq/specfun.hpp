#pragma once

#include <cstdint>

#include "spseq/sieve.hpp"

namespace spseq {

// zeta(2) = pi^2/6 to double precision.
inline constexpr double kZeta2 = 1.6449340668482264;
// Exact difference of the two doubles above; equals zeta(2) - 1 to the ulp.
inline constexpr double kZeta2Minus1 = kZeta2 - 1.0;
// Euler-Mascheroni constant, 0.57721566490153286060651209008240 (20 digits kept).
inline constexpr double kEulerGamma = 0.57721566490153286061;
// Meissel-Mertens constant, lim (sum_{p<=x} 1/p - ln ln x).
inline constexpr double kMeisselMertens = 0.26149721284764278;

double zeta2();

// Hurwitz zeta(2, q) = sum_{n>=0} 1/(n+q)^2 for q in (0, 1].
//
// Direct compensated summation of N terms plus the Euler-Maclaurin tail at
// x = N + q: 1/x + 1/(2x^2) + 1/(6x^3), whose truncation error is below
// 1/(30 x^5). N is chosen from abs_tol. Throws std::domain_error when q is
// outside (0, 1].
double hurwitz_zeta2(double q, double abs_tol = 1e-10);

// gamma + sum_{p <= prime_limit} (ln(1 - 1/p) + 1/p). Every term past the
// cutoff is negative and O(1/p^2), so the value decreases toward the constant
// as prime_limit grows; the tail at 10^6 is already below 1e-7.
// Requires 1000 <= prime_limit <= sieve.limit().
double meissel_mertens(std::uint64_t prime_limit, const PrimeSieve& sieve);

}  // namespace spseq
