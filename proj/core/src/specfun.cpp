#include "spseq/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "spseq/kahan.hpp"

namespace spseq {

double zeta2() { return kZeta2; }

double hurwitz_zeta2(double q, double abs_tol) {
    if (!(q > 0.0) || q > 1.0) {
        throw std::domain_error("hurwitz_zeta2: q must be in (0, 1]");
    }
    if (!(abs_tol > 0.0)) {
        throw std::invalid_argument("hurwitz_zeta2: abs_tol must be positive");
    }

    // With the tail truncated after the 1/(6x^3) correction the remainder is
    // below 1/(30 x^5); pick N so that bound sits under abs_tol.
    const double n_real = 1.25 * std::pow(1.0 / (30.0 * abs_tol), 0.2);
    const std::size_t n_terms = std::max<std::size_t>(16, static_cast<std::size_t>(n_real) + 1);

    KahanSum sum;
    for (std::size_t n = n_terms; n-- > 0;) {  // ascending term magnitude
        const double d = static_cast<double>(n) + q;
        sum.add(1.0 / (d * d));
    }
    const double x = static_cast<double>(n_terms) + q;
    sum.add(1.0 / x);
    sum.add(1.0 / (2.0 * x * x));
    sum.add(1.0 / (6.0 * x * x * x));
    return sum.value();
}

double meissel_mertens(std::uint64_t prime_limit, const PrimeSieve& sieve) {
    if (prime_limit < 1000) {
        throw std::invalid_argument("meissel_mertens: prime_limit must be >= 1000");
    }
    if (prime_limit > sieve.limit()) {
        throw std::out_of_range("meissel_mertens: prime_limit exceeds sieve limit");
    }
    KahanSum sum;
    for (std::uint64_t n = 2; n <= prime_limit; ++n) {
        if (!sieve.is_prime(n)) continue;
        const double p = static_cast<double>(n);
        // log1p keeps ln(1 - 1/p) + 1/p accurate even when the two nearly cancel.
        sum.add(std::log1p(-1.0 / p) + 1.0 / p);
    }
    return kEulerGamma + sum.value();
}

}  // namespace spseq
