#include "spseq/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "spseq/intmath.hpp"
#include "spseq/kahan.hpp"
#include "spseq/specfun.hpp"

namespace spseq {

double sp_harmonic(std::uint64_t k, const PrimeSieve& sieve) {
    if (k > sieve.limit()) {
        throw std::out_of_range("sp_harmonic: k exceeds sieve limit");
    }
    KahanSum sum;
    for (const SpNumber& sp : enumerate_sp(k, sieve)) {
        sum.add(1.0 / static_cast<double>(sp.value));
    }
    return sum.value();
}

double sp_harmonic_double_sum(std::uint64_t k, const PrimeSieve& sieve) {
    if (k > sieve.limit()) {
        throw std::out_of_range("sp_harmonic_double_sum: k exceeds sieve limit");
    }
    KahanSum outer;
    if (k < 8) return 0.0;
    const std::uint64_t a_max = isqrt(k / 2);
    const auto primes = sieve.primes_up_to(k / 4);
    for (std::uint64_t a = 2; a <= a_max; ++a) {
        const std::uint64_t p_max = k / (a * a);
        KahanSum inner;
        for (std::uint64_t p : primes) {
            if (p > p_max) break;
            inner.add(1.0 / static_cast<double>(p));
        }
        outer.add(inner.value() / static_cast<double>(a * a));
    }
    return outer.value();
}

double prime_reciprocal_double_sum(std::uint64_t k, const PrimeSieve& sieve) {
    if (k > sieve.limit()) {
        throw std::out_of_range("prime_reciprocal_double_sum: k exceeds sieve limit");
    }
    KahanSum outer;
    if (k < 8) return 0.0;
    const std::uint64_t a_max = isqrt(k / 2);
    const auto primes = sieve.primes_up_to(k / 4);
    for (std::uint64_t a = 2; a <= a_max; ++a) {
        const std::uint64_t p_max = k / (a * a);
        KahanSum inner;
        for (std::uint64_t p : primes) {
            if (p > p_max) break;
            inner.add(1.0 / static_cast<double>(p));
        }
        outer.add(inner.value());
    }
    return outer.value();
}

HarmonicEstimate sp_harmonic_estimate(double k, bool include_M) {
    if (!(k > std::numbers::e)) {
        throw std::domain_error("sp_harmonic_estimate: k must exceed e");
    }
    const double loglog = std::log(std::log(k));
    const double main = kZeta2Minus1 * (include_M ? loglog + kMeisselMertens : loglog);
    return HarmonicEstimate{k, main, include_M, kMeisselMertens};
}

std::vector<TableRow> harmonic_table(std::span<const std::uint64_t> checkpoints,
                                     const PrimeSieve& sieve) {
    std::vector<TableRow> rows;
    rows.reserve(checkpoints.size());
    for (std::uint64_t X : checkpoints) {
        const double actual = sp_harmonic(X, sieve);
        const double estimate = sp_harmonic_estimate(static_cast<double>(X), false).main;
        rows.push_back(TableRow{X, actual, estimate});
    }
    return rows;
}

double twin_harmonic_over(std::span<const TwinPair> pairs) {
    KahanSum sum;
    for (const TwinPair& twin : pairs) {
        sum.add(1.0 / static_cast<double>(twin.lo.value));
        sum.add(1.0 / static_cast<double>(twin.hi.value));
    }
    return sum.value();
}

double twin_harmonic(std::uint64_t limit, const PrimeSieve& sieve) {
    if (limit > sieve.limit()) {
        throw std::out_of_range("twin_harmonic: limit exceeds sieve limit");
    }
    const auto twins = find_twins(limit, sieve);
    return twin_harmonic_over(twins);
}

}  // namespace spseq
