#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spseq/sp_core.hpp"

namespace spseq {

// One row of the partial-sum comparison table.
struct TableRow {
    std::uint64_t X;
    double actual;    // sp_harmonic(X)
    double estimate;  // (zeta(2)-1) * ln ln X, main term only
};

struct HarmonicEstimate {
    double k;
    double main;
    bool with_M;
    double M;  // Meissel-Mertens value used when with_M is set
};

inline constexpr std::array<std::uint64_t, 5> kDefaultTableCheckpoints{
    100, 1000, 10000, 100000, 250000};

// Sum of 1/sp over square-prime values <= k, compensated summation in
// ascending order. Requires k <= sieve.limit() (std::out_of_range otherwise).
double sp_harmonic(std::uint64_t k, const PrimeSieve& sieve);

// The same sum arranged by root: sum over a in [2, sqrt(k/2)] of
// (1/a^2) * sum_{p <= k/a^2} 1/p. The pair (p, a) <-> value bijection makes
// this agree with sp_harmonic up to summation-order rounding.
double sp_harmonic_double_sum(std::uint64_t k, const PrimeSieve& sieve);

// Diagnostic companion to sp_harmonic_double_sum with the 1/a^2 weight
// dropped: sum over a of sum_{p <= k/a^2} 1/p. Not a partial sum of the
// square-prime harmonic series; exposed for inspection only.
double prime_reciprocal_double_sum(std::uint64_t k, const PrimeSieve& sieve);

// Main-term estimate (zeta(2)-1) * (ln ln k + M when include_M).
// Requires k > e (std::domain_error otherwise).
HarmonicEstimate sp_harmonic_estimate(double k, bool include_M);

// One TableRow per checkpoint, in input order. Checkpoints must be >= 3
// and <= sieve.limit().
std::vector<TableRow> harmonic_table(std::span<const std::uint64_t> checkpoints,
                                     const PrimeSieve& sieve);

// Sum of (1/lo + 1/hi) over the given pairs. A value that belongs to two
// pairs contributes once per pair, i.e. twice in total.
double twin_harmonic_over(std::span<const TwinPair> pairs);

// twin_harmonic_over(find_twins(limit, sieve)).
double twin_harmonic(std::uint64_t limit, const PrimeSieve& sieve);

}  // namespace spseq
