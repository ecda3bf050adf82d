#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "spseq/sieve.hpp"

namespace spseq {

// Empirical square-prime count against the main-term estimate.
struct AsymptoticReport {
    std::uint64_t checkpoint;
    double empirical;
    double estimate;
    double ratio;  // empirical / estimate
};

// Closed subinterval [alpha, beta] of [0, 1].
class Interval {
public:
    // Throws std::invalid_argument unless 0 <= alpha <= beta <= 1.
    Interval(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

private:
    double alpha_;
    double beta_;
};

// Square-prime values <= limit bucketed by last decimal digit.
struct DigitCensus {
    std::uint64_t limit;
    std::array<std::uint64_t, 10> counts;
};

// |{m <= n : is_sp(m)}|, counted inclusively. Requires n <= sieve.limit().
std::uint64_t sp_count(std::uint64_t n, const PrimeSieve& sieve);

// Main-term estimate (zeta(2) - 1) * n / ln n, natural log.
// Requires n >= 3 (std::domain_error below).
double sp_count_estimate(double n);

// sp_count vs sp_count_estimate at one checkpoint. Requires checkpoint >= 3.
AsymptoticReport asymptotic_report(std::uint64_t checkpoint, const PrimeSieve& sieve);

// Requires limit <= sieve.limit() (std::out_of_range otherwise).
DigitCensus digit_census(std::uint64_t limit, const PrimeSieve& sieve);

// The constant (1/400)(zeta(2,1/10) + zeta(2,9/10) + zeta(2,3/10) + zeta(2,7/10) - 4).
double digit1_density_constant();

// Density estimate for square-prime values with last decimal digit 1:
// digit1_density_constant() * n / ln n. Requires n >= 3.
double digit1_estimate(double n);

// The scaled family U_j = {sp/j : sp <= j, sp square-prime}, ascending.
// Requires 8 <= j <= sieve.limit().
std::vector<double> scaled_sp_points(std::uint64_t j, const PrimeSieve& sieve);

// Fraction of the points inside the closed interval; endpoints included,
// so a point sitting exactly on a shared endpoint counts on both sides.
// Throws std::domain_error on an empty point set.
double interval_fraction_of(std::span<const double> points, const Interval& interval);

// interval_fraction_of over scaled_sp_points(j).
double interval_fraction(std::uint64_t j, const Interval& interval, const PrimeSieve& sieve);

// Exact star discrepancy of a finite point set in [0, 1] via the
// sorted-points formula: max_i max(i/N - x_i, x_i - (i-1)/N).
// Throws std::domain_error on an empty set.
double star_discrepancy_of(std::vector<double> points);

// star_discrepancy_of over scaled_sp_points(j).
double star_discrepancy(std::uint64_t j, const PrimeSieve& sieve);

}  // namespace spseq
