#include "spseq/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spseq/sp_core.hpp"
#include "spseq/specfun.hpp"

namespace spseq {

Interval::Interval(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!(alpha >= 0.0 && alpha <= beta && beta <= 1.0)) {
        throw std::invalid_argument("Interval: need 0 <= alpha <= beta <= 1");
    }
}

std::uint64_t sp_count(std::uint64_t n, const PrimeSieve& sieve) {
    if (n > sieve.limit()) {
        throw std::out_of_range("sp_count: n exceeds sieve limit");
    }
    std::uint64_t count = 0;
    for (std::uint64_t m = 8; m <= n; ++m) {
        if (is_sp(m, sieve)) ++count;
    }
    return count;
}

double sp_count_estimate(double n) {
    if (!(n >= 3.0)) {
        throw std::domain_error("sp_count_estimate: n must be >= 3");
    }
    return kZeta2Minus1 * n / std::log(n);
}

AsymptoticReport asymptotic_report(std::uint64_t checkpoint, const PrimeSieve& sieve) {
    const double empirical = static_cast<double>(sp_count(checkpoint, sieve));
    const double estimate = sp_count_estimate(static_cast<double>(checkpoint));
    return AsymptoticReport{checkpoint, empirical, estimate, empirical / estimate};
}

DigitCensus digit_census(std::uint64_t limit, const PrimeSieve& sieve) {
    if (limit > sieve.limit()) {
        throw std::out_of_range("digit_census: limit exceeds sieve limit");
    }
    DigitCensus census{limit, {}};
    for (std::uint64_t m = 8; m <= limit; ++m) {
        if (is_sp(m, sieve)) ++census.counts[m % 10];
    }
    return census;
}

double digit1_density_constant() {
    return (hurwitz_zeta2(0.1) + hurwitz_zeta2(0.9) + hurwitz_zeta2(0.3) +
            hurwitz_zeta2(0.7) - 4.0) /
           400.0;
}

double digit1_estimate(double n) {
    if (!(n >= 3.0)) {
        throw std::domain_error("digit1_estimate: n must be >= 3");
    }
    return digit1_density_constant() * n / std::log(n);
}

std::vector<double> scaled_sp_points(std::uint64_t j, const PrimeSieve& sieve) {
    if (j < 8) {
        throw std::invalid_argument("scaled_sp_points: need j >= 8 for a nonempty family");
    }
    if (j > sieve.limit()) {
        throw std::out_of_range("scaled_sp_points: j exceeds sieve limit");
    }
    const auto values = enumerate_sp(j, sieve);
    std::vector<double> points;
    points.reserve(values.size());
    const double denom = static_cast<double>(j);
    for (const SpNumber& sp : values) {
        points.push_back(static_cast<double>(sp.value) / denom);
    }
    return points;
}

double interval_fraction_of(std::span<const double> points, const Interval& interval) {
    if (points.empty()) {
        throw std::domain_error("interval_fraction_of: empty point set");
    }
    std::size_t inside = 0;
    for (double x : points) {
        if (x >= interval.alpha() && x <= interval.beta()) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(points.size());
}

double interval_fraction(std::uint64_t j, const Interval& interval, const PrimeSieve& sieve) {
    const auto points = scaled_sp_points(j, sieve);
    return interval_fraction_of(points, interval);
}

double star_discrepancy_of(std::vector<double> points) {
    if (points.empty()) {
        throw std::domain_error("star_discrepancy_of: empty point set");
    }
    for (double x : points) {
        if (!(x >= 0.0 && x <= 1.0)) {
            throw std::invalid_argument("star_discrepancy_of: points must lie in [0, 1]");
        }
    }
    std::sort(points.begin(), points.end());
    const double n = static_cast<double>(points.size());
    double best = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double hi = static_cast<double>(i + 1) / n - points[i];
        const double lo = points[i] - static_cast<double>(i) / n;
        best = std::max({best, hi, lo});
    }
    return best;
}

double star_discrepancy(std::uint64_t j, const PrimeSieve& sieve) {
    return star_discrepancy_of(scaled_sp_points(j, sieve));
}

}  // namespace spseq
