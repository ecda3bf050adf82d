#include "spseq/farey.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "spseq/specfun.hpp"

namespace spseq {

namespace {

// Exact comparison of num1/den1 < num2/den2 via 128-bit cross products.
bool fraction_less(const FareyEntry& lhs, const FareyEntry& rhs) {
    const auto l = static_cast<unsigned __int128>(lhs.num.value) * rhs.den.value;
    const auto r = static_cast<unsigned __int128>(rhs.num.value) * lhs.den.value;
    if (l != r) return l < r;
    return std::pair{lhs.num.value, lhs.den.value} < std::pair{rhs.num.value, rhs.den.value};
}

}  // namespace

std::vector<FareyEntry> sp_farey(std::uint64_t x, const PrimeSieve& sieve, FareyOrder order) {
    if (x > sieve.limit()) {
        throw std::out_of_range("sp_farey: x exceeds sieve limit");
    }
    const auto values = enumerate_sp(x, sieve);
    std::vector<FareyEntry> entries;
    // The generation order (num-major, den-minor, both ascending) is already
    // lexicographic by (num, den).
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (std::gcd(values[i].value, values[j].value) != 1) continue;
            const double ratio = static_cast<double>(values[i].value) /
                                 static_cast<double>(values[j].value);
            entries.push_back(FareyEntry{values[i], values[j], ratio});
        }
    }
    if (order == FareyOrder::value) {
        std::sort(entries.begin(), entries.end(), fraction_less);
    }
    return entries;
}

std::uint64_t sp_farey_count(std::uint64_t x, const PrimeSieve& sieve) {
    if (x > sieve.limit()) {
        throw std::out_of_range("sp_farey_count: x exceeds sieve limit");
    }
    const auto values = enumerate_sp(x, sieve);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (std::gcd(values[i].value, values[j].value) == 1) ++count;
        }
    }
    return count;
}

double sp_farey_estimate(double x) {
    if (!(x >= 3.0)) {
        throw std::domain_error("sp_farey_estimate: x must be >= 3");
    }
    constexpr double coefficient = kZeta2Minus1 * kZeta2Minus1 / (2.0 * kZeta2);
    const double log_x = std::log(x);
    return coefficient * x * x / (log_x * log_x);
}

double sp_farey_estimate_second_term(double x) {
    if (!(x >= 3.0)) {
        throw std::domain_error("sp_farey_estimate_second_term: x must be >= 3");
    }
    return kZeta2Minus1 / kZeta2 * x / std::log(x);
}

}  // namespace spseq
