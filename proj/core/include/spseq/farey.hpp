#pragma once

#include <cstdint>
#include <vector>

#include "spseq/sp_core.hpp"

namespace spseq {

enum class FareyOrder {
    lex,    // sorted by (num, den)
    value,  // sorted by the exact fraction num/den, then (num, den)
};

// Reduced fraction of two coprime square-prime values, num.value < den.value.
struct FareyEntry {
    SpNumber num;
    SpNumber den;
    double value;  // num/den, in (0, 1)
};

// All coprime square-prime pairs num < den <= x. Ties in `value` order
// cannot occur: distinct reduced fractions are distinct rationals, and the
// comparison is done on exact cross products, not on rounded doubles.
// Requires x <= sieve.limit() (std::out_of_range otherwise).
std::vector<FareyEntry> sp_farey(std::uint64_t x, const PrimeSieve& sieve,
                                 FareyOrder order = FareyOrder::lex);

// |sp_farey(x)| via the same gcd pair loop, without materializing entries.
std::uint64_t sp_farey_count(std::uint64_t x, const PrimeSieve& sieve);

// Leading term ((zeta(2)-1)^2 / (2 zeta(2))) * x^2 / ln^2 x.
// Requires x >= 3 (std::domain_error below).
double sp_farey_estimate(double x);

// Second term of the same expansion, ((zeta(2)-1)/zeta(2)) * x / ln x.
// Reported for diagnostics only; the leading term is the supported estimate.
double sp_farey_estimate_second_term(double x);

}  // namespace spseq
