#pragma once

#include <cstdint>
#include <vector>

#include "spseq/sieve.hpp"

namespace spseq {

// A square-prime value n = p * a^2 with p prime and a >= 2. p is the
// squarefree kernel of n, which makes the decomposition unique: the kernel
// pins p, and a = sqrt(n/p) is then forced.
struct SpNumber {
    std::uint64_t value;
    std::uint64_t p;
    std::uint64_t a;
};

// Square-prime values at consecutive integers, hi.value == lo.value + 1.
struct TwinPair {
    SpNumber lo;
    SpNumber hi;
};

// Product of the primes dividing n to an odd exponent; n divided by the
// result is always a perfect square. squarefree_kernel(1) == 1.
// Requires 1 <= n <= sieve.limit(), otherwise std::invalid_argument.
std::uint64_t squarefree_kernel(std::uint64_t n, const PrimeSieve& sieve);

// Square-prime membership test: true iff squarefree_kernel(n) is prime and
// n != kernel. When the kernel is a prime p, every other prime divides n to
// an even power, so n/p is a perfect square a^2; n != p rules out a == 1.
// That leaves exactly the values n = p * a^2 with a >= 2.
bool is_sp(std::uint64_t n, const PrimeSieve& sieve);

// The unique (p, a) decomposition of a square-prime value.
// Throws std::domain_error when is_sp(n) is false.
SpNumber sp_decompose(std::uint64_t n, const PrimeSieve& sieve);

// Values p * a^2 <= limit for one fixed root a >= 2, ascending in p.
// enumerate_sp is the merge of sp_for_root over all admissible roots, so
// the generation can be partitioned by a and recombined deterministically.
std::vector<SpNumber> sp_for_root(std::uint64_t a, std::uint64_t limit,
                                  const PrimeSieve& sieve);

// Every square-prime value <= limit, strictly ascending. Generated by the
// pair loop {(p, a) : a in [2, sqrt(limit/2)], p prime, p*a^2 <= limit};
// distinct pairs yield distinct values, so the loop needs no deduplication.
// Requires limit <= sieve.limit(), otherwise std::invalid_argument.
std::vector<SpNumber> enumerate_sp(std::uint64_t limit, const PrimeSieve& sieve);

// All twin pairs with hi.value <= limit, ascending.
std::vector<TwinPair> find_twins(std::uint64_t limit, const PrimeSieve& sieve);

}  // namespace spseq
