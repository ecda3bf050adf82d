#pragma once

#include <cstdint>
#include <vector>

namespace spseq {

// Smallest-prime-factor table for 1..limit.
//
// smallest_factor(p) == p exactly when p is prime; for composite n the
// stored factor is prime and <= sqrt(n). 1 maps to itself. Immutable after
// construction and safe for concurrent reads.
class PrimeSieve {
public:
    static constexpr std::uint64_t kDefaultMemoryCapBytes = 1ull << 30;

    // Builds the table. Throws std::invalid_argument if limit < 2 and
    // std::length_error if the table would exceed memory_cap_bytes.
    explicit PrimeSieve(std::uint64_t limit,
                        std::uint64_t memory_cap_bytes = kDefaultMemoryCapBytes);

    std::uint64_t limit() const { return limit_; }

    // Smallest prime factor of n (n itself for primes, 1 for 1).
    // Requires 1 <= n <= limit(), otherwise std::invalid_argument.
    std::uint64_t smallest_factor(std::uint64_t n) const;

    // False for n < 2 and for n > limit().
    bool is_prime(std::uint64_t n) const {
        return n >= 2 && n <= limit_ && spf_[n] == n;
    }

    // All primes <= n, ascending. Requires n <= limit().
    std::vector<std::uint64_t> primes_up_to(std::uint64_t n) const;

    std::uint64_t memory_bytes() const {
        return spf_.size() * sizeof(std::uint32_t);
    }

private:
    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
};

}  // namespace spseq
