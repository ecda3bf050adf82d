#include "spseq/sieve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spseq {

PrimeSieve::PrimeSieve(std::uint64_t limit, std::uint64_t memory_cap_bytes)
    : limit_(limit) {
    if (limit < 2) {
        throw std::invalid_argument("PrimeSieve: limit must be >= 2");
    }
    // Factors are stored as 32-bit values; anything larger blows the memory
    // cap long before the width matters, but reject it explicitly.
    if (limit > 0xFFFFFFFFull) {
        throw std::length_error("PrimeSieve: limit exceeds the 32-bit factor table range");
    }
    const std::uint64_t bytes = (limit + 1) * sizeof(std::uint32_t);
    if (bytes > memory_cap_bytes) {
        throw std::length_error("PrimeSieve: table needs " + std::to_string(bytes) +
                                " bytes, cap is " + std::to_string(memory_cap_bytes));
    }

    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    spf_[1] = 1;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (spf_[i] != 0) continue;
        spf_[i] = static_cast<std::uint32_t>(i);
        // Composites i*k with k < i already got a smaller factor, so start at i*i.
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
        }
    }
}

std::uint64_t PrimeSieve::smallest_factor(std::uint64_t n) const {
    if (n == 0 || n > limit_) {
        throw std::invalid_argument("PrimeSieve::smallest_factor: n must be in [1, limit]");
    }
    return spf_[n];
}

std::vector<std::uint64_t> PrimeSieve::primes_up_to(std::uint64_t n) const {
    if (n > limit_) {
        throw std::invalid_argument("PrimeSieve::primes_up_to: n exceeds sieve limit");
    }
    std::vector<std::uint64_t> primes;
    if (n < 2) return primes;
    const double nd = static_cast<double>(n);
    primes.reserve(n < 60 ? 20 : static_cast<std::size_t>(nd / (std::log(nd) - 1.2)));
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf_[i] == i) primes.push_back(i);
    }
    return primes;
}

}  // namespace spseq
