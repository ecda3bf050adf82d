#include "spseq/sieve.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "test_util.hpp"

namespace spseq {
namespace {

TEST(PrimeSieve, SmallestFactorBasics) {
    const PrimeSieve sieve(10);
    EXPECT_EQ(sieve.smallest_factor(9), 3u);
    EXPECT_EQ(sieve.smallest_factor(7), 7u);
    EXPECT_EQ(sieve.smallest_factor(1), 1u);
    EXPECT_EQ(sieve.smallest_factor(10), 2u);
}

TEST(PrimeSieve, MinimalLimit) {
    const PrimeSieve sieve(2);
    EXPECT_EQ(sieve.smallest_factor(2), 2u);
    EXPECT_TRUE(sieve.is_prime(2));
}

TEST(PrimeSieve, PrimeCountTo30) {
    const PrimeSieve sieve(30);
    std::size_t primes = 0;
    for (std::uint64_t n = 2; n <= 30; ++n) {
        if (sieve.smallest_factor(n) == n) ++primes;
    }
    EXPECT_EQ(primes, 10u);  // 2 3 5 7 11 13 17 19 23 29
    EXPECT_EQ(sieve.primes_up_to(30).size(), 10u);
}

TEST(PrimeSieve, InvariantsAgainstTrialDivision) {
    const PrimeSieve& sieve = testing::sieve_1e4();
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        const std::uint64_t f = sieve.smallest_factor(n);
        if (oracle::is_prime(n)) {
            EXPECT_EQ(f, n) << "n=" << n;
        } else {
            EXPECT_EQ(n % f, 0u) << "n=" << n;
            EXPECT_TRUE(oracle::is_prime(f)) << "n=" << n;
            EXPECT_LE(f * f, n) << "n=" << n;
        }
    }
}

TEST(PrimeSieve, RejectsBadLimits) {
    EXPECT_THROW(PrimeSieve(0), std::invalid_argument);
    EXPECT_THROW(PrimeSieve(1), std::invalid_argument);
    EXPECT_THROW(PrimeSieve(1'000'000, 1024), std::length_error);
}

TEST(PrimeSieve, RangeChecks) {
    const PrimeSieve sieve(100);
    EXPECT_THROW(sieve.smallest_factor(0), std::invalid_argument);
    EXPECT_THROW(sieve.smallest_factor(101), std::invalid_argument);
    EXPECT_THROW(sieve.primes_up_to(101), std::invalid_argument);
    EXPECT_FALSE(sieve.is_prime(0));
    EXPECT_FALSE(sieve.is_prime(1));
    EXPECT_FALSE(sieve.is_prime(101));  // out of range reads as non-prime
}

TEST(PrimeSieve, PrimesUpToMatchesTable) {
    const PrimeSieve& sieve = testing::sieve_1e4();
    const auto primes = sieve.primes_up_to(10'000);
    EXPECT_EQ(primes.size(), 1229u);
    EXPECT_EQ(primes.front(), 2u);
    EXPECT_EQ(primes.back(), 9973u);
}

}  // namespace
}  // namespace spseq
