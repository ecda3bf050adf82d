#include "spseq/sp_core.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "test_util.hpp"

namespace spseq {
namespace {

using testing::sieve_1e4;
using testing::sieve_1e6;

const std::vector<std::uint64_t> kFirst25 = {
    8,  12, 18, 20, 27, 28, 32, 44, 45, 48,  50,  52,  63,
    68, 72, 75, 76, 80, 92, 98, 99, 108, 112, 116, 117};

std::vector<std::uint64_t> values_of(const std::vector<SpNumber>& sps) {
    std::vector<std::uint64_t> out;
    out.reserve(sps.size());
    for (const auto& sp : sps) out.push_back(sp.value);
    return out;
}

TEST(SquarefreeKernel, KnownValues) {
    const auto& sieve = sieve_1e4();
    EXPECT_EQ(squarefree_kernel(72, sieve), 2u);   // 2^3 * 3^2
    EXPECT_EQ(squarefree_kernel(45, sieve), 5u);   // 3^2 * 5
    EXPECT_EQ(squarefree_kernel(1, sieve), 1u);
    EXPECT_EQ(squarefree_kernel(9, sieve), 1u);
    EXPECT_EQ(squarefree_kernel(30, sieve), 30u);  // squarefree
}

TEST(SquarefreeKernel, KernelTimesSquareReconstructs) {
    const auto& sieve = sieve_1e4();
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        const std::uint64_t k = squarefree_kernel(n, sieve);
        ASSERT_EQ(n % k, 0u) << n;
        const std::uint64_t square = n / k;
        const std::uint64_t root = oracle::isqrt(square);
        EXPECT_EQ(root * root, square) << "n=" << n << " kernel=" << k;
    }
}

TEST(SquarefreeKernel, MatchesTrialDivision) {
    const auto& sieve = sieve_1e4();
    for (std::uint64_t n = 1; n <= 5'000; ++n) {
        EXPECT_EQ(squarefree_kernel(n, sieve), oracle::squarefree_kernel(n)) << n;
    }
}

TEST(SquarefreeKernel, RangeErrors) {
    const auto& sieve = sieve_1e4();
    EXPECT_THROW(squarefree_kernel(0, sieve), std::invalid_argument);
    EXPECT_THROW(squarefree_kernel(10'001, sieve), std::invalid_argument);
}

TEST(IsSp, KnownValues) {
    const auto& sieve = sieve_1e4();
    EXPECT_TRUE(is_sp(8, sieve));
    EXPECT_FALSE(is_sp(9, sieve));   // kernel 1
    EXPECT_FALSE(is_sp(7, sieve));   // prime, a would be 1
    EXPECT_FALSE(is_sp(1, sieve));
    EXPECT_TRUE(is_sp(75, sieve));
    EXPECT_FALSE(is_sp(100, sieve));  // perfect square
}

TEST(SpDecompose, KnownDecompositions) {
    const auto& sieve = sieve_1e4();
    const SpNumber sp75 = sp_decompose(75, sieve);
    EXPECT_EQ(sp75.p, 3u);
    EXPECT_EQ(sp75.a, 5u);
    const SpNumber sp108 = sp_decompose(108, sieve);
    EXPECT_EQ(sp108.p, 3u);
    EXPECT_EQ(sp108.a, 6u);
    const SpNumber sp45 = sp_decompose(45, sieve);
    EXPECT_EQ(sp45.p, 5u);
    EXPECT_EQ(sp45.a, 3u);
}

TEST(SpDecompose, RejectsNonSp) {
    const auto& sieve = sieve_1e4();
    EXPECT_THROW(sp_decompose(9, sieve), std::domain_error);
    EXPECT_THROW(sp_decompose(7, sieve), std::domain_error);
    EXPECT_THROW(sp_decompose(1, sieve), std::domain_error);
    EXPECT_THROW(sp_decompose(30, sieve), std::domain_error);
}

TEST(SpDecompose, ReconstructsEverySpValue) {
    const auto& sieve = sieve_1e4();
    for (const auto& sp : enumerate_sp(10'000, sieve)) {
        const SpNumber d = sp_decompose(sp.value, sieve);
        EXPECT_EQ(d.value, sp.value);
        EXPECT_EQ(d.p, sp.p);
        EXPECT_EQ(d.a, sp.a);
        EXPECT_EQ(d.p * d.a * d.a, d.value);
        EXPECT_GE(d.a, 2u);
        EXPECT_TRUE(sieve.is_prime(d.p));
    }
}

TEST(EnumerateSp, First25EndAt117) {
    const auto& sieve = sieve_1e4();
    EXPECT_EQ(values_of(enumerate_sp(32, sieve)),
              (std::vector<std::uint64_t>{8, 12, 18, 20, 27, 28, 32}));
    const auto first25 = enumerate_sp(117, sieve);
    EXPECT_EQ(values_of(first25), kFirst25);
    EXPECT_TRUE(enumerate_sp(7, sieve).empty());
}

TEST(EnumerateSp, StrictlyIncreasingNoDuplicates) {
    const auto& sieve = sieve_1e6();
    const auto sps = enumerate_sp(1'000'000, sieve);
    for (std::size_t i = 1; i < sps.size(); ++i) {
        ASSERT_LT(sps[i - 1].value, sps[i].value) << "at index " << i;
    }
}

TEST(EnumerateSp, MatchesKernelMembership) {
    // The pair-generation route against the kernel route, both directions.
    const auto& sieve = sieve_1e4();
    const auto sps = enumerate_sp(10'000, sieve);
    std::set<std::uint64_t> generated;
    for (const auto& sp : sps) generated.insert(sp.value);
    EXPECT_EQ(generated.size(), sps.size());
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        EXPECT_EQ(generated.count(n) == 1, is_sp(n, sieve)) << n;
    }
}

TEST(EnumerateSp, UniqueDecompositionBruteForce) {
    // Exactly one (p, a) pair per square-prime value up to 1e5.
    std::vector<unsigned> hits(100'001, 0);
    for (std::uint64_t a = 2; 2 * a * a <= 100'000; ++a) {
        for (std::uint64_t p = 2; p * a * a <= 100'000; ++p) {
            if (oracle::is_prime(p)) ++hits[p * a * a];
        }
    }
    const auto& sieve = sieve_1e6();
    for (std::uint64_t n = 1; n <= 100'000; ++n) {
        EXPECT_EQ(hits[n], is_sp(n, sieve) ? 1u : 0u) << n;
    }
}

TEST(EnumerateSp, SegmentedByRootMatchesDirect) {
    const auto& sieve = sieve_1e4();
    const std::uint64_t limit = 10'000;
    std::vector<SpNumber> merged;
    for (std::uint64_t a = 2; 2 * a * a <= limit; ++a) {
        const auto part = sp_for_root(a, limit, sieve);
        merged.insert(merged.end(), part.begin(), part.end());
    }
    std::sort(merged.begin(), merged.end(),
              [](const SpNumber& l, const SpNumber& r) { return l.value < r.value; });
    const auto direct = enumerate_sp(limit, sieve);
    ASSERT_EQ(merged.size(), direct.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        EXPECT_EQ(merged[i].value, direct[i].value);
        EXPECT_EQ(merged[i].p, direct[i].p);
        EXPECT_EQ(merged[i].a, direct[i].a);
    }
}

TEST(EnumerateSp, LimitValidation) {
    const auto& sieve = sieve_1e4();
    EXPECT_THROW(enumerate_sp(10'001, sieve), std::invalid_argument);
    EXPECT_THROW(sp_for_root(1, 100, sieve), std::invalid_argument);
}

TEST(FindTwins, KnownPrefixes) {
    const auto& sieve = sieve_1e4();
    const auto twins50 = find_twins(50, sieve);
    ASSERT_EQ(twins50.size(), 2u);
    EXPECT_EQ(twins50[0].lo.value, 27u);
    EXPECT_EQ(twins50[0].hi.value, 28u);
    EXPECT_EQ(twins50[1].lo.value, 44u);
    EXPECT_EQ(twins50[1].hi.value, 45u);

    const auto twins117 = find_twins(117, sieve);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> expected = {
        {27, 28}, {44, 45}, {75, 76}, {98, 99}, {116, 117}};
    ASSERT_EQ(twins117.size(), expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(twins117[i].lo.value, expected[i].first);
        EXPECT_EQ(twins117[i].hi.value, expected[i].second);
    }

    EXPECT_TRUE(find_twins(26, sieve).empty());
}

TEST(FindTwins, MatchesAdjacentScan) {
    const auto& sieve = sieve_1e4();
    const auto sps = enumerate_sp(10'000, sieve);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> scan;
    for (std::size_t i = 1; i < sps.size(); ++i) {
        if (sps[i].value == sps[i - 1].value + 1) {
            scan.emplace_back(sps[i - 1].value, sps[i].value);
        }
    }
    const auto twins = find_twins(10'000, sieve);
    ASSERT_EQ(twins.size(), scan.size());
    for (std::size_t i = 0; i < twins.size(); ++i) {
        EXPECT_EQ(twins[i].lo.value, scan[i].first);
        EXPECT_EQ(twins[i].hi.value, scan[i].second);
        EXPECT_EQ(twins[i].hi.value, twins[i].lo.value + 1);
    }
}

TEST(FindTwins, ConsecutiveRunAround242) {
    // 242..245 are all square-prime, so three overlapping pairs show up.
    const auto& sieve = sieve_1e4();
    const auto twins = find_twins(245, sieve);
    ASSERT_GE(twins.size(), 3u);
    const auto n = twins.size();
    EXPECT_EQ(twins[n - 3].lo.value, 242u);
    EXPECT_EQ(twins[n - 2].lo.value, 243u);
    EXPECT_EQ(twins[n - 1].lo.value, 244u);
}

}  // namespace
}  // namespace spseq
