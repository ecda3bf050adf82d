#include "spseq/sp_core.hpp"

#include <algorithm>
#include <stdexcept>

#include "spseq/intmath.hpp"

namespace spseq {

namespace {

SpNumber make_sp(std::uint64_t p, std::uint64_t a) {
    const auto square = checked_mul(a, a);
    const auto value = square ? checked_mul(p, *square) : std::nullopt;
    if (!value) {
        throw std::overflow_error("SpNumber: p * a^2 does not fit in 64 bits");
    }
    return SpNumber{*value, p, a};
}

}  // namespace

std::uint64_t squarefree_kernel(std::uint64_t n, const PrimeSieve& sieve) {
    if (n == 0 || n > sieve.limit()) {
        throw std::invalid_argument("squarefree_kernel: n must be in [1, sieve limit]");
    }
    std::uint64_t kernel = 1;
    while (n > 1) {
        const std::uint64_t p = sieve.smallest_factor(n);
        unsigned exponent = 0;
        while (n % p == 0) {
            n /= p;
            ++exponent;
        }
        if (exponent % 2 == 1) kernel *= p;
    }
    return kernel;
}

bool is_sp(std::uint64_t n, const PrimeSieve& sieve) {
    const std::uint64_t kernel = squarefree_kernel(n, sieve);
    // Prime kernel p means n/p is a perfect square; n != p rules out a == 1.
    return kernel != n && sieve.is_prime(kernel);
}

SpNumber sp_decompose(std::uint64_t n, const PrimeSieve& sieve) {
    const std::uint64_t p = squarefree_kernel(n, sieve);
    if (p == n || !sieve.is_prime(p)) {
        throw std::domain_error("sp_decompose: " + std::to_string(n) +
                                " is not a square-prime value");
    }
    const std::uint64_t a = isqrt(n / p);
    const SpNumber sp = make_sp(p, a);
    if (sp.value != n) {
        throw std::domain_error("sp_decompose: decomposition failed for " + std::to_string(n));
    }
    return sp;
}

std::vector<SpNumber> sp_for_root(std::uint64_t a, std::uint64_t limit,
                                  const PrimeSieve& sieve) {
    if (limit > sieve.limit()) {
        throw std::invalid_argument("sp_for_root: limit exceeds sieve limit");
    }
    if (a < 2) {
        throw std::invalid_argument("sp_for_root: root must be >= 2");
    }
    std::vector<SpNumber> out;
    const std::uint64_t square = a * a;
    if (square == 0 || square > limit / 2) return out;  // no prime fits
    const std::uint64_t p_max = limit / square;
    for (std::uint64_t p : sieve.primes_up_to(p_max)) {
        out.push_back(make_sp(p, a));
    }
    return out;
}

std::vector<SpNumber> enumerate_sp(std::uint64_t limit, const PrimeSieve& sieve) {
    if (limit > sieve.limit()) {
        throw std::invalid_argument("enumerate_sp: limit exceeds sieve limit");
    }
    std::vector<SpNumber> out;
    if (limit < 8) return out;

    // p >= 2 forces a <= sqrt(limit/2); p then ranges over primes <= limit/a^2.
    const std::uint64_t a_max = isqrt(limit / 2);
    const auto primes = sieve.primes_up_to(limit / 4);
    for (std::uint64_t a = 2; a <= a_max; ++a) {
        const std::uint64_t square = a * a;
        const std::uint64_t p_max = limit / square;
        for (std::uint64_t p : primes) {
            if (p > p_max) break;
            out.push_back(make_sp(p, a));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const SpNumber& lhs, const SpNumber& rhs) { return lhs.value < rhs.value; });
    return out;
}

std::vector<TwinPair> find_twins(std::uint64_t limit, const PrimeSieve& sieve) {
    const auto values = enumerate_sp(limit, sieve);
    std::vector<TwinPair> twins;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (values[i].value == values[i - 1].value + 1) {
            twins.push_back(TwinPair{values[i - 1], values[i]});
        }
    }
    return twins;
}

}  // namespace spseq
