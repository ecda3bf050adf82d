#pragma once

#include "spseq/sieve.hpp"

namespace spseq::testing {

// Shared sieves, built once per test binary.
inline const PrimeSieve& sieve_1e4() {
    static const PrimeSieve sieve(10'000);
    return sieve;
}

inline const PrimeSieve& sieve_1e6() {
    static const PrimeSieve sieve(1'000'000);
    return sieve;
}

}  // namespace spseq::testing
