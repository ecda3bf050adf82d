#pragma once

#include <cmath>
#include <cstdint>
#include <optional>

namespace spseq {

// Floor of sqrt(n), exact for the full 64-bit range. std::sqrt alone can be
// off by one at this scale, so the estimate is nudged into place.
inline std::uint64_t isqrt(std::uint64_t n) {
    if (n == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0xFFFFFFFFull || r * r > n) --r;
    while (r + 1 <= 0xFFFFFFFFull && (r + 1) * (r + 1) <= n) ++r;
    return r;
}

// Product a*b, or nullopt when it would wrap.
inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
    return out;
}

}  // namespace spseq
