#pragma once

// Exact values of g(n), the largest total side length of n axis-parallel
// squares packed in the unit square.
//
// Every n >= 1 is either a perfect square k^2 or uniquely k^2 + 2c + 1 with
// -k < c < k: between consecutive squares k^2 and (k+1)^2 exactly one of
// n - k^2 and (k+1)^2 - n is odd, since they sum to 2k + 1.

#include "sqpack/rational.hpp"

#include <cstdint>
#include <stdexcept>

namespace sqpack {

enum class DecompositionKind { perfect_square, offset };

struct Decomposition {
    DecompositionKind kind = DecompositionKind::perfect_square;
    std::int64_t k = 1;
    std::int64_t c = 0;  // meaningful only for offset

    /// k^2 or k^2 + 2c + 1.
    __int128 reconstruct() const {
        const __int128 kk = static_cast<__int128>(k) * k;
        return kind == DecompositionKind::perfect_square ? kk : kk + 2 * static_cast<__int128>(c) + 1;
    }

    friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Largest r with r*r <= n, computed without floating point.
inline std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    // Newton iteration from above on unsigned values; converges to floor(sqrt(n)).
    auto u = static_cast<std::uint64_t>(n);
    if (u < 2) return n;
    std::uint64_t x = u;
    std::uint64_t y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + u / x) / 2;
    }
    return static_cast<std::int64_t>(x);
}

inline Decomposition decompose(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("decompose: n must be positive");
    const std::int64_t k = isqrt(n);
    if (k * k == n) return {DecompositionKind::perfect_square, k, 0};
    const std::int64_t below = n - k * k;
    if (below % 2 == 1) return {DecompositionKind::offset, k, (below - 1) / 2};
    // (k+1)^2 can exceed 64 bits when n is close to the top of the range.
    const std::int64_t k1 = k + 1;
    const __int128 above = static_cast<__int128>(k1) * k1 - n;
    return {DecompositionKind::offset, k1, static_cast<std::int64_t>(-(above + 1) / 2)};
}

/// k for n = k^2, k + c/k for n = k^2 + 2c + 1.
inline Rational g_value(const Decomposition& d) {
    if (d.kind == DecompositionKind::perfect_square) return Rational(d.k);
    return Rational(d.k) + Rational(d.c, d.k);
}

inline Rational g_value(std::int64_t n) { return g_value(decompose(n)); }

}  // namespace sqpack
