#pragma once

// Exact packings that attain g(n).

#include "sqpack/geometry.hpp"
#include "sqpack/values.hpp"

#include <cstdint>
#include <stdexcept>

namespace sqpack {

/// k^2 squares of side 1/k; index i*k + j is the cell at column i, row j.
inline Packing construct_grid(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("construct_grid: k must be positive");
    Packing p;
    p.squares.reserve(static_cast<std::size_t>(k * k));
    const Rational side(1, k);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) p.squares.push_back({Rational(i, k), Rational(j, k), side});
    return p;
}

/// The k x k grid with its bottom-right cell replaced by two squares of
/// side 1/(2k), one at the cell's bottom-left corner and one at its center.
/// k^2 + 1 squares with total side length k.
inline Packing construct_split(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("construct_split: k must be positive");
    Packing p;
    p.squares.reserve(static_cast<std::size_t>(k * k + 1));
    const Rational side(1, k);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) {
            if (i == k - 1 && j == 0) continue;
            p.squares.push_back({Rational(i, k), Rational(j, k), side});
        }
    const Rational half(1, 2 * k);
    const Rational cell_x(k - 1, k);
    p.squares.push_back({cell_x, Rational(0), half});
    p.squares.push_back({cell_x + half, half, half});
    return p;
}

/// Grid cells of side 1/k outside a bottom-right corner square of side
/// |c|/k; the corner holds (c+1)^2 equal squares when c > 0 and (|c|-1)^2
/// equal squares when c < 0 (nothing for c = -1). k^2 + 2c + 1 squares with
/// total side length k + c/k.
inline Packing construct_lshape(std::int64_t k, std::int64_t c) {
    if (k < 1) throw std::invalid_argument("construct_lshape: k must be positive");
    if (c <= -k || c >= k) throw std::invalid_argument("construct_lshape: c must satisfy -k < c < k");
    if (c == 0) throw std::invalid_argument("construct_lshape: c = 0 is the split construction");

    const std::int64_t corner = c > 0 ? c : -c;
    const std::int64_t per_row = c > 0 ? c + 1 : corner - 1;

    Packing p;
    p.squares.reserve(static_cast<std::size_t>(k * k + 2 * c + 1));
    const Rational side(1, k);
    for (std::int64_t i = 0; i < k; ++i)
        for (std::int64_t j = 0; j < k; ++j) {
            if (i >= k - corner && j < corner) continue;
            p.squares.push_back({Rational(i, k), Rational(j, k), side});
        }
    if (per_row > 0) {
        const Rational small(corner, k * per_row);
        const Rational left(k - corner, k);
        for (std::int64_t i = 0; i < per_row; ++i)
            for (std::int64_t j = 0; j < per_row; ++j)
                p.squares.push_back({left + small * Rational(i), small * Rational(j), small});
    }
    return p;
}

/// An exact packing of n squares with total side length g(n).
inline Packing construct_optimal(std::int64_t n) {
    const Decomposition d = decompose(n);
    if (d.kind == DecompositionKind::perfect_square) return construct_grid(d.k);
    if (d.c == 0) return construct_split(d.k);
    return construct_lshape(d.k, d.c);
}

}  // namespace sqpack
