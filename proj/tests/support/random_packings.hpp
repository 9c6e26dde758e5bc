#pragma once

// Random generators for exact packings used by the unit and acceptance
// suites.

#include "sqpack/constructions.hpp"
#include "sqpack/geometry.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace sqpack::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(gen_); }

    /// Random rational in [0, 1] with denominator at most max_den.
    Rational unit_fraction(std::int64_t max_den = 12) {
        const std::int64_t q = uniform(1, max_den);
        return Rational(uniform(0, q), q);
    }
    /// Random rational in (0, 1].
    Rational positive_fraction(std::int64_t max_den = 12) {
        const std::int64_t q = uniform(1, max_den);
        return Rational(uniform(1, q), q);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        std::shuffle(v.begin(), v.end(), gen_);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

/// Valid packing built by recursive subdivision of square cells, then
/// shrinking, shifting or dropping leaves. Has between 1 and max_n squares.
inline Packing random_packing(Rng& rng, std::size_t max_n) {
    std::vector<Square> cells{{Rational(0), Rational(0), Rational(1)}};
    const auto target = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_n)));
    while (cells.size() < target) {
        const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(cells.size()) - 1));
        const Square cell = cells[pick];
        std::vector<Square> parts;
        const std::int64_t m = rng.uniform(2, 3);
        const Rational small = cell.side / Rational(m);
        if (rng.coin(0.7)) {
            for (std::int64_t i = 0; i < m; ++i)
                for (std::int64_t j = 0; j < m; ++j)
                    parts.push_back({cell.x + small * Rational(i), cell.y + small * Rational(j), small});
        } else {
            // One large square in the corner and a border of small ones.
            const Rational big = small * Rational(m - 1);
            parts.push_back({cell.x, cell.y, big});
            for (std::int64_t i = 0; i < m; ++i)
                parts.push_back({cell.x + small * Rational(i), cell.y + big, small});
            for (std::int64_t j = 0; j + 1 < m; ++j)
                parts.push_back({cell.x + big, cell.y + small * Rational(j), small});
        }
        if (cells.size() - 1 + parts.size() > max_n) break;
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(pick));
        cells.insert(cells.end(), parts.begin(), parts.end());
    }

    Packing p;
    for (const auto& cell : cells) {
        const double roll = std::uniform_real_distribution<double>(0.0, 1.0)(rng.engine());
        if (roll < 0.55) {
            p.squares.push_back(cell);
        } else if (roll < 0.92 || p.empty()) {
            const Rational side = cell.side * rng.positive_fraction();
            const Rational slack = cell.side - side;
            p.squares.push_back({cell.x + slack * rng.unit_fraction(), cell.y + slack * rng.unit_fraction(), side});
        }
    }
    if (p.empty()) p.squares.push_back(cells.front());
    rng.shuffle(p.squares);
    return p;
}

/// Valid packing with exactly n squares (n >= 1).
inline Packing random_packing_exact(Rng& rng, std::size_t n) {
    for (;;) {
        Packing p = random_packing(rng, n + n / 2 + 4);
        if (p.size() < n) continue;
        p.squares.resize(n);
        return p;
    }
}

/// Random square inside the unit square with side in [lo, 1].
inline Square random_square(Rng& rng, const Rational& lo = Rational(0), std::int64_t max_den = 24) {
    Rational side;
    do {
        side = rng.positive_fraction(max_den);
    } while (side < lo);
    const Rational room = Rational(1) - side;
    return {room * rng.unit_fraction(max_den), room * rng.unit_fraction(max_den), side};
}

/// k^2 + 1 squares inside the unit square whose sides sum to more than k,
/// obtained by duplicating, inflating or adding to optimal packings.
inline std::vector<Square> random_overfull(Rng& rng, std::int64_t k) {
    std::vector<Square> squares;
    switch (rng.uniform(0, 3)) {
        case 0: {  // full grid plus one extra square anywhere
            squares = construct_grid(k).squares;
            squares.push_back(random_square(rng));
            break;
        }
        case 1: {  // split construction with one square inflated
            squares = construct_split(k).squares;
            auto& s = squares[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(squares.size()) - 1))];
            const Rational room = Rational(1) - s.side;
            s.side += room * rng.positive_fraction();
            s.x = min(s.x, Rational(1) - s.side);
            s.y = min(s.y, Rational(1) - s.side);
            break;
        }
        case 2: {  // split construction with a small square replaced by a duplicated cell
            squares = construct_split(k).squares;
            const auto cells = static_cast<std::int64_t>(squares.size()) - 2;
            const auto victim = squares.size() - 1 - static_cast<std::size_t>(rng.uniform(0, 1));
            squares[victim] = cells > 0 ? squares[static_cast<std::size_t>(rng.uniform(0, cells - 1))]
                                        : Square{Rational(0), Rational(0), Rational(1)};
            break;
        }
        default: {  // independent squares, each longer than 1/k
            for (std::int64_t i = 0; i < k * k + 1; ++i) {
                squares.push_back(random_square(rng, Rational(1, k)));
            }
            break;
        }
    }
    rng.shuffle(squares);
    return squares;
}

}  // namespace sqpack::testing
