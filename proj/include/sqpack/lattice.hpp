#pragma once

// Lattice-point certificate for g(k^2 + 1) <= k.
//
// After stretching by k, the squares live in [0, k)^2, which contains
// exactly N = k^2 points of any translate Z^2 + (x0, y0). A square with
// stretched projections X and Y holds p*q of them, where p = |X ∩ (Z + x0)|
// and q = |Y ∩ (Z + y0)|. Both counts lie in {floor(kd), ceil(kd)}, so
// p*q >= p + q - 1. Choosing x0, y0 where sum(p) and sum(q) reach N + 1
// makes sum(p*q) exceed N, so two squares share a lattice point.

#include "sqpack/geometry.hpp"
#include "sqpack/witness.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqpack {

/// Half-open interval [lo, hi).
struct Interval {
    Rational lo;
    Rational hi;

    Rational length() const { return hi - lo; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

struct StretchedInstance {
    std::int64_t k = 1;
    std::int64_t N = 1;
    std::vector<Interval> intervals_x;
    std::vector<Interval> intervals_y;
};

inline StretchedInstance stretch(const std::vector<Square>& squares, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("stretch: k must be positive");
    for (std::size_t i = 0; i < squares.size(); ++i)
        if (!squares[i].in_unit_square())
            throw std::invalid_argument("stretch: square " + std::to_string(i) +
                                        " leaves the unit square");
    StretchedInstance inst;
    inst.k = k;
    inst.N = k * k;
    const Rational kk(k);
    for (const auto& s : squares) {
        inst.intervals_x.push_back({kk * s.x, kk * (s.x + s.side)});
        inst.intervals_y.push_back({kk * s.y, kk * (s.y + s.side)});
    }
    return inst;
}

/// |[lo, hi) ∩ (Z + x)|.
inline std::int64_t lattice_hits(const Interval& iv, const Rational& x) {
    const Rational len = iv.length();
    if (len.sign() <= 0) return 0;
    // First translate at or after lo sits at lo + frac(x - lo).
    const Integer hits = (len - (x - iv.lo).frac()).ceil();
    return hits > 0 ? to_int64(hits) : 0;
}

/// Integers m with lo <= x + m < hi, as the closed range [first, last].
inline std::pair<std::int64_t, std::int64_t> lattice_range(const Interval& iv, const Rational& x) {
    return {to_int64((iv.lo - x).ceil()), to_int64((iv.hi - x).ceil()) - 1};
}

/// Per-interval counts p_i(x) as a step function of x in [0, 1):
/// values[t] and totals[t] hold on [breakpoints[t], breakpoints[t+1]).
struct CountProfile {
    std::vector<Rational> breakpoints;
    std::vector<std::vector<std::int64_t>> values;
    std::vector<std::int64_t> totals;

    std::size_t cell_of(const Rational& x) const {
        auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), x);
        return static_cast<std::size_t>(it - breakpoints.begin()) - 1;
    }
};

inline CountProfile count_profile(const std::vector<Interval>& intervals) {
    CountProfile profile;
    profile.breakpoints.push_back(Rational(0));
    for (const auto& iv : intervals) {
        profile.breakpoints.push_back(iv.lo.frac());
        profile.breakpoints.push_back(iv.hi.frac());
    }
    auto& bp = profile.breakpoints;
    std::sort(bp.begin(), bp.end());
    bp.erase(std::unique(bp.begin(), bp.end()), bp.end());

    for (const auto& x : bp) {
        std::vector<std::int64_t> row;
        row.reserve(intervals.size());
        std::int64_t total = 0;
        for (const auto& iv : intervals) {
            row.push_back(lattice_hits(iv, x));
            total += row.back();
        }
        profile.values.push_back(std::move(row));
        profile.totals.push_back(total);
    }
    return profile;
}

/// Smallest breakpoint whose cell total reaches `threshold`.
inline Rational find_offset(const CountProfile& profile, std::int64_t threshold) {
    for (std::size_t t = 0; t < profile.totals.size(); ++t)
        if (profile.totals[t] >= threshold) return profile.breakpoints[t];
    throw std::domain_error("find_offset: no cell reaches total " + std::to_string(threshold));
}

/// |[0, k)^2 ∩ (Z^2 + (x0, y0))|.
inline std::int64_t container_lattice_count(std::int64_t k, const Rational& x0, const Rational& y0) {
    const Interval side{Rational(0), Rational(k)};
    return lattice_hits(side, x0) * lattice_hits(side, y0);
}

/// Finds two overlapping squares in k^2 + 1 in-bounds squares whose sides
/// sum to more than k, as a lattice point covered twice. Throws
/// PreconditionError when the input does not meet those hypotheses.
inline OverlapWitness refute_lattice(const std::vector<Square>& squares, std::int64_t k) {
    require_overfull(squares, k);

    const StretchedInstance inst = stretch(squares, k);
    const CountProfile px = count_profile(inst.intervals_x);
    const CountProfile py = count_profile(inst.intervals_y);
    const Rational x0 = find_offset(px, inst.N + 1);
    const Rational y0 = find_offset(py, inst.N + 1);
    const auto& p = px.values[px.cell_of(x0)];
    const auto& q = py.values[py.cell_of(y0)];

    for (std::size_t i = 0; i < squares.size(); ++i)
        if (p[i] - q[i] > 1 || q[i] - p[i] > 1)
            throw std::logic_error("refute_lattice: counts of square " + std::to_string(i) +
                                   " differ by more than one");

    // First and second covering square for every lattice point in [0, k)^2.
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    const auto side = static_cast<std::size_t>(k);
    std::vector<std::size_t> first(side * side, none);
    std::vector<std::size_t> second(side * side, none);
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const auto [x_lo, x_hi] = lattice_range(inst.intervals_x[i], x0);
        const auto [y_lo, y_hi] = lattice_range(inst.intervals_y[i], y0);
        for (std::int64_t mx = x_lo; mx <= x_hi; ++mx)
            for (std::int64_t my = y_lo; my <= y_hi; ++my) {
                const auto cell = static_cast<std::size_t>(mx) * side + static_cast<std::size_t>(my);
                if (first[cell] == none)
                    first[cell] = i;
                else if (second[cell] == none)
                    second[cell] = i;
            }
    }

    std::size_t best = none;
    for (std::size_t cell = 0; cell < first.size(); ++cell) {
        if (second[cell] == none) continue;
        if (best == none || std::pair(first[cell], second[cell]) < std::pair(first[best], second[best]))
            best = cell;
    }
    if (best == none) throw std::logic_error("refute_lattice: no lattice point is covered twice");

    const Rational kk(k);
    OverlapWitness w;
    w.px = (x0 + Rational(static_cast<std::int64_t>(best / side))) / kk;
    w.py = (y0 + Rational(static_cast<std::int64_t>(best % side))) / kk;
    w.first = first[best];
    w.second = second[best];
    w.engine = Engine::lattice;
    return w;
}

}  // namespace sqpack
