#pragma once

// Exact axis-parallel squares and packings in the unit square.
//
// Every square denotes the half-open region [x, x+side) x [y, y+side). For
// axis-parallel boxes, half-open intersection is nonempty exactly when the
// open interiors intersect, so one disjointness test serves every caller.

#include "sqpack/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqpack {

struct Square {
    Rational x;     // left edge
    Rational y;     // bottom edge
    Rational side;

    Rational right() const { return x + side; }
    Rational top() const { return y + side; }

    bool contains(const Rational& px, const Rational& py) const {
        return x <= px && px < x + side && y <= py && py < y + side;
    }
    bool in_unit_square() const {
        return x.sign() >= 0 && y.sign() >= 0 && x + side <= 1 && y + side <= 1;
    }

    friend bool operator==(const Square&, const Square&) = default;
};

struct Packing {
    std::vector<Square> squares;

    std::size_t size() const { return squares.size(); }
    bool empty() const { return squares.empty(); }

    friend bool operator==(const Packing&, const Packing&) = default;
};

enum class ViolationKind { out_of_bounds, overlap, nonpositive_side };

inline const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::out_of_bounds: return "out-of-bounds";
        case ViolationKind::overlap: return "overlap";
        case ViolationKind::nonpositive_side: return "nonpositive-side";
    }
    return "unknown";
}

struct Violation {
    ViolationKind kind;
    std::vector<std::size_t> indices;  // one index, or two for overlaps (ascending)

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
    bool is_valid = true;
    std::vector<Violation> violations;

    std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& v : violations)
            if (v.kind == ViolationKind::overlap) out.emplace_back(v.indices[0], v.indices[1]);
        return out;
    }
    bool has_overlap(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        for (const auto& v : violations)
            if (v.kind == ViolationKind::overlap && v.indices[0] == i && v.indices[1] == j)
                return true;
        return false;
    }
};

/// Half-open intervals [lo1, hi1) and [lo2, hi2) share a point.
inline bool intervals_overlap(const Rational& lo1, const Rational& hi1, const Rational& lo2,
                              const Rational& hi2) {
    return max(lo1, lo2) < min(hi1, hi2);
}

inline bool squares_overlap(const Square& a, const Square& b) {
    return intervals_overlap(a.x, a.x + a.side, b.x, b.x + b.side) &&
           intervals_overlap(a.y, a.y + a.side, b.y, b.y + b.side);
}

/// All overlapping index pairs, ascending lexicographically.
///
/// Sweeps squares by left edge so only pairs whose x-projections overlap
/// are compared on y.
inline std::vector<std::pair<std::size_t, std::size_t>> overlapping_pairs(
    const std::vector<Square>& squares) {
    const std::size_t n = squares.size();
    std::vector<Rational> rights(n);
    for (std::size_t i = 0; i < n; ++i) rights[i] = squares[i].x + squares[i].side;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (squares[a].x != squares[b].x) return squares[a].x < squares[b].x;
        return a < b;
    });

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> active;
    for (std::size_t idx : order) {
        const Square& s = squares[idx];
        std::erase_if(active, [&](std::size_t a) { return rights[a] <= s.x; });
        if (s.side.sign() <= 0) continue;
        for (std::size_t a : active) {
            const Square& t = squares[a];
            if (intervals_overlap(s.y, s.y + s.side, t.y, t.y + t.side))
                pairs.emplace_back(std::min(a, idx), std::max(a, idx));
        }
        active.push_back(idx);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// Reports nonpositive sides and unit-square escapes per square (in index
/// order), followed by every overlapping pair in lexicographic order.
inline ValidationReport validate(const Packing& p) {
    ValidationReport report;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Square& s = p.squares[i];
        if (s.side.sign() <= 0)
            report.violations.push_back({ViolationKind::nonpositive_side, {i}});
        else if (!s.in_unit_square())
            report.violations.push_back({ViolationKind::out_of_bounds, {i}});
    }
    for (auto [i, j] : overlapping_pairs(p.squares))
        report.violations.push_back({ViolationKind::overlap, {i, j}});
    report.is_valid = report.violations.empty();
    return report;
}

inline Rational total_side_length(const Packing& p) {
    Rational total;
    for (const auto& s : p.squares) total += s.side;
    return total;
}

inline Rational total_area(const Packing& p) {
    Rational total;
    for (const auto& s : p.squares) total += s.side * s.side;
    return total;
}

/// A valid packing whose squares fill the unit square. Throws
/// std::invalid_argument for an invalid packing.
inline bool is_tiling(const Packing& p) {
    if (!validate(p).is_valid) throw std::invalid_argument("is_tiling: packing is not valid");
    return total_area(p) == 1;
}

}  // namespace sqpack
