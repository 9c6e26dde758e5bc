#pragma once

// Vertical-line sweep certificate for g(k^2 + 1) <= k.
//
// k vertical lines x = a + j/k (j = 0..k-1) are laid across the unit square.
// For a square with half-open x-projection [x, x+d), m counts the lines it
// meets. Averaged over a in [0, 1/k), m equals k*d, so some offset gives
// sum(m) >= k*sum(d). Partitioning squares by m = 0, m = 1 and m >= 2 bounds
// sum(d) by (#A - sum_C(m-1))/k plus the total segment length cut by the
// lines; for a disjoint packing of k^2 + 1 squares that bound is at most k.
// Run backwards on an overfull family, some line carries more than unit
// length and its segments must overlap.

#include "sqpack/geometry.hpp"
#include "sqpack/witness.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sqpack {

namespace detail {

inline void require_positive_k(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
}

inline void require_offset(std::int64_t k, const Rational& a) {
    require_positive_k(k);
    if (a.sign() < 0 || a >= Rational(1, k))
        throw std::invalid_argument("offset " + a.str() + " outside [0, 1/" + std::to_string(k) + ")");
}

inline void require_in_bounds(const std::vector<Square>& squares) {
    for (std::size_t i = 0; i < squares.size(); ++i)
        if (squares[i].side.sign() <= 0 || !squares[i].in_unit_square())
            throw std::invalid_argument("square " + std::to_string(i) +
                                        " is degenerate or leaves the unit square");
}

/// Number of j in [0, k) with a + j/k in [x, x+d).
inline std::int64_t lines_met(const Square& s, std::int64_t k, const Rational& a) {
    const Rational kk(k);
    std::int64_t lo = to_int64((kk * (s.x - a)).ceil());
    std::int64_t hi = to_int64((kk * (s.x + s.side - a)).ceil()) - 1;
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, k - 1);
    return hi >= lo ? hi - lo + 1 : 0;
}

inline bool line_meets(const Square& s, std::int64_t k, const Rational& a, std::int64_t j) {
    const Rational line = a + Rational(j, k);
    return s.x <= line && line < s.x + s.side;
}

}  // namespace detail

inline std::vector<std::int64_t> sweep_counts(const std::vector<Square>& squares, std::int64_t k,
                                              const Rational& a) {
    detail::require_offset(k, a);
    detail::require_in_bounds(squares);
    std::vector<std::int64_t> m;
    m.reserve(squares.size());
    for (const auto& s : squares) m.push_back(detail::lines_met(s, k, a));
    return m;
}

/// sum(m) as a step function of the offset: totals[t] holds on
/// [breakpoints[t], breakpoints[t+1]), the last cell ending at 1/k.
struct SweepProfile {
    std::int64_t k = 1;
    std::vector<Rational> breakpoints;
    std::vector<std::int64_t> totals;
};

/// Builds the step function from endpoint events instead of re-evaluating
/// every square at every breakpoint.
///
/// In scaled units u = k*a, a square contributes floor(k*d) lines always and
/// one more exactly when u lies on the circular arc [frac(kx), frac(kx+kd)).
inline SweepProfile sweep_profile(const std::vector<Square>& squares, std::int64_t k) {
    detail::require_positive_k(k);
    detail::require_in_bounds(squares);

    struct Event {
        Rational at;
        int delta;
    };
    std::vector<Event> events;
    std::vector<Rational> points{Rational(0)};
    std::int64_t base = 0;
    const Rational kk(k);
    for (const auto& s : squares) {
        const Rational lo = kk * s.x;
        const Rational len = kk * s.side;
        const Rational start = lo.frac();
        const Rational end = (lo + len).frac();
        points.push_back(start);
        points.push_back(end);
        base += to_int64(len.floor());
        if (start == end) continue;  // integral scaled length
        events.push_back({start, +1});
        events.push_back({end, -1});
        if (start > end) ++base;  // arc wraps through 0
    }
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) { return l.at < r.at; });

    SweepProfile profile;
    profile.k = k;
    std::int64_t running = base;
    std::size_t e = 0;
    // Wrapped arcs were pre-counted; their +1 at 'start' and -1 at 'end'
    // then cancel correctly as the scan passes them.
    for (const auto& u : points) {
        while (e < events.size() && events[e].at <= u) running += events[e++].delta;
        profile.breakpoints.push_back(u / kk);
        profile.totals.push_back(running);
    }
    return profile;
}

/// Smallest breakpoint offset maximizing sum(m).
inline Rational best_offset(const std::vector<Square>& squares, std::int64_t k) {
    const SweepProfile profile = sweep_profile(squares, k);
    std::size_t best = 0;
    for (std::size_t t = 1; t < profile.totals.size(); ++t)
        if (profile.totals[t] > profile.totals[best]) best = t;
    return profile.breakpoints[best];
}

struct SweepChecks {
    bool class_a_small = true;         // d <= 1/k when m = 0
    bool class_b_exact = true;         // d = sum_j mu when m = 1
    bool class_c_bounded = true;       // (m-1)/k <= d <= sum_j mu - (m-1)/k when m >= 2
    bool partition_inequality = true;  // #A <= sum_C (m-1), whenever sum(m) >= n
    bool chain_holds = true;           // chain_lhs <= chain_bound

    bool per_square() const { return class_a_small && class_b_exact && class_c_bounded; }
    bool all() const { return per_square() && partition_inequality && chain_holds; }
};

struct SweepTranscript {
    std::int64_t k = 1;
    Rational a;
    std::vector<std::int64_t> m;
    std::vector<std::size_t> class_a;
    std::vector<std::size_t> class_b;
    std::vector<std::size_t> class_c;
    std::vector<std::vector<Rational>> mu;  // mu[i][j] = d_i when line j meets square i
    std::vector<Rational> line_loads;
    std::int64_t total_count = 0;  // sum(m)
    Rational chain_lhs;            // sum(d)
    Rational chain_bound;          // (#A - sum_C(m-1))/k + sum(mu)
    SweepChecks checks;

    bool lines_within_capacity() const {
        return std::all_of(line_loads.begin(), line_loads.end(),
                           [](const Rational& load) { return load <= 1; });
    }
};

inline SweepTranscript build_transcript(const std::vector<Square>& squares, std::int64_t k,
                                        const Rational& a) {
    detail::require_offset(k, a);
    detail::require_in_bounds(squares);

    SweepTranscript t;
    t.k = k;
    t.a = a;
    t.line_loads.assign(static_cast<std::size_t>(k), Rational(0));
    t.mu.reserve(squares.size());

    const Rational inv_k(1, k);
    Rational mu_total;
    std::int64_t excess_c = 0;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const Square& s = squares[i];
        std::vector<Rational> row(static_cast<std::size_t>(k));
        std::int64_t met = 0;
        Rational row_sum;
        for (std::int64_t j = 0; j < k; ++j) {
            if (!detail::line_meets(s, k, a, j)) continue;
            ++met;
            row[static_cast<std::size_t>(j)] = s.side;
            row_sum += s.side;
            t.line_loads[static_cast<std::size_t>(j)] += s.side;
        }
        t.m.push_back(met);
        t.total_count += met;
        t.chain_lhs += s.side;
        mu_total += row_sum;

        if (met == 0) {
            t.class_a.push_back(i);
            t.checks.class_a_small = t.checks.class_a_small && s.side <= inv_k;
        } else if (met == 1) {
            t.class_b.push_back(i);
            t.checks.class_b_exact = t.checks.class_b_exact && s.side == row_sum;
        } else {
            t.class_c.push_back(i);
            excess_c += met - 1;
            const Rational gap = Rational(met - 1, k);
            t.checks.class_c_bounded =
                t.checks.class_c_bounded && gap <= s.side && s.side <= row_sum - gap;
        }
        t.mu.push_back(std::move(row));
    }

    const auto n = static_cast<std::int64_t>(squares.size());
    const auto count_a = static_cast<std::int64_t>(t.class_a.size());
    if (t.total_count >= n) t.checks.partition_inequality = count_a <= excess_c;
    t.chain_bound = Rational(count_a - excess_c, k) + mu_total;
    t.checks.chain_holds = t.chain_lhs <= t.chain_bound;
    return t;
}

/// Finds two overlapping squares in k^2 + 1 in-bounds squares whose sides
/// sum to more than k. Throws PreconditionError when the input does not
/// meet those hypotheses.
inline OverlapWitness refute_sweep(const std::vector<Square>& squares, std::int64_t k) {
    require_overfull(squares, k);

    const Rational a = best_offset(squares, k);
    const SweepTranscript t = build_transcript(squares, k, a);
    if (t.total_count < static_cast<std::int64_t>(squares.size()))
        throw std::logic_error("refute_sweep: no offset reaches the averaging bound");

    for (std::int64_t j = 0; j < k; ++j) {
        if (t.line_loads[static_cast<std::size_t>(j)] <= 1) continue;
        std::vector<std::size_t> on_line;
        for (std::size_t i = 0; i < squares.size(); ++i)
            if (t.mu[i][static_cast<std::size_t>(j)].sign() > 0) on_line.push_back(i);
        // Segments of total length > 1 inside [0, 1) cannot be disjoint.
        for (std::size_t p = 0; p < on_line.size(); ++p)
            for (std::size_t q = p + 1; q < on_line.size(); ++q) {
                const Square& s = squares[on_line[p]];
                const Square& r = squares[on_line[q]];
                const Rational lo = max(s.y, r.y);
                const Rational hi = min(s.y + s.side, r.y + r.side);
                if (lo < hi) {
                    OverlapWitness w;
                    w.px = a + Rational(j, k);
                    w.py = (lo + hi) / Rational(2);
                    w.first = on_line[p];
                    w.second = on_line[q];
                    w.engine = Engine::sweep;
                    return w;
                }
            }
        throw std::logic_error("refute_sweep: overloaded line without overlapping segments");
    }
    throw std::logic_error("refute_sweep: no line exceeds unit load");
}

}  // namespace sqpack
