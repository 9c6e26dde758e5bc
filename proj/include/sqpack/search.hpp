#pragma once

// Stochastic lower-bound search for g(n).
//
// Floating point lives only here. The annealer never accepts a state that
// breaks containment or disjointness, and rationalize() converts a result to
// an exact packing that passes validate().

#include "sqpack/geometry.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

namespace sqpack {

struct SearchConfig {
    std::uint64_t seed = 1;
    std::int64_t iterations = 1000000;  // per restart
    std::int64_t restarts = 8;
    double initial_temperature = 0.02;
    double cooling_rate = 0.999;  // applied once per cooling step
    std::int64_t cooling_steps = 10000;  // geometric steps spread over the run
    double shrink_epsilon = 1e-9;
    double teleport_probability = 0.1;
    unsigned threads = 0;  // 0: hardware concurrency

    void check() const {
        if (iterations < 1 || restarts < 1) throw std::invalid_argument("iterations and restarts must be >= 1");
        if (!(cooling_rate > 0.0 && cooling_rate < 1.0))
            throw std::invalid_argument("cooling rate must lie in (0, 1)");
        if (!(initial_temperature > 0.0)) throw std::invalid_argument("initial temperature must be positive");
        if (cooling_steps < 1) throw std::invalid_argument("cooling steps must be >= 1");
        if (shrink_epsilon < 0.0) throw std::invalid_argument("shrink epsilon must be nonnegative");
    }
};

struct FloatSquare {
    double x = 0.0;
    double y = 0.0;
    double side = 0.0;

    friend bool operator==(const FloatSquare&, const FloatSquare&) = default;
};

struct FloatPacking {
    std::vector<FloatSquare> squares;
    double best_total = 0.0;
    std::int64_t restart = 0;  // restart that produced this packing

    friend bool operator==(const FloatPacking&, const FloatPacking&) = default;
};

inline bool float_overlap(const FloatSquare& a, const FloatSquare& b, double eps = 0.0) {
    return a.x + a.side > b.x + eps && b.x + b.side > a.x + eps && a.y + a.side > b.y + eps &&
           b.y + b.side > a.y + eps;
}

/// Containment and disjointness, allowing violations up to `eps`.
inline bool float_valid(const std::vector<FloatSquare>& squares, double eps = 0.0) {
    for (std::size_t i = 0; i < squares.size(); ++i) {
        const auto& s = squares[i];
        if (!(s.side > 0.0) || s.x < -eps || s.y < -eps || s.x + s.side > 1.0 + eps ||
            s.y + s.side > 1.0 + eps)
            return false;
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (float_overlap(s, squares[j], eps)) return false;
    }
    return true;
}

namespace detail {

class Annealer {
public:
    Annealer(std::size_t n, const SearchConfig& cfg, std::uint64_t stream)
        : cfg_(cfg), rng_(seed_for(cfg.seed, stream)), state_(n) {}

    FloatPacking run() {
        initialize();
        double total = sum();
        std::vector<FloatSquare> best = state_;
        double best_total = total;

        const double steps = static_cast<double>(cfg_.cooling_steps);
        const double iters = static_cast<double>(cfg_.iterations);
        for (std::int64_t it = 0; it < cfg_.iterations; ++it) {
            const double progress = std::floor(static_cast<double>(it) * steps / iters);
            const double temperature = cfg_.initial_temperature * std::pow(cfg_.cooling_rate, progress);
            const double scale = std::max(1e-6, 0.25 * std::sqrt(temperature / cfg_.initial_temperature));

            const std::size_t i = pick_(rng_) % state_.size();
            const FloatSquare before = state_[i];
            if (!propose(i, scale)) {
                state_[i] = before;
                continue;
            }
            const double delta = state_[i].side - before.side;
            if (delta < 0.0 && unit_(rng_) >= std::exp(delta / temperature)) {
                state_[i] = before;
                continue;
            }
            total += delta;
            if (total > best_total) {
                best_total = total;
                best = state_;
            }
        }

        state_ = std::move(best);
        polish();
        FloatPacking out;
        out.squares = state_;
        out.best_total = sum();
        return out;
    }

private:
    static std::uint64_t seed_for(std::uint64_t seed, std::uint64_t stream) {
        // SplitMix64 finalizer over (seed, stream).
        std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double sum() const {
        double s = 0.0;
        for (const auto& q : state_) s += q.side;
        return s;
    }

    void initialize() {
        const auto n = state_.size();
        const auto m = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        const double cell = 1.0 / static_cast<double>(m);
        for (std::size_t i = 0; i < n; ++i) {
            const double side = cell * (0.2 + 0.6 * unit_(rng_));
            state_[i].side = side;
            state_[i].x = static_cast<double>(i % m) * cell + (cell - side) * unit_(rng_);
            state_[i].y = static_cast<double>(i / m) * cell + (cell - side) * unit_(rng_);
        }
    }

    bool fits(std::size_t i) const {
        const auto& s = state_[i];
        if (!(s.side > 0.0) || s.x < 0.0 || s.y < 0.0 || s.x + s.side > 1.0 || s.y + s.side > 1.0)
            return false;
        for (std::size_t j = 0; j < state_.size(); ++j)
            if (j != i && float_overlap(s, state_[j])) return false;
        return true;
    }

    /// Largest side for square i keeping the corner selected by (flip_x,
    /// flip_y) fixed; 0 when that corner is covered by another square.
    double max_side(std::size_t i, bool flip_x, bool flip_y) const {
        const auto& s = state_[i];
        // Mirror so the anchor becomes the bottom-left corner (cx, cy).
        const double cx = flip_x ? 1.0 - (s.x + s.side) : s.x;
        const double cy = flip_y ? 1.0 - (s.y + s.side) : s.y;
        double limit = std::min(1.0 - cx, 1.0 - cy);
        for (std::size_t j = 0; j < state_.size(); ++j) {
            if (j == i) continue;
            const auto& t = state_[j];
            const double tx = flip_x ? 1.0 - (t.x + t.side) : t.x;
            const double ty = flip_y ? 1.0 - (t.y + t.side) : t.y;
            if (tx + t.side <= cx || ty + t.side <= cy) continue;  // entirely left of or below
            if (tx <= cx && ty <= cy) return 0.0;
            limit = std::min(limit, std::max(tx - cx, ty - cy));
        }
        return std::max(limit, 0.0);
    }

    /// Resizes square i to `side` keeping the chosen corner fixed.
    void set_side(std::size_t i, double side, bool flip_x, bool flip_y) {
        auto& s = state_[i];
        if (flip_x) s.x = s.x + s.side - side;
        if (flip_y) s.y = s.y + s.side - side;
        s.side = side;
    }

    /// Moves square i along one axis (0: x, 1: y) until it touches a wall
    /// or another square.
    void slide(std::size_t i, int axis, int dir) {
        auto& s = state_[i];
        double& coord = axis == 0 ? s.x : s.y;
        const double s_other = axis == 0 ? s.y : s.x;
        double target = dir < 0 ? 0.0 : 1.0 - s.side;
        for (std::size_t j = 0; j < state_.size(); ++j) {
            if (j == i) continue;
            const auto& t = state_[j];
            const double t_other = axis == 0 ? t.y : t.x;
            if (!(s_other < t_other + t.side && t_other < s_other + s.side)) continue;
            const double tlo = axis == 0 ? t.x : t.y;
            if (dir < 0 && tlo < coord) target = std::max(target, tlo + t.side);
            if (dir > 0 && tlo > coord) target = std::min(target, tlo - s.side);
        }
        coord = dir < 0 ? std::min(target, coord) : std::max(target, coord);
    }

    bool propose(std::size_t i, double scale) {
        auto& s = state_[i];
        const double r = unit_(rng_);
        if (r < cfg_.teleport_probability) {
            s.x = unit_(rng_);
            s.y = unit_(rng_);
            s.side = 0.0;
            const double side = max_side(i, false, false);
            if (!(side > 0.0)) return false;
            s.side = side * (0.5 + 0.5 * unit_(rng_));
            return fits(i);
        }
        const double rest = (r - cfg_.teleport_probability) / (1.0 - cfg_.teleport_probability);
        if (rest < 0.35) {
            s.x += scale * normal_(rng_);
            s.y += scale * normal_(rng_);
            return fits(i);
        }
        if (rest < 0.5) {
            slide(i, static_cast<int>(pick_(rng_) % 2), pick_(rng_) % 2 == 0 ? -1 : 1);
            return fits(i);
        }
        if (rest < 0.85) {
            const double side = s.side + scale * normal_(rng_);
            const bool fx = pick_(rng_) % 2 == 0;
            const bool fy = pick_(rng_) % 2 == 0;
            if (!(side > 0.0)) return false;
            set_side(i, side, fx, fy);
            return fits(i);
        }
        const bool fx = pick_(rng_) % 2 == 0;
        const bool fy = pick_(rng_) % 2 == 0;
        const double side = max_side(i, fx, fy);
        if (!(side > 0.0)) return false;
        set_side(i, side, fx, fy);
        return fits(i);
    }

    /// Bottom-left compaction followed by growth, repeated until stable.
    void polish() {
        for (int round = 0; round < 200; ++round) {
            const double before = sum();
            for (std::size_t i = 0; i < state_.size(); ++i) {
                for (int axis : {0, 1}) {
                    const FloatSquare keep = state_[i];
                    slide(i, axis, -1);
                    if (!fits(i)) state_[i] = keep;
                }
                const FloatSquare keep = state_[i];
                const double side = max_side(i, false, false);
                if (side > keep.side) {
                    set_side(i, side, false, false);
                    if (!fits(i)) state_[i] = keep;
                }
            }
            if (sum() <= before) break;
        }
    }

    const SearchConfig& cfg_;
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> unit_{0.0, 1.0};
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_int_distribution<std::uint64_t> pick_{};
    std::vector<FloatSquare> state_;
};

}  // namespace detail

/// Best packing of n squares over independent annealing restarts. Restarts
/// may run concurrently; the result depends only on the configuration
/// (largest total, ties to the smallest restart index).
inline FloatPacking optimize(std::int64_t n, const SearchConfig& cfg) {
    if (n < 1) throw std::invalid_argument("optimize: n must be positive");
    cfg.check();

    const auto restarts = static_cast<std::size_t>(cfg.restarts);
    std::vector<FloatPacking> results(restarts);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t r = next++; r < restarts; r = next++) {
            detail::Annealer annealer(static_cast<std::size_t>(n), cfg, r);
            results[r] = annealer.run();
            results[r].restart = static_cast<std::int64_t>(r);
        }
    };
    unsigned threads = cfg.threads != 0 ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, restarts));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    std::size_t best = 0;
    for (std::size_t r = 1; r < restarts; ++r)
        if (results[r].best_total > results[best].best_total) best = r;
    return results[best];
}

/// Snaps a float packing to the grid (1/D)Z, D = max_denominator, then
/// shrinks sides until the packing is exactly valid. Throws
/// std::domain_error when some square cannot keep a positive side.
inline Packing rationalize(const FloatPacking& fp, std::int64_t max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("rationalize: denominator bound must be positive");
    const double scale = static_cast<double>(max_denominator);
    auto snap = [&](double v, std::int64_t lo, std::int64_t hi) {
        auto units = static_cast<std::int64_t>(std::llround(v * scale));
        return Rational(std::clamp(units, lo, hi), max_denominator);
    };

    Packing p;
    for (const auto& s : fp.squares) {
        Square q;
        q.x = snap(s.x, 0, max_denominator - 1);
        q.y = snap(s.y, 0, max_denominator - 1);
        q.side = snap(s.side, 1, max_denominator);
        q.side = min(q.side, min(Rational(1) - q.x, Rational(1) - q.y));
        p.squares.push_back(q);
    }

    // Largest side for `s` that clears `t` by shrinking toward s's corner.
    auto clearance = [](const Square& s, const Square& t) -> Rational {
        Rational best(0);
        if (t.x > s.x) best = max(best, t.x - s.x);
        if (t.y > s.y) best = max(best, t.y - s.y);
        return best;
    };
    for (;;) {
        const auto pairs = overlapping_pairs(p.squares);
        if (pairs.empty()) break;
        const auto [i, j] = pairs.front();
        Square& a = p.squares[i];
        Square& b = p.squares[j];
        const Rational fit_a = clearance(a, b);
        const Rational fit_b = clearance(b, a);
        if (fit_a.sign() <= 0 && fit_b.sign() <= 0)
            throw std::domain_error("rationalize: squares " + std::to_string(i) + " and " +
                                    std::to_string(j) + " snap to the same corner");
        const bool shrink_a = fit_b.sign() <= 0 || (fit_a.sign() > 0 && a.side - fit_a <= b.side - fit_b);
        if (shrink_a)
            a.side = fit_a;
        else
            b.side = fit_b;
    }
    return p;
}

}  // namespace sqpack
