#pragma once

// Overlap witnesses shared by both refutation engines.

#include "sqpack/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sqpack {

enum class Engine { sweep, lattice };

inline const char* to_string(Engine e) { return e == Engine::sweep ? "sweep" : "lattice"; }

/// A point lying in two distinct squares of a claimed packing.
struct OverlapWitness {
    Rational px;
    Rational py;
    std::size_t first = 0;
    std::size_t second = 0;
    Engine engine = Engine::sweep;

    /// Exact membership of the point in both named squares.
    bool holds_for(const std::vector<Square>& squares) const {
        return first != second && first < squares.size() && second < squares.size() &&
               squares[first].contains(px, py) && squares[second].contains(px, py);
    }
};

/// A refutation input that does not meet its hypotheses.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks the shared hypotheses of both engines: k^2 + 1 squares with
/// positive sides inside the unit square whose sides sum to more than k.
inline void require_overfull(const std::vector<Square>& squares, std::int64_t k) {
    if (k < 1) throw PreconditionError("k must be positive");
    const auto expected = static_cast<std::size_t>(k * k + 1);
    if (squares.size() != expected)
        throw PreconditionError("expected " + std::to_string(expected) + " squares for k = " +
                                std::to_string(k) + ", got " + std::to_string(squares.size()));
    Rational total;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (squares[i].side.sign() <= 0)
            throw PreconditionError("square " + std::to_string(i) + " has nonpositive side");
        if (!squares[i].in_unit_square())
            throw PreconditionError("square " + std::to_string(i) + " leaves the unit square");
        total += squares[i].side;
    }
    if (total <= Rational(k))
        throw PreconditionError("total side length " + total.str() + " does not exceed k = " +
                                std::to_string(k));
}

}  // namespace sqpack
