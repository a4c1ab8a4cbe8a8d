// A compact ladder system over a marked circle.  The base level is a circle
// carrying a fixed zero and a bi-infinite orbit z_i -> z_{i+1}.  Above it,
// ladder n (n >= 1) has rungs indexed j = 2^n .. 2^{n+1} at height
// h(n, j) = (2^{n+3} - j) / 2^{3n+3}, each rung a copy of the column indices
// i = -n .. n.  A top level at height 2 carries the arc points (z_{-n}, 2)
// and a fixed point above zero.
//
// The step map climbs a rung one column at a time, hops from the top of rung
// j to the bottom of rung j+1, walks the top arcs inward, and rotates the
// base.  Two successors are genuinely ambiguous in this model, the top rung
// of each ladder and the innermost top-arc point, and stepping them raises
// IndexOutOfRangeError rather than guessing.
//
// Heights are exact rationals; with n <= 19 the denominators stay inside
// int64.

#ifndef VDWLAB_LADDER_HPP
#define VDWLAB_LADDER_HPP

#include <cstdint>
#include <string>

#include "vdwlab/errors.hpp"
#include "vdwlab/rational.hpp"

namespace vdwlab {

inline Rat rung_height(unsigned n, std::uint64_t j) {
    if (n < 1 || n > 19) throw UsageError("rung height defined for n in 1..19");
    if (j < (std::uint64_t{1} << n) || j > (std::uint64_t{1} << (n + 1)))
        throw UsageError("rung index j must lie in [2^n, 2^(n+1)]");
    std::int64_t num = (std::int64_t{1} << (n + 3)) - static_cast<std::int64_t>(j);
    return Rat(num, std::int64_t{1} << (3 * n + 3));
}

struct LadderPoint {
    enum class Kind { base_zero, base, rung, top_arc, top_zero };

    Kind kind = Kind::base_zero;
    std::int64_t i = 0;  // base: which z_i; rung: column index in [-n, n]
    unsigned n = 0;      // rung: ladder number; top_arc: the point (z_{-n}, 2)
    std::uint64_t j = 0; // rung: rung number in [2^n, 2^(n+1)]

    static LadderPoint zero() { return {}; }
    static LadderPoint base(std::int64_t i) { return {Kind::base, i, 0, 0}; }
    static LadderPoint rung(unsigned n, std::uint64_t j, std::int64_t i) {
        if (n < 1 || n > 19) throw UsageError("ladder number must be in 1..19");
        if (j < (std::uint64_t{1} << n) || j > (std::uint64_t{1} << (n + 1)))
            throw UsageError("rung index j must lie in [2^n, 2^(n+1)]");
        if (i < -static_cast<std::int64_t>(n) || i > static_cast<std::int64_t>(n))
            throw UsageError("column index must lie in [-n, n]");
        return {Kind::rung, i, n, j};
    }
    static LadderPoint top_arc(unsigned n) { return {Kind::top_arc, 0, n, 0}; }
    static LadderPoint top_zero() { return {Kind::top_zero, 0, 0, 0}; }

    bool operator==(const LadderPoint&) const = default;

    // Height coordinate: 0 on the base, h(n, j) on a rung, 2 on top.
    Rat height() const {
        switch (kind) {
            case Kind::base_zero:
            case Kind::base: return Rat(0);
            case Kind::rung: return rung_height(n, j);
            default: return Rat(2);
        }
    }

    std::string str() const {
        switch (kind) {
            case Kind::base_zero: return "zero";
            case Kind::base: return "base:" + std::to_string(i);
            case Kind::rung:
                return "rung(n=" + std::to_string(n) + ",j=" + std::to_string(j) +
                       ",i=" + std::to_string(i) + ")";
            case Kind::top_arc: return "top-arc:" + std::to_string(n);
            default: return "top-zero";
        }
    }
};

inline LadderPoint step(const LadderPoint& p) {
    switch (p.kind) {
        case LadderPoint::Kind::base_zero: return p;
        case LadderPoint::Kind::base: return LadderPoint::base(p.i + 1);
        case LadderPoint::Kind::rung:
            if (p.i < static_cast<std::int64_t>(p.n))
                return LadderPoint::rung(p.n, p.j, p.i + 1);
            if (p.j < (std::uint64_t{1} << (p.n + 1)))
                return LadderPoint::rung(p.n, p.j + 1, -static_cast<std::int64_t>(p.n));
            throw IndexOutOfRangeError("top rung of ladder " + std::to_string(p.n) +
                                       " has no unambiguous successor");
        case LadderPoint::Kind::top_arc:
            if (p.n >= 1) return LadderPoint::top_arc(p.n - 1);
            throw IndexOutOfRangeError("innermost top-arc point has no unambiguous successor");
        default: return p; // top fixed point
    }
}

inline LadderPoint step_many(LadderPoint p, std::uint64_t count) {
    for (std::uint64_t k = 0; k < count; ++k) p = step(p);
    return p;
}

// Membership in the shrinking neighborhoods of column m on the base: the
// points (z_m, y) with y <= 4^(-N).
inline bool in_column_ball(const LadderPoint& p, std::int64_t m, unsigned N) {
    if (N > 31) throw UsageError("ball exponent must be at most 31");
    Rat radius(1, std::int64_t{1} << (2 * N));
    switch (p.kind) {
        case LadderPoint::Kind::base: return p.i == m;
        case LadderPoint::Kind::rung: return p.i == m && p.height() <= radius;
        default: return false;
    }
}

} // namespace vdwlab

#endif
