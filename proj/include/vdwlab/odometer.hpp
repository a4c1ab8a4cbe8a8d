// Block-coordinate decoding for the depth-1 substitution (1 -> 1101,
// 0 -> 0101).  Both fixed points are concatenations of the two length-4
// images, and the word "110" occurs exactly at the start of a 1101 block:
// inside 1101 and 0101 no other window begins 110, and across a seam the
// possible two-block windows never produce it.  The residue mod 4 of the
// marker occurrences therefore reveals the block alignment of any point in
// the orbit closure, and the sequence of block types is again a point of the
// same kind, so alignment extraction recurses: level n of the recursion
// recovers the shift modulo 4^n.
//
// decode_offsets(y, levels) returns (j_1, ..., j_levels) with
// j_n = shift mod 4^n, computed from a prefix only; inputs that cannot be
// parsed as aligned blocks raise UndecodableError.

#ifndef VDWLAB_ODOMETER_HPP
#define VDWLAB_ODOMETER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vdwlab/errors.hpp"
#include "vdwlab/sequence.hpp"
#include "vdwlab/word.hpp"

namespace vdwlab {

namespace detail {

inline std::uint64_t marker_residue(const Word& prefix) {
    bool seen = false;
    std::uint64_t residue = 0;
    for (std::size_t i = 0; i + 3 <= prefix.size(); ++i) {
        if (prefix.compare(i, 3, "110") != 0) continue;
        std::uint64_t r = i % 4;
        if (!seen) {
            residue = r;
            seen = true;
        } else if (r != residue) {
            throw UndecodableError("marker occurrences disagree mod 4");
        }
    }
    if (!seen) throw UndecodableError("no 110 marker in the prefix");
    return residue;
}

inline Word block_types(const Word& prefix, std::uint64_t skip) {
    Word types;
    for (std::uint64_t m = skip; m + 4 <= prefix.size(); m += 4) {
        if (prefix.compare(m, 4, "1101") == 0)
            types.push_back('1');
        else if (prefix.compare(m, 4, "0101") == 0)
            types.push_back('0');
        else
            throw UndecodableError("chunk at " + std::to_string(m) +
                                   " is neither 1101 nor 0101");
    }
    return types;
}

} // namespace detail

// The shift offsets mod 4, 16, ..., 4^levels of a point in the orbit closure
// of the depth-1 substitution, read off a prefix.
inline std::vector<std::uint64_t> decode_offsets(const Word& prefix, unsigned levels) {
    if (levels == 0) return {};
    std::uint64_t p0 = detail::marker_residue(prefix);
    Word types = detail::block_types(prefix, p0);
    std::vector<std::uint64_t> below =
        levels > 1 ? decode_offsets(types, levels - 1) : std::vector<std::uint64_t>{};
    // The point's shift j satisfies j + p0 = 4 j', where j' is the shift of
    // the type sequence; reduce modulo 4^n level by level.
    std::vector<std::uint64_t> out(levels);
    std::uint64_t mod = 4;
    out[0] = (mod - p0) % mod;
    for (unsigned n = 2; n <= levels; ++n) {
        mod *= 4;
        out[n - 1] = (4 * below[n - 2] + mod - p0) % mod;
    }
    return out;
}

inline std::vector<std::uint64_t> decode_offsets(const Sequence& y, unsigned levels) {
    std::uint64_t need = 64;
    for (unsigned n = 0; n < levels; ++n) {
        if (need > global_horizon_cap() / 4)
            throw UsageError("decode depth needs a prefix beyond the horizon cap");
        need *= 4;
    }
    return decode_offsets(y.prefix_word(need), levels);
}

// Coordinatewise add-one with carry threshold 4^n per level, the successor
// map the decoder is equivariant for: decode(shift(y)) = successor(decode(y)).
inline std::vector<std::uint64_t> odometer_successor(std::vector<std::uint64_t> j) {
    std::uint64_t mod = 4;
    for (auto& v : j) {
        v = (v + 1) % mod;
        mod *= 4;
    }
    return j;
}

} // namespace vdwlab

#endif
