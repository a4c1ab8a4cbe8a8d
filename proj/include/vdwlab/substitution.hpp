// Constant-length substitutions and their one-sided fixed points.
//
// A substitution maps each symbol to a word; all images must share one length
// L >= 2, which keeps index arithmetic exact: symbol i of the image sequence
// is determined by symbol i/L of the argument.  Fixed points are generated by
// repeatedly substituting a prefix, so memory stays proportional to the
// requested length rather than to L^k.

#ifndef VDWLAB_SUBSTITUTION_HPP
#define VDWLAB_SUBSTITUTION_HPP

#include <array>
#include <cstdint>
#include <string>

#include "vdwlab/errors.hpp"
#include "vdwlab/word.hpp"

namespace vdwlab {

class Substitution {
public:
    // Rules for '0' and '1' (the library's substitutions are binary).
    Substitution(Word image_of_0, Word image_of_1)
        : images_{std::move(image_of_0), std::move(image_of_1)} {
        if (images_[0].size() != images_[1].size())
            throw UsageError("substitution images must share one length");
        if (images_[0].size() < 2)
            throw UsageError("substitution length must be at least 2");
        require_word(images_[0], 2);
        require_word(images_[1], 2);
    }

    std::size_t length() const { return images_[0].size(); }

    const Word& image(char symbol) const {
        if (symbol != '0' && symbol != '1')
            throw UnknownSymbolError(std::string(1, symbol));
        return images_[symbol - '0'];
    }

    Word apply(const Word& w) const {
        Word out;
        out.reserve(w.size() * length());
        for (char c : w) out += image(c);
        return out;
    }

    // First n symbols of the unique fixed point starting with `seed`, which
    // requires image(seed) to begin with seed.  Each round replaces the
    // current prefix by its image truncated to n, so the buffer never exceeds
    // n * length() transiently and the loop terminates because the prefix
    // grows by a factor of length() until it covers n.
    Word fixed_point_prefix(char seed, std::uint64_t n) const {
        if (image(seed)[0] != seed)
            throw SeedNotExtensibleError("image of '" + std::string(1, seed) +
                                         "' does not start with it");
        Word prefix(1, seed);
        while (prefix.size() < n) {
            prefix = apply(prefix);
            if (prefix.size() > n) prefix.resize(static_cast<std::size_t>(n));
        }
        prefix.resize(static_cast<std::size_t>(n));
        return prefix;
    }

private:
    std::array<Word, 2> images_;
};

// The depth-d family: images c a_1 ... a_{(d+1)^2-1} where a_j = 0 exactly
// when (d+1) divides j.  Depth 1 is {0 -> 0101, 1 -> 1101}.
inline Substitution depth_substitution(unsigned d) {
    if (d < 1) throw UsageError("depth must be at least 1");
    std::size_t L = static_cast<std::size_t>(d + 1) * (d + 1);
    std::string tail;
    for (std::size_t j = 1; j < L; ++j) tail += (j % (d + 1) == 0) ? '0' : '1';
    return Substitution("0" + tail, "1" + tail);
}

} // namespace vdwlab

#endif
