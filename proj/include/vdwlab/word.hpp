// Finite words over small digit alphabets.
//
// Words are plain std::string values over the characters '0', '1', '2'; this
// matches their external representation (ASCII digit strings) and keeps all of
// <algorithm> available.  Admissibility oracles mostly care about where the
// nonzero symbols sit, so we also provide a sparse form: a length plus the
// sorted positions of a single marked symbol.  The sparse form is the only
// practical representation for the padded-power witnesses, whose lengths reach
// several hundred million symbols while carrying fewer than fifty marks.

#ifndef VDWLAB_WORD_HPP
#define VDWLAB_WORD_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "vdwlab/errors.hpp"

namespace vdwlab {

using Word = std::string;

inline bool is_word_over(const Word& w, int alphabet_size) {
    return std::all_of(w.begin(), w.end(), [&](char c) {
        return c >= '0' && c < static_cast<char>('0' + alphabet_size);
    });
}

inline void require_word(const Word& w, int alphabet_size = 3) {
    if (!is_word_over(w, alphabet_size))
        throw UnknownSymbolError("word \"" + w + "\" is not over the 0.." +
                                 std::to_string(alphabet_size - 1) + " alphabet");
}

// Positions of a given symbol, in increasing order.
inline std::vector<std::uint64_t> positions_of(const Word& w, char symbol) {
    std::vector<std::uint64_t> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == symbol) out.push_back(i);
    return out;
}

inline std::vector<std::uint64_t> ones_of(const Word& w) { return positions_of(w, '1'); }

// A long, mostly-zero word: total length, the marked symbol, and the sorted
// positions where that symbol occurs.  Everything else is '0'.
struct SparseWord {
    std::uint64_t length = 0;
    char mark = '1';
    std::vector<std::uint64_t> positions; // strictly increasing, all < length

    bool consistent() const {
        if (!std::is_sorted(positions.begin(), positions.end())) return false;
        if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) return false;
        return positions.empty() || positions.back() < length;
    }

    // Materializes the word.  Guarded: the sparse form exists precisely so that
    // witnesses of astronomical length never have to be written out.
    Word to_text(std::uint64_t cap = 1u << 24) const {
        if (length > cap)
            throw MemberCapExceededError("sparse word of length " + std::to_string(length) +
                                         " exceeds materialization cap " + std::to_string(cap));
        Word w(static_cast<std::size_t>(length), '0');
        for (auto p : positions) w[static_cast<std::size_t>(p)] = mark;
        return w;
    }

    static SparseWord from_text(const Word& w, char mark = '1') {
        SparseWord s;
        s.length = w.size();
        s.mark = mark;
        s.positions = positions_of(w, mark);
        return s;
    }
};

// Overlay copies of `w` at the given offsets over a zero background, failing if
// two copies disagree on a shared position.  Returns the merged word, whose
// length is max(offset + |w|).  Offsets need not be sorted or distinct.
inline bool merge_copies(const Word& w, const std::vector<std::uint64_t>& offsets, Word& out) {
    std::uint64_t len = 0;
    for (auto o : offsets) len = std::max(len, o + w.size());
    out.assign(static_cast<std::size_t>(len), '0');
    std::vector<bool> fixed(static_cast<std::size_t>(len), false);
    for (auto o : offsets)
        for (std::size_t i = 0; i < w.size(); ++i) {
            std::size_t at = static_cast<std::size_t>(o) + i;
            if (fixed[at] && out[at] != w[i]) return false;
            out[at] = w[i];
            fixed[at] = true;
        }
    return true;
}

// Sparse analogue of merge_copies: the union of mark positions of copies of a
// word placed at the given offsets.  Consistency cannot fail over a zero
// background when all copies are identical, because overlapping copies either
// agree on a position or one contributes the mark and the other a zero; the
// latter is a real conflict, so we detect it the same way as the dense path.
inline bool merge_copies_sparse(std::uint64_t word_len,
                                const std::vector<std::uint64_t>& marks_in_word,
                                const std::vector<std::uint64_t>& offsets,
                                SparseWord& out) {
    out.positions.clear();
    out.length = 0;
    for (auto o : offsets) out.length = std::max(out.length, o + word_len);
    for (auto o : offsets)
        for (auto m : marks_in_word) out.positions.push_back(o + m);
    std::sort(out.positions.begin(), out.positions.end());
    out.positions.erase(std::unique(out.positions.begin(), out.positions.end()),
                        out.positions.end());
    // A conflict arises iff some copy has a zero where another copy has a mark.
    for (auto o : offsets) {
        auto lo = std::lower_bound(out.positions.begin(), out.positions.end(), o);
        auto hi = std::lower_bound(out.positions.begin(), out.positions.end(), o + word_len);
        if (static_cast<std::size_t>(hi - lo) != marks_in_word.size()) return false;
    }
    return true;
}

} // namespace vdwlab

#endif
