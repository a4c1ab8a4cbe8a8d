// Finite-horizon oracles for the shift spaces the toolkit works with.  Each
// oracle decides admissibility of finite words, extends admissible words to
// eventually-zero points when the space allows it, and computes transfer sets
// N(u, v) = { n >= 1 : some point lies in [u] and lands in [v] after n shifts }
// restricted to a window.
//
// Verdicts are three-valued.  "yes" and "no" are exact.  "no_at_confidence"
// means the word was not found below the oracle's search horizon; it is the
// honest answer for orbit closures, where absence from a prefix proves
// nothing about the full language.
//
// The marked kinds (spacing, density budget, gap patterns) share a useful
// monotonicity: erasing marks never breaks admissibility.  Transfer sets for
// those kinds therefore reduce to testing the all-zero filling between u and
// v, and for the gap-pattern kinds the bad fillings are computed in closed
// form instead of by scanning.

#ifndef VDWLAB_SUBSHIFT_HPP
#define VDWLAB_SUBSHIFT_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vdwlab/budget.hpp"
#include "vdwlab/errors.hpp"
#include "vdwlab/natset.hpp"
#include "vdwlab/sequence.hpp"
#include "vdwlab/substitution.hpp"
#include "vdwlab/word.hpp"

namespace vdwlab {

enum class Trilean { yes, no, no_at_confidence };

inline const char* to_string(Trilean t) {
    switch (t) {
        case Trilean::yes: return "yes";
        case Trilean::no: return "no";
        default: return "no_at_confidence";
    }
}

struct Admissibility {
    Trilean verdict = Trilean::no;
    std::optional<std::uint64_t> occurrence; // closures: offset of the word in the reference point
    std::string reason;                      // certificate text for a "no"

    bool yes() const { return verdict == Trilean::yes; }
};

class Subshift {
public:
    virtual ~Subshift() = default;

    const std::string& id() const { return id_; }
    const std::string& alphabet() const { return alphabet_; }
    char mark() const { return mark_; }

    Admissibility admissible(const Word& w) const {
        for (char c : w)
            if (alphabet_.find(c) == std::string::npos)
                return {Trilean::no, std::nullopt,
                        std::string("symbol '") + c + "' outside alphabet " + alphabet_};
        return check(w);
    }

    virtual Admissibility admissible_sparse(const SparseWord& s) const {
        return admissible(s.to_text());
    }

    // The point w00... when the oracle's space is closed under zero
    // extension.  Inadmissible seeds are an error; kinds whose points are
    // never eventually zero return nothing.
    virtual std::optional<Sequence> zero_extension_point(const Word& w) const {
        Admissibility a = admissible(w);
        if (a.verdict == Trilean::no) throw NotAdmissibleError(w);
        if (a.verdict == Trilean::no_at_confidence) return std::nullopt;
        return Sequence::word_then_zeros(w);
    }

    virtual WindowSet transfer_set(const Word& u, const Word& v, std::uint64_t horizon) const;

protected:
    Subshift(std::string id, std::string alphabet, char mark)
        : id_(std::move(id)), alphabet_(std::move(alphabet)), mark_(mark) {}

    virtual Admissibility check(const Word& w) const = 0;

private:
    std::string id_;
    std::string alphabet_;
    char mark_;
};

// ---------------------------------------------------------------------------
// Full shift on k symbols.

class FullShift final : public Subshift {
public:
    explicit FullShift(unsigned symbols = 2)
        : Subshift(symbols == 2 ? "full" : "full:" + std::to_string(symbols),
                   make_alphabet(symbols), '1') {
        if (symbols < 2 || symbols > 9) throw UsageError("full shift supports 2..9 symbols");
    }

    WindowSet transfer_set(const Word& u, const Word& v, std::uint64_t horizon) const override;

protected:
    Admissibility check(const Word&) const override { return {Trilean::yes, std::nullopt, ""}; }

private:
    static std::string make_alphabet(unsigned symbols) {
        std::string a;
        for (unsigned i = 0; i < symbols && i < 10; ++i) a.push_back(static_cast<char>('0' + i));
        return a;
    }
};

// ---------------------------------------------------------------------------
// Kinds whose words are determined by the positions of a single mark symbol.
// Admissibility is a predicate on (length, mark positions); erasing marks
// never hurts, which the shared transfer-set machinery relies on.

class MarkSubshift : public Subshift {
public:
    Admissibility admissible_sparse(const SparseWord& s) const override {
        if (!s.consistent()) throw UsageError("sparse word positions out of range or unsorted");
        if (s.mark != mark())
            return {Trilean::no, std::nullopt,
                    std::string("mark '") + s.mark + "' outside alphabet " + alphabet()};
        return check_positions(s.length, s.positions);
    }

    virtual Admissibility check_positions(std::uint64_t length,
                                          const Members& marks) const = 0;

    WindowSet transfer_set(const Word& u, const Word& v, std::uint64_t horizon) const override;

protected:
    using Subshift::Subshift;

    Admissibility check(const Word& w) const override {
        Members pos;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != '0') pos.push_back(i);
        return check_positions(w.size(), pos);
    }
};

// ---------------------------------------------------------------------------
// Spacing shifts over the cube-growth interval system.  Terms follow
// n_1 = 2, n_{k+1} = n_k^3; block k is the interval [n_k, n_k^2].  The even
// side unions blocks 2, 4, ... and marks with '1'; the odd side unions
// blocks 3, 5, ... and marks with '2'.  A word is admissible when every
// difference of two mark positions lies in the side's union.

enum class SpacingSide { even, odd };

using u128 = unsigned __int128;

inline std::vector<u128> cube_terms(u128 bound) {
    // Terms n_k not exceeding bound; growth is cubic so the list is tiny.
    std::vector<u128> t;
    u128 n = 2;
    while (n <= bound) {
        t.push_back(n);
        if (n > u128(1) << 42) break; // n^3 would leave the representable range
        n = n * n * n;
    }
    return t;
}

class CubeSpacingShift final : public MarkSubshift {
public:
    explicit CubeSpacingShift(SpacingSide side)
        : MarkSubshift(side == SpacingSide::even ? "spacing-even" : "spacing-odd",
                       side == SpacingSide::even ? "01" : "02",
                       side == SpacingSide::even ? '1' : '2'),
          side_(side) {
        auto terms = cube_terms(u128(1) << 100);
        for (std::size_t k = 1; k <= terms.size(); ++k) {
            bool even = (k % 2 == 0);
            if ((side == SpacingSide::even) != even) continue;
            if (k < 2) continue; // block 1 belongs to neither side
            u128 lo = terms[k - 1];
            // The fifth block's upper end n_5^2 = 2^162 does not fit in 128
            // bits; every representable gap lies below it, so the endpoint
            // saturates without changing any answer.
            u128 hi = lo <= u128(1) << 63 ? lo * lo : ~u128{0};
            intervals_.push_back({lo, hi});
        }
    }

    SpacingSide side() const { return side_; }
    const std::vector<std::pair<u128, u128>>& intervals() const { return intervals_; }

    bool gap_allowed(u128 g) const {
        for (const auto& [a, b] : intervals_)
            if (a <= g && g <= b) return true;
        return false;
    }

    Admissibility check_positions(std::uint64_t, const Members& marks) const override {
        for (std::size_t i = 0; i < marks.size(); ++i)
            for (std::size_t j = i + 1; j < marks.size(); ++j)
                if (!gap_allowed(marks[j] - marks[i]))
                    return {Trilean::no, std::nullopt,
                            "mark gap " + std::to_string(marks[j] - marks[i]) +
                                " not in the spacing set"};
        return {Trilean::yes, std::nullopt, ""};
    }

private:
    SpacingSide side_;
    std::vector<std::pair<u128, u128>> intervals_;
};

// ---------------------------------------------------------------------------
// Density budget shifts: every window of length p carries at most f(p) marks.
// For a nondecreasing budget this is equivalent to the pairwise condition
// j - i + 1 <= f(s_j - s_i + 1) over mark positions s_i <= s_j, which needs
// no window scan and works directly on sparse words.

class BoundedDensityShift final : public MarkSubshift {
public:
    explicit BoundedDensityShift(Budget f)
        : MarkSubshift("budget:" + f.id(), "01", '1'), f_(std::move(f)) {}

    const Budget& budget() const { return f_; }

    Admissibility check_positions(std::uint64_t, const Members& marks) const override {
        for (std::size_t i = 0; i < marks.size(); ++i)
            for (std::size_t j = i; j < marks.size(); ++j) {
                std::uint64_t span = marks[j] - marks[i] + 1;
                std::uint64_t count = j - i + 1;
                if (count > f_(span))
                    return {Trilean::no, std::nullopt,
                            std::to_string(count) + " marks in a window of length " +
                                std::to_string(span) + " exceeds budget " +
                                std::to_string(f_(span))};
            }
        return {Trilean::yes, std::nullopt, ""};
    }

private:
    Budget f_;
};

// ---------------------------------------------------------------------------
// Gap-pattern shifts: adjacent marks are forbidden, together with one of two
// triple families over mark positions a < b < c:
//
//   equal_gaps  forbids b - a = c - b
//   pq_family   forbids b - a = sum of p_i and c - a = sum of q_i over the
//               same finite index set
//
// The pattern alphabet writes these as 1u1v1 with nonempty inner blocks u, v
// by default; allowing empty blocks changes no verdict because the adjacent
// pair is banned separately, so the flag is cosmetic.
//
// Default pq generators are p_k = 2^(k-1), q_k = 4^k.  The p side is
// superincreasing (each term beats the sum of everything before it), so a
// difference b - a decomposes as a sum of distinct p_i in at most one way and
// greedy decomposition finds it; the same holds for the q - p side, which the
// boundary certificates below rely on.  Custom generators must satisfy both
// properties and are rejected otherwise.

class GapPatternShift final : public MarkSubshift {
public:
    enum class Family { equal_gaps, pq_family };

    static GapPatternShift equal_gaps(bool allow_empty_inner = false) {
        return GapPatternShift(Family::equal_gaps, {}, {}, allow_empty_inner,
                               allow_empty_inner ? "ap-free:allow-empty" : "ap-free");
    }

    static GapPatternShift pq_family() {
        Members p, q;
        // 31 terms keep q_k = 4^k within 2^62.
        for (unsigned k = 1; k <= 31; ++k) {
            p.push_back(std::uint64_t{1} << (k - 1));
            q.push_back(std::uint64_t{1} << (2 * k));
        }
        return GapPatternShift(Family::pq_family, std::move(p), std::move(q), false, "ip-free");
    }

    static GapPatternShift pq_family(Members p, Members q) {
        if (p.size() != q.size() || p.empty())
            throw UsageError("pq family needs matching nonempty generator lists");
        if (p.front() == 0) throw UsageError("pq family needs positive generators");
        std::uint64_t psum = 0, dsum = 0;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (q[i] <= p[i]) throw UsageError("pq family needs q[k] > p[k]");
            if (i > 0 && p[i] <= psum)
                throw UsageError("pq family needs a superincreasing p side");
            if (i > 0 && q[i] - p[i] <= dsum)
                throw UsageError("pq family needs a superincreasing q - p side");
            psum += p[i];
            dsum += q[i] - p[i];
        }
        return GapPatternShift(Family::pq_family, std::move(p), std::move(q), false,
                               "ip-free:custom");
    }

    Family family() const { return family_; }
    const Members& p_gens() const { return p_; }
    const Members& q_gens() const { return q_; }

    Admissibility check_positions(std::uint64_t, const Members& marks) const override {
        // Only the equal-gaps family forbids bare adjacency; the pq family
        // forbids three-mark patterns and nothing shorter.  With adjacency
        // rejected here, equal-gaps inner blocks are never empty and the
        // convention flag cannot change any verdict.  On the pq side the
        // empty-inner-block patterns are ordinary triples with p-sum 1 and
        // the decomposition below finds them.
        if (family_ == Family::equal_gaps)
            for (std::size_t i = 1; i < marks.size(); ++i)
                if (marks[i] == marks[i - 1] + 1)
                    return {Trilean::no, std::nullopt,
                            "adjacent marks at " + std::to_string(marks[i - 1]) + "," +
                                std::to_string(marks[i])};
        if (auto t = bad_triple(marks))
            return {Trilean::no, std::nullopt,
                    "forbidden triple " + std::to_string((*t)[0]) + "," +
                        std::to_string((*t)[1]) + "," + std::to_string((*t)[2])};
        return {Trilean::yes, std::nullopt, ""};
    }

    // Greedy decomposition of target as a sum of distinct terms of seq; for a
    // superincreasing seq the representation is unique when it exists.
    static std::optional<std::vector<std::size_t>> decompose(std::uint64_t target,
                                                             const Members& seq) {
        std::vector<std::size_t> picked;
        for (std::size_t k = seq.size(); k-- > 0 && target > 0;)
            if (seq[k] <= target) {
                picked.push_back(k);
                target -= seq[k];
            }
        if (target != 0) return std::nullopt;
        std::reverse(picked.begin(), picked.end());
        return picked;
    }

    // The q-sum paired with a given p-sum: decomposes d1 over the p side and
    // sums the matching q terms.  Nothing if d1 is not a sum of distinct p_i.
    std::optional<std::uint64_t> paired_q_sum(std::uint64_t d1) const {
        auto alpha = decompose(d1, p_);
        if (!alpha) return std::nullopt;
        std::uint64_t s = 0;
        for (auto k : *alpha) s += q_[k];
        return s;
    }

    // The p-sum paired with a given (q - p)-sum, used by the boundary
    // certificate where c - b = sum of (q_i - p_i) determines the index set.
    std::optional<std::uint64_t> paired_p_sum_from_diff(std::uint64_t dq) const {
        Members diff;
        diff.reserve(p_.size());
        for (std::size_t i = 0; i < p_.size(); ++i) diff.push_back(q_[i] - p_[i]);
        auto alpha = decompose(dq, diff);
        if (!alpha) return std::nullopt;
        std::uint64_t s = 0;
        for (auto k : *alpha) s += p_[k];
        return s;
    }

    std::optional<std::array<std::uint64_t, 3>> bad_triple(const Members& marks) const {
        if (family_ == Family::equal_gaps) {
            for (std::size_t i = 0; i < marks.size(); ++i)
                for (std::size_t j = i + 1; j < marks.size(); ++j) {
                    std::uint64_t c = 2 * marks[j] - marks[i];
                    if (std::binary_search(marks.begin(), marks.end(), c))
                        return std::array<std::uint64_t, 3>{marks[i], marks[j], c};
                }
            return std::nullopt;
        }
        for (std::size_t i = 0; i < marks.size(); ++i)
            for (std::size_t j = i + 1; j < marks.size(); ++j) {
                auto qsum = paired_q_sum(marks[j] - marks[i]);
                if (!qsum) continue;
                std::uint64_t c = marks[i] + *qsum;
                if (std::binary_search(marks.begin(), marks.end(), c))
                    return std::array<std::uint64_t, 3>{marks[i], marks[j], c};
            }
        return std::nullopt;
    }

    // Zero gaps g for which the word  u 0^g v  contains a forbidden pattern,
    // assuming u and v are themselves admissible.  Exact and finite: every
    // violating triple either crosses the boundary (closed forms below) or
    // sits inside u or v.
    std::vector<std::uint64_t> bad_zero_gaps(const Word& u, const Word& v) const {
        Members up = positions_of_nonzero(u), vp = positions_of_nonzero(v);
        std::set<std::uint64_t> bad;
        std::uint64_t ul = u.size();
        auto add = [&](std::int64_t g) {
            if (g >= 0) bad.insert(static_cast<std::uint64_t>(g));
        };
        if (family_ == Family::equal_gaps && !up.empty() && !vp.empty() &&
            up.back() == ul - 1 && vp.front() == 0)
            bad.insert(0); // marks meet across the seam
        if (family_ == Family::equal_gaps) {
            for (auto a : up)
                for (auto b : up)
                    if (a < b)
                        for (auto c : vp)
                            add(static_cast<std::int64_t>(2 * b) - static_cast<std::int64_t>(a) -
                                static_cast<std::int64_t>(c) - static_cast<std::int64_t>(ul));
            for (auto a : up)
                for (auto b : vp)
                    for (auto c : vp)
                        if (b < c)
                            add(static_cast<std::int64_t>(a) + static_cast<std::int64_t>(c) -
                                static_cast<std::int64_t>(2 * b) - static_cast<std::int64_t>(ul));
        } else {
            for (auto a : up)
                for (auto b : up)
                    if (a < b) {
                        auto qsum = paired_q_sum(b - a);
                        if (!qsum) continue;
                        for (auto c : vp)
                            add(static_cast<std::int64_t>(a) +
                                static_cast<std::int64_t>(*qsum) -
                                static_cast<std::int64_t>(ul) - static_cast<std::int64_t>(c));
                    }
            for (auto a : up)
                for (auto b : vp)
                    for (auto c : vp)
                        if (b < c) {
                            auto psum = paired_p_sum_from_diff(c - b);
                            if (!psum) continue;
                            add(static_cast<std::int64_t>(a) + static_cast<std::int64_t>(*psum) -
                                static_cast<std::int64_t>(ul) - static_cast<std::int64_t>(b));
                        }
        }
        return {bad.begin(), bad.end()};
    }

    WindowSet transfer_set(const Word& u, const Word& v, std::uint64_t horizon) const override;

private:
    GapPatternShift(Family f, Members p, Members q, bool allow_empty, std::string id)
        : MarkSubshift(std::move(id), "01", '1'),
          family_(f),
          p_(std::move(p)),
          q_(std::move(q)),
          allow_empty_inner_(allow_empty) {}

    static Members positions_of_nonzero(const Word& w) {
        Members pos;
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] != '0') pos.push_back(i);
        return pos;
    }

    Family family_;
    Members p_, q_;
    bool allow_empty_inner_;
};

// ---------------------------------------------------------------------------
// Orbit closure of the depth-d substitution fixed point.  Admissibility is
// decided by searching a prefix of the fixed point; a hit is exact, a miss is
// only a statement about that prefix.

class SubstitutionClosureShift final : public Subshift {
public:
    explicit SubstitutionClosureShift(unsigned depth, std::uint64_t prefix_factor = 64)
        : Subshift("closure:d=" + std::to_string(depth), "01", '1'),
          depth_(depth),
          prefix_factor_(prefix_factor),
          point_(Sequence::substitution_fixed_point(depth_substitution(depth), '1')) {}

    unsigned depth() const { return depth_; }
    const Sequence& point() const { return point_; }

    std::uint64_t confidence_prefix(std::uint64_t word_len) const {
        std::uint64_t want = prefix_factor_ * std::max<std::uint64_t>(word_len, 1) + 4096;
        return std::min<std::uint64_t>(want, global_horizon_cap());
    }

    std::optional<Sequence> zero_extension_point(const Word& w) const override {
        Admissibility a = admissible(w);
        if (a.verdict == Trilean::no) throw NotAdmissibleError(w);
        return std::nullopt; // points here are never eventually zero
    }

    WindowSet transfer_set(const Word& u, const Word& v, std::uint64_t horizon) const override;

protected:
    Admissibility check(const Word& w) const override {
        if (w.empty()) return {Trilean::yes, std::nullopt, ""};
        std::uint64_t limit = confidence_prefix(w.size());
        auto occ = occurrences(point_, w, limit > w.size() ? limit - w.size() : 0);
        if (!occ.empty()) return {Trilean::yes, occ.front(), ""};
        return {Trilean::no_at_confidence, std::nullopt,
                "absent from the first " + std::to_string(limit) + " symbols"};
    }

private:
    unsigned depth_;
    std::uint64_t prefix_factor_;
    Sequence point_;
};

// ---------------------------------------------------------------------------
// Transfer-set implementations.

namespace detail {

// Runs representation of [1, horizon] minus a sorted list of excluded n.
inline WindowSet runs_minus(std::uint64_t horizon, const std::vector<std::uint64_t>& excluded) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
    std::uint64_t next = 1;
    for (auto n : excluded) {
        if (n < next) continue;
        if (n > horizon) break;
        if (n > next) runs.push_back({next, n - 1});
        next = n + 1;
    }
    if (next <= horizon) runs.push_back({next, horizon});
    return WindowSet::of_runs(horizon, std::move(runs));
}

// Merge marks of u with marks of v shifted by n.  Fails when the overlap
// region disagrees about where marks sit.  Alphabet-level agreement reduces
// to mark agreement for the two-symbol kinds this serves.
inline bool merge_marks(const Members& up, std::uint64_t ul, const Members& vp, std::uint64_t vl,
                        std::uint64_t n, Members& out) {
    // Overlap consistency: inside [n, min(ul, n + vl)) both words speak and
    // their mark sets must agree.
    for (auto p : up)
        if (p >= n && p < n + vl &&
            !std::binary_search(vp.begin(), vp.end(), p - n))
            return false;
    for (auto q : vp)
        if (q + n < ul && !std::binary_search(up.begin(), up.end(), q + n)) return false;
    std::set<std::uint64_t> marks(up.begin(), up.end());
    for (auto q : vp) marks.insert(q + n);
    out.assign(marks.begin(), marks.end());
    return true;
}

} // namespace detail

inline WindowSet Subshift::transfer_set(const Word& u, const Word& v,
                                        std::uint64_t horizon) const {
    // Generic fallback: test the zero-filled (or overlapped) word for each n.
    // Correct for kinds where erasing marks preserves admissibility; the
    // kinds that need something else override.
    if (u.empty() || v.empty()) throw UsageError("transfer set needs nonempty words");
    Members members;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        Word filled(std::max<std::uint64_t>(u.size(), n + v.size()), '0');
        std::copy(u.begin(), u.end(), filled.begin());
        bool ok = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            char& slot = filled[n + i];
            if (slot != '0' && slot != v[i]) { ok = false; break; }
            slot = v[i];
        }
        if (!ok) continue;
        if (admissible(filled).yes()) members.push_back(n);
    }
    return WindowSet::of_members(horizon, std::move(members));
}

inline WindowSet FullShift::transfer_set(const Word& u, const Word& v,
                                         std::uint64_t horizon) const {
    if (u.empty() || v.empty()) throw UsageError("transfer set needs nonempty words");
    std::vector<std::uint64_t> excluded;
    for (std::uint64_t n = 1; n < u.size() && n <= horizon; ++n)
        for (std::size_t i = 0; i + n < u.size() && i < v.size(); ++i)
            if (u[i + n] != v[i]) {
                excluded.push_back(n);
                break;
            }
    return detail::runs_minus(horizon, excluded);
}

inline WindowSet MarkSubshift::transfer_set(const Word& u, const Word& v,
                                            std::uint64_t horizon) const {
    if (u.empty() || v.empty()) throw UsageError("transfer set needs nonempty words");
    if (!admissible(u).yes() || !admissible(v).yes())
        return WindowSet::of_members(horizon, {});
    Members up, vp;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != '0') up.push_back(i);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != '0') vp.push_back(i);
    Members members, merged;
    for (std::uint64_t n = 1; n <= horizon; ++n) {
        if (!detail::merge_marks(up, u.size(), vp, v.size(), n, merged)) continue;
        if (check_positions(std::max<std::uint64_t>(u.size(), n + v.size()), merged).yes())
            members.push_back(n);
    }
    return WindowSet::of_members(horizon, std::move(members));
}

inline WindowSet GapPatternShift::transfer_set(const Word& u, const Word& v,
                                               std::uint64_t horizon) const {
    if (u.empty() || v.empty()) throw UsageError("transfer set needs nonempty words");
    if (!admissible(u).yes() || !admissible(v).yes())
        return WindowSet::of_members(horizon, {});
    std::set<std::uint64_t> excluded;
    // Overlapping placements, n < |u|: decide each directly.
    Members up, vp, merged;
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] != '0') up.push_back(i);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != '0') vp.push_back(i);
    for (std::uint64_t n = 1; n < u.size() && n <= horizon; ++n) {
        if (!detail::merge_marks(up, u.size(), vp, v.size(), n, merged) ||
            !check_positions(std::max<std::uint64_t>(u.size(), n + v.size()), merged).yes())
            excluded.insert(n);
    }
    // Separated placements, n >= |u|: the certificate lists every bad gap.
    for (auto g : bad_zero_gaps(u, v)) {
        std::uint64_t n = u.size() + g;
        if (n >= 1 && n <= horizon) excluded.insert(n);
    }
    return detail::runs_minus(horizon, {excluded.begin(), excluded.end()});
}

inline WindowSet SubstitutionClosureShift::transfer_set(const Word& u, const Word& v,
                                                        std::uint64_t horizon) const {
    if (u.empty() || v.empty()) throw UsageError("transfer set needs nonempty words");
    // Occurrence-difference approximation inside a prefix of the reference
    // point: sound for membership, silent about n it fails to see.
    std::uint64_t limit = std::min<std::uint64_t>(
        global_horizon_cap(), 4 * horizon + confidence_prefix(u.size() + v.size()));
    auto occ_u = occurrences(point_, u, limit);
    auto occ_v = occurrences(point_, v, limit);
    std::set<std::uint64_t> seen;
    std::set<std::uint64_t> vset(occ_v.begin(), occ_v.end());
    for (auto a : occ_u)
        for (std::uint64_t n = 1; n <= horizon; ++n)
            if (vset.count(a + n)) seen.insert(n);
    return WindowSet::of_members(horizon, {seen.begin(), seen.end()});
}

// ---------------------------------------------------------------------------
// Descriptor parsing: the textual names used by the command line and the
// experiment configs.

inline std::unique_ptr<Subshift> make_subshift(const std::string& descriptor) {
    if (descriptor == "full") return std::make_unique<FullShift>(2);
    if (descriptor.rfind("full:", 0) == 0) {
        int k = std::stoi(descriptor.substr(5));
        return std::make_unique<FullShift>(static_cast<unsigned>(k));
    }
    if (descriptor == "spacing-even")
        return std::make_unique<CubeSpacingShift>(SpacingSide::even);
    if (descriptor == "spacing-odd")
        return std::make_unique<CubeSpacingShift>(SpacingSide::odd);
    if (descriptor == "ap-free")
        return std::make_unique<GapPatternShift>(GapPatternShift::equal_gaps());
    if (descriptor == "ap-free:allow-empty")
        return std::make_unique<GapPatternShift>(GapPatternShift::equal_gaps(true));
    if (descriptor == "ip-free")
        return std::make_unique<GapPatternShift>(GapPatternShift::pq_family());
    if (descriptor.rfind("budget:", 0) == 0) {
        std::string f = descriptor.substr(7);
        if (f == "identity") return std::make_unique<BoundedDensityShift>(Budget::identity());
        if (f.rfind("log", 0) == 0) {
            int base = std::stoi(f.substr(3));
            return std::make_unique<BoundedDensityShift>(
                Budget::log_base(static_cast<unsigned>(base)));
        }
        throw ParseError("unknown budget '" + f + "'");
    }
    if (descriptor.rfind("closure:d=", 0) == 0) {
        int d = std::stoi(descriptor.substr(10));
        if (d < 1 || d > 8) throw ParseError("closure depth out of range: " + descriptor);
        return std::make_unique<SubstitutionClosureShift>(static_cast<unsigned>(d));
    }
    throw ParseError("unknown subshift descriptor '" + descriptor + "'");
}

} // namespace vdwlab

#endif
