// Windowed subsets of the naturals and their combinatorial structure:
// arithmetic progressions, finite sums, syndetic gaps, thick runs, and the
// density estimators.  Everything here is exact; ratios are returned as
// rationals, never floats.
//
// Member lists are strictly increasing vectors of uint64.  Results about
// "is an AP-set" style questions are inherently horizon-relative; these
// functions only ever answer about the window they were handed, and callers
// are responsible for stamping the horizon onto any report.

#ifndef VDWLAB_NATSET_HPP
#define VDWLAB_NATSET_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "vdwlab/errors.hpp"
#include "vdwlab/rational.hpp"

namespace vdwlab {

using Members = std::vector<std::uint64_t>;

struct APWitness {
    std::uint64_t start = 0;
    std::uint64_t step = 1;
    std::uint64_t length = 1;

    bool operator==(const APWitness&) const = default;
};

// A subset of [0, horizon] stored either extensionally or as closed runs.
class WindowSet {
public:
    static WindowSet of_members(std::uint64_t horizon, Members members) {
        WindowSet s;
        s.horizon_ = horizon;
        s.members_ = std::move(members);
        s.sparse_ = true;
        s.validate();
        return s;
    }

    static WindowSet of_runs(std::uint64_t horizon,
                             std::vector<std::pair<std::uint64_t, std::uint64_t>> runs) {
        WindowSet s;
        s.horizon_ = horizon;
        s.runs_ = std::move(runs);
        s.sparse_ = false;
        s.validate();
        return s;
    }

    std::uint64_t horizon() const { return horizon_; }
    bool stores_members() const { return sparse_; }
    const Members& members() const {
        if (!sparse_) throw UsageError("window set stored as runs, not members");
        return members_;
    }
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& runs() const {
        if (sparse_) throw UsageError("window set stored as members, not runs");
        return runs_;
    }

    bool contains(std::uint64_t n) const {
        if (n > horizon_) return false;
        if (sparse_)
            return std::binary_search(members_.begin(), members_.end(), n);
        auto it = std::upper_bound(runs_.begin(), runs_.end(), n,
                                   [](std::uint64_t v, const auto& r) { return v < r.first; });
        return it != runs_.begin() && n <= std::prev(it)->second;
    }

    // True iff every n in [a, b] belongs to the set.
    bool covers(std::uint64_t a, std::uint64_t b) const {
        if (a > b) return true;
        if (b > horizon_) return false;
        if (sparse_) {
            auto lo = std::lower_bound(members_.begin(), members_.end(), a);
            if (lo == members_.end() || *lo != a) return false;
            std::uint64_t need = b - a + 1;
            if (static_cast<std::uint64_t>(members_.end() - lo) < need) return false;
            return *(lo + static_cast<std::ptrdiff_t>(need - 1)) == b;
        }
        auto it = std::upper_bound(runs_.begin(), runs_.end(), a,
                                   [](std::uint64_t v, const auto& r) { return v < r.first; });
        return it != runs_.begin() && std::prev(it)->second >= b;
    }

    std::uint64_t count() const {
        if (sparse_) return members_.size();
        std::uint64_t c = 0;
        for (const auto& [a, b] : runs_) c += b - a + 1;
        return c;
    }

private:
    void validate() const {
        if (sparse_) {
            if (!std::is_sorted(members_.begin(), members_.end()))
                throw UsageError("window set members must be sorted");
            if (!members_.empty() && members_.back() > horizon_)
                throw UsageError("window set member beyond horizon");
        } else {
            std::uint64_t prev_end = 0;
            bool first = true;
            for (const auto& [a, b] : runs_) {
                if (a > b) throw UsageError("window set run must have start <= end");
                if (!first && a <= prev_end)
                    throw UsageError("window set runs must be increasing and disjoint");
                if (b > horizon_) throw UsageError("window set run beyond horizon");
                prev_end = b;
                first = false;
            }
        }
    }

    std::uint64_t horizon_ = 0;
    bool sparse_ = true;
    Members members_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> runs_;
};

namespace detail {

inline void require_sorted_unique(const Members& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i] <= s[i - 1]) throw UsageError("member list must be strictly increasing");
}

inline std::uint64_t isqrt_ceil(std::uint64_t h) {
    std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(h)));
    while (r * r < h) ++r;
    while (r > 0 && (r - 1) * (r - 1) >= h) --r;
    return r;
}

} // namespace detail

// Maximum length arithmetic progression inside s; ties resolved by smallest
// step, then smallest start.  Dynamic program over (second-to-last, last)
// element pairs; a progression ending in that pair extends one ending in
// (predecessor, second-to-last) when the matching predecessor exists.
inline constexpr std::size_t longest_ap_member_cap = 8192;

inline APWitness longest_ap(const Members& s) {
    detail::require_sorted_unique(s);
    if (s.empty()) throw EmptySetError();
    std::size_t n = s.size();
    if (n == 1) return {s[0], 1, 1};
    if (n > longest_ap_member_cap)
        throw MemberCapExceededError("longest_ap over " + std::to_string(n) + " members");

    std::vector<std::uint16_t> len(n * n, 0); // len[k*n + j], k < j
    APWitness best{s[0], 1, 1};
    std::uint64_t best_len = 1;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            std::uint64_t step = s[j] - s[k];
            std::uint64_t ell = 2;
            if (s[k] >= step) {
                std::uint64_t want = s[k] - step;
                auto it = std::lower_bound(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), want);
                if (it != s.begin() + static_cast<std::ptrdiff_t>(k) && *it == want) {
                    std::size_t l = static_cast<std::size_t>(it - s.begin());
                    ell = len[l * n + k] + 1;
                }
            }
            len[k * n + j] = static_cast<std::uint16_t>(ell);
            std::uint64_t start = s[j] - (ell - 1) * step;
            if (ell > best_len ||
                (ell == best_len && (step < best.step ||
                                     (step == best.step && start < best.start)))) {
                best_len = ell;
                best = {start, step, ell};
            }
        }
    }
    return best;
}

// First progression of length >= len, searching starts in increasing order and
// steps in increasing order within a start, extended as far as it goes.
// Returns nothing if no progression of the requested length fits the window.
inline std::optional<APWitness> contains_ap(const Members& s, std::uint64_t len) {
    detail::require_sorted_unique(s);
    if (len == 0) throw UsageError("progression length must be at least 1");
    if (s.empty()) return std::nullopt;
    if (len == 1) return APWitness{s.front(), 1, 1};
    std::size_t n = s.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::uint64_t step = s[j] - s[i];
            // Steps grow with j, so once even the shortest required
            // progression overshoots the window no later j can help.
            if (s[i] + (len - 1) * step > s.back()) break;
            std::uint64_t count = 2;
            std::uint64_t last = s[j];
            while (std::binary_search(s.begin(), s.end(), last + step)) {
                last += step;
                ++count;
            }
            if (count >= len) return APWitness{s[i], step, count};
        }
    }
    return std::nullopt;
}

// All nonempty subset sums of gens[0..max_index) that do not exceed cap.
inline WindowSet finite_sums(const Members& gens, std::size_t max_index, std::uint64_t cap) {
    if (max_index > gens.size())
        throw GeneratorsTooShortError(std::to_string(max_index) + " of " +
                                      std::to_string(gens.size()));
    if (max_index > 24)
        throw MemberCapExceededError("finite_sums over " + std::to_string(max_index) +
                                     " generators");
    for (std::size_t i = 0; i < max_index; ++i)
        if (gens[i] == 0) throw UsageError("generators must be positive");

    Members sums;
    for (std::size_t i = 0; i < max_index; ++i) {
        Members next = sums;
        if (gens[i] <= cap) next.push_back(gens[i]);
        for (auto v : sums)
            if (v + gens[i] <= cap) next.push_back(v + gens[i]);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        sums = std::move(next);
    }
    return WindowSet::of_members(cap, std::move(sums));
}

// Finite-horizon stand-ins for upper and lower density: the extremes of
// #(s intersect [0,n-1]) / n over n in [ceil(sqrt(horizon)), horizon].  The
// ratio is monotone between consecutive members, so only the breakpoints need
// evaluating.
inline std::pair<Rat, Rat> density_estimates(const Members& s, std::uint64_t horizon) {
    detail::require_sorted_unique(s);
    if (horizon < 1) throw UsageError("density estimate needs horizon >= 1");
    std::uint64_t lo = std::max<std::uint64_t>(1, detail::isqrt_ceil(horizon));
    if (s.empty()) return {Rat(0), Rat(0)};

    auto count_below = [&](std::uint64_t n) {
        return static_cast<std::uint64_t>(
            std::lower_bound(s.begin(), s.end(), n) - s.begin());
    };
    std::vector<std::uint64_t> candidates{lo, horizon};
    for (auto m : s) {
        if (m >= lo && m <= horizon) candidates.push_back(m);
        if (m + 1 >= lo && m + 1 <= horizon) candidates.push_back(m + 1);
    }
    Rat upper(0), lower(1);
    for (auto n : candidates) {
        Rat r(static_cast<std::int64_t>(count_below(n)), static_cast<std::int64_t>(n));
        if (r > upper) upper = r;
        if (r < lower) lower = r;
    }
    return {upper, lower};
}

// Extremes of the count over every length-`window` interval inside
// [0, horizon], as exact rationals relative to the window length.  The count
// as a function of the left endpoint only changes where a member enters or
// leaves, so it suffices to evaluate at those breakpoints.
inline std::pair<Rat, Rat> banach_density_estimates(const Members& s, std::uint64_t horizon,
                                                    std::uint64_t window) {
    detail::require_sorted_unique(s);
    if (window < 1 || window > horizon + 1)
        throw WindowTooLargeError(std::to_string(window) + " over horizon " +
                                  std::to_string(horizon));
    if (!s.empty() && s.back() > horizon)
        throw UsageError("member beyond horizon");
    std::uint64_t last_start = horizon - window + 1;
    auto count_in = [&](std::uint64_t m) {
        auto lo = std::lower_bound(s.begin(), s.end(), m);
        auto hi = std::upper_bound(s.begin(), s.end(), m + window - 1);
        return static_cast<std::uint64_t>(hi - lo);
    };
    std::vector<std::uint64_t> candidates{0, last_start};
    for (auto m : s) {
        if (m + 1 <= last_start) candidates.push_back(m + 1);
        candidates.push_back(std::min(m >= window - 1 ? m - window + 1 : 0, last_start));
    }
    std::uint64_t cmax = 0, cmin = UINT64_MAX;
    for (auto m : candidates) {
        std::uint64_t c = count_in(m);
        cmax = std::max(cmax, c);
        cmin = std::min(cmin, c);
    }
    return {Rat(static_cast<std::int64_t>(cmax), static_cast<std::int64_t>(window)),
            Rat(static_cast<std::int64_t>(cmin), static_cast<std::int64_t>(window))};
}

// Largest gap a point of [0, horizon] can sit in without touching s: the
// leading gap from 0, the gaps between consecutive members, and the trailing
// gap up to the horizon.
inline std::uint64_t syndetic_gap(const Members& s, std::uint64_t horizon) {
    detail::require_sorted_unique(s);
    if (s.empty()) throw EmptySetError();
    std::uint64_t g = s.front();
    for (std::size_t i = 1; i < s.size(); ++i) g = std::max(g, s[i] - s[i - 1]);
    if (horizon > s.back()) g = std::max(g, horizon - s.back());
    return g;
}

// Length of the longest block of consecutive integers inside s.
inline std::uint64_t thick_run(const Members& s) {
    detail::require_sorted_unique(s);
    std::uint64_t best = 0, run = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        run = (i > 0 && s[i] == s[i - 1] + 1) ? run + 1 : 1;
        best = std::max(best, run);
    }
    return best;
}

// Complement of s within [0, horizon]; handy for the gap/run duality checks.
inline Members complement_within(const Members& s, std::uint64_t horizon) {
    detail::require_sorted_unique(s);
    Members out;
    std::size_t idx = 0;
    for (std::uint64_t v = 0; v <= horizon; ++v) {
        if (idx < s.size() && s[idx] == v) { ++idx; continue; }
        out.push_back(v);
    }
    return out;
}

} // namespace vdwlab

#endif
