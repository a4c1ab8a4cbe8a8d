// Counting budgets: nondecreasing integer functions f with f(0) = 0 that cap
// how many marks a window of a given length may carry.  A budget is canonical
// when it additionally satisfies f(m + n) <= f(m) + f(n); the validator checks
// the three conditions exhaustively up to a cap and reports witnesses for any
// failure rather than just a verdict.

#ifndef VDWLAB_BUDGET_HPP
#define VDWLAB_BUDGET_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "vdwlab/errors.hpp"

namespace vdwlab {

class Budget {
public:
    static Budget log_base(unsigned base) {
        if (base < 2) throw UsageError("log budget needs base >= 2");
        return Budget("log" + std::to_string(base), [base](std::uint64_t p) {
            // Largest e with base^e <= p + 1.
            std::uint64_t e = 0, power = 1;
            while (power <= (p + 1) / base) {
                power *= base;
                ++e;
            }
            return e;
        });
    }

    static Budget identity() {
        return Budget("identity", [](std::uint64_t p) { return p; });
    }

    static Budget custom(std::string id, std::function<std::uint64_t(std::uint64_t)> fn) {
        return Budget(std::move(id), std::move(fn));
    }

    const std::string& id() const { return id_; }
    std::uint64_t operator()(std::uint64_t p) const { return fn_(p); }

    // Smallest p >= floor_p with f(p) > bound, found by doubling then binary
    // search; correctness relies on f being nondecreasing.  A budget that
    // never clears the bound within the search cap is reported as such
    // instead of looping forever.
    std::uint64_t least_exceeding(std::uint64_t bound, std::uint64_t floor_p = 0) const {
        const std::uint64_t cap = std::uint64_t{1} << 40;
        std::uint64_t hi = floor_p > 0 ? floor_p : 1;
        while (fn_(hi) <= bound) {
            if (hi >= cap) throw FNotUnboundedError(id_ + " stays <= " + std::to_string(bound));
            hi *= 2;
        }
        std::uint64_t lo = floor_p;
        while (lo < hi) {
            std::uint64_t mid = lo + (hi - lo) / 2;
            if (fn_(mid) > bound)
                hi = mid;
            else
                lo = mid + 1;
        }
        return lo;
    }

private:
    Budget(std::string id, std::function<std::uint64_t(std::uint64_t)> fn)
        : id_(std::move(id)), fn_(std::move(fn)) {}

    std::string id_;
    std::function<std::uint64_t(std::uint64_t)> fn_;
};

struct CanonicalityReport {
    bool zero_at_zero = false;
    bool nondecreasing = false;
    std::optional<std::uint64_t> decrease_at; // m with f(m+1) < f(m)
    bool subadditive = false;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> subadditivity_failure;
    std::uint64_t checked_up_to = 0;

    bool canonical() const { return zero_at_zero && nondecreasing && subadditive; }
};

// Exhaustive check of the three budget conditions on [0, cap], with pair
// checks for subadditivity on m, n <= cap.
inline CanonicalityReport check_canonical(const Budget& f, std::uint64_t cap = 64) {
    CanonicalityReport r;
    r.checked_up_to = cap;
    r.zero_at_zero = (f(0) == 0);
    r.nondecreasing = true;
    for (std::uint64_t m = 0; m < cap; ++m) {
        if (f(m + 1) < f(m)) {
            r.nondecreasing = false;
            r.decrease_at = m;
            break;
        }
    }
    r.subadditive = true;
    for (std::uint64_t m = 0; m <= cap && r.subadditive; ++m)
        for (std::uint64_t n = 0; n <= cap; ++n)
            if (f(m + n) > f(m) + f(n)) {
                r.subadditive = false;
                r.subadditivity_failure = {m, n};
                break;
            }
    return r;
}

} // namespace vdwlab

#endif
