// Deterministic parallel range search.  Work is cut into fixed-size blocks
// processed in order; inside a block the threads share the work, and the
// block's results are reduced by minimum index before the next block starts.
// The outcome is therefore a pure function of the range and the predicate,
// never of the thread count, which is what lets experiment reports promise
// byte-identical output under --threads 1 and --threads 8.

#ifndef VDWLAB_PARALLEL_HPP
#define VDWLAB_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace vdwlab {

// Smallest n in [lo, hi) with pred(n) true.  pred must be safe to call
// concurrently; with threads <= 1 the scan is a plain loop.
template <typename Pred>
std::optional<std::uint64_t> first_satisfying(std::uint64_t lo, std::uint64_t hi,
                                              unsigned threads, Pred pred,
                                              std::uint64_t block = 1 << 14) {
    if (threads <= 1) {
        for (std::uint64_t n = lo; n < hi; ++n)
            if (pred(n)) return n;
        return std::nullopt;
    }
    for (std::uint64_t base = lo; base < hi; base += block) {
        std::uint64_t end = std::min(hi, base + block);
        std::vector<std::uint64_t> best(threads, UINT64_MAX);
        std::vector<std::thread> pool;
        std::uint64_t span = end - base;
        std::uint64_t chunk = (span + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t a = base + t * chunk;
            std::uint64_t b = std::min(end, a + chunk);
            if (a >= b) break;
            pool.emplace_back([&, a, b, t] {
                for (std::uint64_t n = a; n < b; ++n)
                    if (pred(n)) {
                        best[t] = n;
                        return;
                    }
            });
        }
        for (auto& th : pool) th.join();
        std::uint64_t hit = *std::min_element(best.begin(), best.end());
        if (hit != UINT64_MAX) return hit;
    }
    return std::nullopt;
}

// True iff pred holds on all of [lo, hi); the first failure index otherwise.
template <typename Pred>
bool holds_on_range(std::uint64_t lo, std::uint64_t hi, unsigned threads, Pred pred,
                    std::uint64_t* failure = nullptr) {
    auto bad = first_satisfying(lo, hi, threads,
                                [&](std::uint64_t n) { return !pred(n); });
    if (bad && failure) *failure = *bad;
    return !bad;
}

} // namespace vdwlab

#endif
