// Tests for the natset module: progression search, finite sums, density
// estimators, and the gap/run statistics.  The progression and density
// routines are checked two ways: frozen answers on hand-computed sets, and
// exhaustive comparison against deliberately naive oracles on random windows.

#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "vdwlab/natset.hpp"

using namespace vdwlab;

namespace {

// Naive oracle: enumerate every progression with at least two terms by start
// pair, extend forward through the set, and keep the best under the same tie
// rule the production code documents (longest, then smallest step, then
// smallest start).  Cubic and proud of it.
APWitness brute_longest_ap(const Members& s) {
    if (s.size() == 1) return {s[0], 1, 1};
    APWitness best{s[0], 1, 1};
    std::uint64_t best_len = 1;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::uint64_t step = s[j] - s[i];
            std::uint64_t len = 2;
            std::uint64_t last = s[j];
            while (std::binary_search(s.begin(), s.end(), last + step)) {
                last += step;
                ++len;
            }
            if (len > best_len ||
                (len == best_len &&
                 (step < best.step || (step == best.step && s[i] < best.start)))) {
                best_len = len;
                best = {s[i], step, len};
            }
        }
    }
    return best;
}

bool brute_has_ap(const Members& s, std::uint64_t len) {
    if (s.empty()) return false;
    if (len <= 1) return true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            std::uint64_t step = s[j] - s[i];
            std::uint64_t count = 2;
            std::uint64_t last = s[j];
            while (count < len && std::binary_search(s.begin(), s.end(), last + step)) {
                last += step;
                ++count;
            }
            if (count >= len) return true;
        }
    }
    return false;
}

Members random_members(std::mt19937& rng, std::uint64_t horizon, double p) {
    Members s;
    std::bernoulli_distribution coin(p);
    for (std::uint64_t v = 0; v <= horizon; ++v)
        if (coin(rng)) s.push_back(v);
    return s;
}

bool ap_inside(const Members& s, const APWitness& w) {
    for (std::uint64_t t = 0; t < w.length; ++t)
        if (!std::binary_search(s.begin(), s.end(), w.start + t * w.step)) return false;
    return true;
}

} // namespace

TEST_CASE("longest_ap frozen answers") {
    // {1,3,5,7,9} sits inside the set, so the best progression has five terms.
    CHECK(longest_ap({1, 2, 3, 5, 7, 9}) == APWitness{1, 2, 5});
    CHECK(longest_ap({0, 2, 4, 6, 8}) == APWitness{0, 2, 5});
    CHECK(longest_ap({4}) == APWitness{4, 1, 1});
    // Powers of two: no three-term progression, and the tie rule picks the
    // smallest step pair (1,2) over e.g. (2,4).
    CHECK(longest_ap({1, 2, 4, 8, 16, 32}) == APWitness{1, 1, 2});
}

TEST_CASE("longest_ap input guards") {
    CHECK_THROWS_AS(longest_ap({}), EmptySetError);
    CHECK_THROWS_AS(longest_ap({3, 3}), UsageError);
    CHECK_THROWS_AS(longest_ap({5, 2}), UsageError);
    Members big(longest_ap_member_cap + 1);
    for (std::size_t i = 0; i < big.size(); ++i) big[i] = 2 * i;
    CHECK_THROWS_AS(longest_ap(big), MemberCapExceededError);
}

TEST_CASE("longest_ap matches the cubic oracle on random windows") {
    std::mt19937 rng(20260823);
    for (int round = 0; round < 200; ++round) {
        std::uint64_t horizon = 16 + rng() % 240;
        double p = 0.05 + 0.5 * (rng() % 100) / 100.0;
        Members s = random_members(rng, horizon, p);
        if (s.empty()) continue;
        APWitness got = longest_ap(s);
        APWitness want = brute_longest_ap(s);
        CHECK(got == want);
        CHECK(ap_inside(s, got));
    }
}

TEST_CASE("contains_ap frozen answers and guards") {
    auto w = contains_ap({1, 2, 3, 5, 7, 9}, 4);
    REQUIRE(w.has_value());
    // First start is 1; step 1 tops out at three terms, step 2 runs to five.
    CHECK(*w == APWitness{1, 2, 5});
    CHECK(!contains_ap({1, 2, 4, 8}, 3).has_value());
    CHECK(!contains_ap({}, 2).has_value());
    CHECK(contains_ap({7, 9}, 1) == APWitness{7, 1, 1});
    CHECK_THROWS_AS(contains_ap({1, 2}, 0), UsageError);
}

TEST_CASE("contains_ap agrees with the brute scan on random windows") {
    std::mt19937 rng(411);
    for (int round = 0; round < 150; ++round) {
        std::uint64_t horizon = 8 + rng() % 500;
        Members s = random_members(rng, horizon, 0.3);
        for (std::uint64_t len = 2; len <= 6; ++len) {
            auto got = contains_ap(s, len);
            CHECK(got.has_value() == brute_has_ap(s, len));
            if (got) {
                CHECK(got->length >= len);
                CHECK(ap_inside(s, *got));
            }
        }
    }
}

TEST_CASE("finite_sums enumerates subset sums") {
    CHECK(finite_sums({1, 2, 4}, 3, 100).members() == Members{1, 2, 3, 4, 5, 6, 7});
    CHECK(finite_sums({3, 3}, 2, 100).members() == Members{3, 6});
    CHECK(finite_sums({5}, 1, 100).members() == Members{5});
    // The cap prunes sums as they are formed, not after.
    CHECK(finite_sums({4, 5}, 2, 6).members() == Members{4, 5});
    CHECK(finite_sums({7}, 0, 100).members() == Members{});
}

TEST_CASE("finite_sums guards") {
    CHECK_THROWS_AS(finite_sums({1, 2}, 3, 50), GeneratorsTooShortError);
    CHECK_THROWS_AS(finite_sums({1, 0, 2}, 3, 50), UsageError);
    Members many(25, 1);
    CHECK_THROWS_AS(finite_sums(many, 25, 50), MemberCapExceededError);
}

TEST_CASE("finite_sums grows with the index bound and stays below 2^m") {
    std::mt19937 rng(77);
    Members gens;
    for (int i = 0; i < 10; ++i) gens.push_back(1 + rng() % 40);
    std::uint64_t cap = 400;
    Members prev;
    for (std::size_t m = 0; m <= 10; ++m) {
        Members cur = finite_sums(gens, m, cap).members();
        CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
        CHECK(cur.size() <= (std::uint64_t{1} << m) - (m ? 1 : 0));
        prev = std::move(cur);
    }
}

TEST_CASE("density estimates on periodic and frozen sets") {
    // Multiples of 3 up to 2997, horizon 3000.  The scan starts at
    // ceil(sqrt(3000)) = 55, where the ratio peaks at 19/55; every candidate
    // n that is itself a multiple of 3 gives exactly 1/3.
    Members threes;
    for (std::uint64_t v = 0; v <= 2997; v += 3) threes.push_back(v);
    auto [up3, lo3] = density_estimates(threes, 3000);
    CHECK(up3 == Rat(19, 55));
    CHECK(lo3 == Rat(1, 3));

    // Evens below 100: the scan starts at 10; odd n = 11 gives 6/11, even n
    // give exactly 1/2.
    Members evens;
    for (std::uint64_t v = 0; v <= 98; v += 2) evens.push_back(v);
    auto [upe, loe] = density_estimates(evens, 100);
    CHECK(upe == Rat(6, 11));
    CHECK(loe == Rat(1, 2));

    CHECK(density_estimates({}, 50) == std::pair{Rat(0), Rat(0)});
    CHECK_THROWS_AS(density_estimates({1, 2}, 0), UsageError);
}

TEST_CASE("density estimates spread on a lacunary block set") {
    // Union of [4^k, 2*4^k) for k <= 6.  Counting right after the k = 6 block
    // gives 5461/8192 > 1/2; counting at its left edge gives 1365/4096 < 1/3.
    Members s;
    for (std::uint64_t base = 1; base <= 4096; base *= 4)
        for (std::uint64_t v = base; v < 2 * base; ++v) s.push_back(v);
    auto [up, lo] = density_estimates(s, 16384);
    CHECK(up >= Rat(1, 2));
    CHECK(lo <= Rat(1, 3));
}

TEST_CASE("density estimates match a full scan on random windows") {
    std::mt19937 rng(5150);
    for (int round = 0; round < 40; ++round) {
        std::uint64_t horizon = 30 + rng() % 400;
        Members s = random_members(rng, horizon, 0.25);
        if (s.empty()) continue;
        auto [up, lo] = density_estimates(s, horizon);
        std::uint64_t start = 1;
        while (start * start < horizon) ++start;
        Rat bup(0), blo(1);
        for (std::uint64_t n = start; n <= horizon; ++n) {
            std::uint64_t c = static_cast<std::uint64_t>(
                std::lower_bound(s.begin(), s.end(), n) - s.begin());
            Rat r(static_cast<std::int64_t>(c), static_cast<std::int64_t>(n));
            if (r > bup) bup = r;
            if (r < blo) blo = r;
        }
        CHECK(up == bup);
        CHECK(lo == blo);
    }
}

TEST_CASE("banach density on frozen sets") {
    // Evens with an even window: every interval of length 100 holds exactly
    // fifty members, so the estimate collapses to a point.
    Members evens;
    for (std::uint64_t v = 0; v <= 100000; v += 2) evens.push_back(v);
    CHECK(banach_density_estimates(evens, 100000, 100) == std::pair{Rat(1, 2), Rat(1, 2)});

    // Odd window: [0,4] holds three evens, [1,5] only two.
    Members small{0, 2, 4, 6, 8, 10};
    CHECK(banach_density_estimates(small, 10, 5) == std::pair{Rat(3, 5), Rat(2, 5)});

    // Window 1 sees both a member and a hole.
    CHECK(banach_density_estimates({0, 3}, 4, 1) == std::pair{Rat(1), Rat(0)});

    // Window = horizon + 1 leaves a single interval.
    CHECK(banach_density_estimates({0, 3}, 4, 5) == std::pair{Rat(2, 5), Rat(2, 5)});
}

TEST_CASE("banach density guards") {
    CHECK_THROWS_AS(banach_density_estimates({1}, 10, 0), WindowTooLargeError);
    CHECK_THROWS_AS(banach_density_estimates({1}, 10, 12), WindowTooLargeError);
    CHECK_THROWS_AS(banach_density_estimates({11}, 10, 4), UsageError);
}

TEST_CASE("banach density matches a sliding scan on random windows") {
    std::mt19937 rng(8071);
    for (int round = 0; round < 60; ++round) {
        std::uint64_t horizon = 20 + rng() % 200;
        Members s = random_members(rng, horizon, 0.3);
        std::uint64_t window = 1 + rng() % horizon;
        auto [up, lo] = banach_density_estimates(s, horizon, window);
        std::uint64_t cmax = 0, cmin = UINT64_MAX;
        for (std::uint64_t m = 0; m + window <= horizon + 1; ++m) {
            auto a = std::lower_bound(s.begin(), s.end(), m);
            auto b = std::upper_bound(s.begin(), s.end(), m + window - 1);
            std::uint64_t c = static_cast<std::uint64_t>(b - a);
            cmax = std::max(cmax, c);
            cmin = std::min(cmin, c);
        }
        CHECK(up == Rat(static_cast<std::int64_t>(cmax), static_cast<std::int64_t>(window)));
        CHECK(lo == Rat(static_cast<std::int64_t>(cmin), static_cast<std::int64_t>(window)));
    }
}

TEST_CASE("banach window equal to horizon brackets the prefix count") {
    std::mt19937 rng(99);
    for (int round = 0; round < 30; ++round) {
        std::uint64_t horizon = 10 + rng() % 100;
        Members s = random_members(rng, horizon, 0.4);
        auto [up, lo] = banach_density_estimates(s, horizon, horizon);
        std::uint64_t below = static_cast<std::uint64_t>(
            std::lower_bound(s.begin(), s.end(), horizon) - s.begin());
        Rat prefix(static_cast<std::int64_t>(below), static_cast<std::int64_t>(horizon));
        CHECK(up >= prefix);
        CHECK(lo <= prefix);
    }
}

TEST_CASE("syndetic gap and thick run") {
    CHECK(syndetic_gap({0, 5, 7}, 20) == 13);
    CHECK(syndetic_gap({3}, 3) == 3);
    // Consecutive members still differ by one, so the gap never drops to zero.
    CHECK(syndetic_gap({0, 1, 2}, 2) == 1);
    CHECK_THROWS_AS(syndetic_gap({}, 10), EmptySetError);

    CHECK(thick_run({}) == 0);
    CHECK(thick_run({5}) == 1);
    CHECK(thick_run({1, 2, 3, 7, 8}) == 3);
    CHECK(thick_run({0, 1, 2, 3}) == 4);
}

TEST_CASE("gap and run are dual across the complement") {
    // For sets kept strictly inside (0, horizon) every run of s sits between
    // two complement members, so a run of length L opens a complement gap of
    // exactly L + 1.  The window edges would shift that by one, hence the
    // restriction.
    std::mt19937 rng(31337);
    for (int round = 0; round < 50; ++round) {
        std::uint64_t horizon = 12 + rng() % 80;
        Members s;
        std::bernoulli_distribution coin(0.45);
        for (std::uint64_t v = 1; v < horizon; ++v)
            if (coin(rng)) s.push_back(v);
        Members comp = complement_within(s, horizon);
        REQUIRE(!comp.empty());
        std::uint64_t gap = syndetic_gap(comp, horizon);
        std::uint64_t run = thick_run(s);
        for (std::uint64_t g = 0; g <= horizon; ++g)
            CHECK((run >= g) == (gap > g || g == 0));
    }
}

TEST_CASE("complement_within inverts membership") {
    Members s{0, 2, 5};
    CHECK(complement_within(s, 6) == Members{1, 3, 4, 6});
    CHECK(complement_within({}, 3) == Members{0, 1, 2, 3});
    CHECK(complement_within({0, 1, 2}, 2) == Members{});
}

TEST_CASE("window sets answer the same queries in both representations") {
    std::mt19937 rng(246);
    for (int round = 0; round < 30; ++round) {
        std::uint64_t horizon = 10 + rng() % 60;
        Members m = random_members(rng, horizon, 0.4);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> runs;
        for (std::size_t i = 0; i < m.size();) {
            std::size_t j = i;
            while (j + 1 < m.size() && m[j + 1] == m[j] + 1) ++j;
            runs.emplace_back(m[i], m[j]);
            i = j + 1;
        }
        WindowSet sparse = WindowSet::of_members(horizon, m);
        WindowSet dense = WindowSet::of_runs(horizon, runs);
        CHECK(sparse.count() == dense.count());
        CHECK(sparse.stores_members());
        CHECK(!dense.stores_members());
        for (std::uint64_t v = 0; v <= horizon + 2; ++v)
            CHECK(sparse.contains(v) == dense.contains(v));
        for (int probe = 0; probe < 40; ++probe) {
            std::uint64_t a = rng() % (horizon + 2);
            std::uint64_t b = rng() % (horizon + 2);
            CHECK(sparse.covers(a, b) == dense.covers(a, b));
        }
    }
}

TEST_CASE("window set validation and accessors") {
    CHECK_THROWS_AS(WindowSet::of_members(10, {3, 1}), UsageError);
    CHECK_THROWS_AS(WindowSet::of_members(10, {4, 11}), UsageError);
    CHECK_THROWS_AS(WindowSet::of_runs(10, {{5, 3}}), UsageError);
    CHECK_THROWS_AS(WindowSet::of_runs(10, {{0, 4}, {4, 6}}), UsageError);
    CHECK_THROWS_AS(WindowSet::of_runs(10, {{8, 12}}), UsageError);

    WindowSet sparse = WindowSet::of_members(10, {1, 2});
    WindowSet dense = WindowSet::of_runs(10, {{1, 2}});
    CHECK_THROWS_AS(sparse.runs(), UsageError);
    CHECK_THROWS_AS(dense.members(), UsageError);
    CHECK(sparse.covers(5, 3));
    CHECK(!sparse.covers(9, 11));
    CHECK(dense.covers(1, 2));
}
