// Tests for the subshift oracles.  Strategy per kind:
//
//   - frozen verdicts on hand-checked words;
//   - dense words against their sparse forms, which must never disagree;
//   - the pairwise or closed-form admissibility conditions against naive
//     reimplementations (full window scans, explicit triple loops with the
//     binary-expansion pairing);
//   - transfer sets against the direct method of zero-filling each n and
//     asking the admissibility oracle.
//
// The naive oracles are deliberately structure-free so that a bug in the
// clever path cannot hide in a shared helper.

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vdwlab/subshift.hpp"

using namespace vdwlab;

namespace {

Members marks_of(const Word& w) {
    Members pos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != '0') pos.push_back(i);
    return pos;
}

// Window-scan oracle for density budgets: check every window, not just the
// mark-to-mark ones.
bool brute_budget_ok(const Word& w, const Budget& f) {
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a; b < w.size(); ++b) {
            std::uint64_t count = 0;
            for (std::size_t i = a; i <= b; ++i)
                if (w[i] == '1') ++count;
            if (count > f(b - a + 1)) return false;
        }
    return true;
}

// Triple-loop oracle for the equal-gaps family.
bool brute_ap_free_ok(const Members& marks) {
    for (std::size_t i = 1; i < marks.size(); ++i)
        if (marks[i] == marks[i - 1] + 1) return false;
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j)
            for (std::size_t k = j + 1; k < marks.size(); ++k)
                if (marks[j] - marks[i] == marks[k] - marks[j]) return false;
    return true;
}

// Oracle for the default pq family.  p_k = 2^(k-1) means the index set of a
// difference is its binary expansion, so the paired q-sum has the closed form
// sum of 4^(j+1) over set bits j; no greedy decomposition involved.
std::uint64_t paired_q_by_bits(std::uint64_t d) {
    std::uint64_t s = 0;
    for (unsigned j = 0; j < 62; ++j)
        if (d & (std::uint64_t{1} << j)) s += std::uint64_t{1} << (2 * (j + 1));
    return s;
}

bool brute_pq_ok(const Members& marks) {
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (std::size_t j = i + 1; j < marks.size(); ++j) {
            std::uint64_t c = marks[i] + paired_q_by_bits(marks[j] - marks[i]);
            if (std::binary_search(marks.begin(), marks.end(), c)) return false;
        }
    return true;
}

// Direct transfer oracle: zero-fill or overlap u and v at distance n and ask
// the full admissibility check, the way the base class does it.
bool brute_transfer_member(const Subshift& shift, const Word& u, const Word& v,
                           std::uint64_t n) {
    Word filled(std::max<std::uint64_t>(u.size(), n + v.size()), '0');
    std::copy(u.begin(), u.end(), filled.begin());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t pos = static_cast<std::size_t>(n) + i;
        // Inside u every symbol is pinned, zeros included.
        if (pos < u.size()) {
            if (u[pos] != v[i]) return false;
        } else {
            filled[pos] = v[i];
        }
    }
    return shift.admissible(filled).yes();
}

Word random_binary_word(std::mt19937& rng, std::size_t len, double p) {
    Word w(len, '0');
    std::bernoulli_distribution coin(p);
    for (auto& c : w)
        if (coin(rng)) c = '1';
    return w;
}

} // namespace

TEST_CASE("cube terms grow by cubing") {
    CHECK(cube_terms(1).empty());
    CHECK(cube_terms(2) == std::vector<u128>{2});
    CHECK(cube_terms(7) == std::vector<u128>{2});
    CHECK(cube_terms(8) == std::vector<u128>{2, 8});
    auto t = cube_terms(u128(1) << 100);
    REQUIRE(t.size() == 5);
    CHECK(t[2] == 512);
    CHECK(t[3] == u128(1) << 27);
    CHECK(t[4] == u128(1) << 81);
    for (std::size_t i = 0; i + 1 < t.size(); ++i) CHECK(t[i + 1] == t[i] * t[i] * t[i]);
}

TEST_CASE("spacing sides own alternating blocks") {
    CubeSpacingShift even(SpacingSide::even);
    CubeSpacingShift odd(SpacingSide::odd);
    CHECK(even.id() == "spacing-even");
    CHECK(odd.id() == "spacing-odd");
    CHECK(even.mark() == '1');
    CHECK(odd.mark() == '2');

    // Block 1 = [2, 4] belongs to neither side.
    CHECK(!even.gap_allowed(2));
    CHECK(!odd.gap_allowed(2));
    CHECK(!even.gap_allowed(4));
    CHECK(!odd.gap_allowed(4));

    // Block 2 = [8, 64] is even; block 3 = [512, 262144] is odd.
    CHECK(even.gap_allowed(8));
    CHECK(even.gap_allowed(64));
    CHECK(!even.gap_allowed(7));
    CHECK(!even.gap_allowed(65));
    CHECK(!even.gap_allowed(512));
    CHECK(odd.gap_allowed(512));
    CHECK(odd.gap_allowed(262144));
    CHECK(!odd.gap_allowed(511));
    CHECK(!odd.gap_allowed(262145));
    CHECK(!odd.gap_allowed(64));

    // Block 4 starts at 2^27 and is even again; block 5 is odd and beyond
    // 64-bit gaps.
    CHECK(even.gap_allowed(u128(1) << 27));
    CHECK(even.gap_allowed(u128(1) << 54));
    CHECK(!even.gap_allowed((u128(1) << 54) + 1));
    CHECK(odd.gap_allowed(u128(1) << 81));
    CHECK(even.intervals().size() == 2);
    CHECK(odd.intervals().size() == 2);
}

TEST_CASE("spacing admissibility checks all pairs") {
    CubeSpacingShift even(SpacingSide::even);
    CHECK(even.check_positions(20, {}).yes());
    CHECK(even.check_positions(20, {5}).yes());
    CHECK(even.check_positions(70, {0, 8}).yes());
    CHECK(even.check_positions(70, {0, 8, 16}).yes());
    CHECK(!even.check_positions(70, {0, 7}).yes());
    // 0 and 8 are fine, 0 and 72 are not: 72 > 64 and well below 2^27.
    Admissibility a = even.check_positions(80, {0, 8, 72});
    CHECK(a.verdict == Trilean::no);
    CHECK(a.reason.find("72") != std::string::npos);

    CubeSpacingShift odd(SpacingSide::odd);
    CHECK(odd.admissible("202").verdict == Trilean::no);
    CHECK(odd.admissible(Word("2") + Word(511, '0') + Word("2")).yes());
    // The even mark is not even a symbol of the odd side.
    Admissibility b = odd.admissible("01");
    CHECK(b.verdict == Trilean::no);
    CHECK(b.reason.find("alphabet") != std::string::npos);
}

TEST_CASE("spacing points extend by zeros") {
    CubeSpacingShift even(SpacingSide::even);
    Word w = "1";
    w += Word(7, '0');
    w += "1";
    auto point = even.zero_extension_point(w);
    REQUIRE(point.has_value());
    CHECK(point->prefix_word(12) == "100000001000");
    CHECK_THROWS_AS(even.zero_extension_point("11"), NotAdmissibleError);
}

TEST_CASE("budget shifts enforce the window bound") {
    BoundedDensityShift log2(Budget::log_base(2));
    CHECK(log2.id() == "budget:log2");
    CHECK(log2.admissible("101").yes());
    CHECK(log2.admissible("110").verdict == Trilean::no);
    CHECK(log2.admissible("1").yes());
    CHECK(log2.admissible("").yes());
    // Three marks need a window of length at least 7 under log2.
    CHECK(!log2.admissible("101001").yes());
    CHECK(log2.admissible("1010001").yes());

    BoundedDensityShift id(Budget::identity());
    CHECK(id.admissible("111111").yes());
    CHECK(id.id() == "budget:identity");
}

TEST_CASE("budget pairwise condition equals the full window scan") {
    std::mt19937 rng(1203);
    std::vector<Budget> budgets{Budget::log_base(2), Budget::log_base(3), Budget::identity()};
    for (const auto& f : budgets) {
        BoundedDensityShift shift(f);
        for (int round = 0; round < 120; ++round) {
            Word w = random_binary_word(rng, 1 + rng() % 40, 0.25);
            CHECK(shift.admissible(w).yes() == brute_budget_ok(w, f));
        }
    }
}

TEST_CASE("dense and sparse admissibility agree") {
    std::mt19937 rng(888);
    BoundedDensityShift log2(Budget::log_base(2));
    GapPatternShift ap = GapPatternShift::equal_gaps();
    GapPatternShift pq = GapPatternShift::pq_family();
    const MarkSubshift* kinds[] = {&log2, &ap, &pq};
    for (const MarkSubshift* k : kinds) {
        for (int round = 0; round < 150; ++round) {
            Word w = random_binary_word(rng, 1 + rng() % 30, 0.3);
            SparseWord s = SparseWord::from_text(w);
            CHECK(k->admissible(w).verdict == k->admissible_sparse(s).verdict);
        }
    }

    // Mismatched mark symbol is a verdict, not a crash.
    CubeSpacingShift odd(SpacingSide::odd);
    SparseWord wrong = SparseWord::from_text("100000001", '1');
    CHECK(odd.admissible_sparse(wrong).verdict == Trilean::no);

    SparseWord broken;
    broken.length = 3;
    broken.positions = {5};
    CHECK_THROWS_AS(log2.admissible_sparse(broken), UsageError);
}

TEST_CASE("equal-gaps family frozen verdicts") {
    GapPatternShift ap = GapPatternShift::equal_gaps();
    CHECK(ap.id() == "ap-free");
    CHECK(ap.family() == GapPatternShift::Family::equal_gaps);
    CHECK(ap.admissible("101").yes());
    CHECK(ap.admissible("101001").yes());
    Admissibility adj = ap.admissible("11");
    CHECK(adj.verdict == Trilean::no);
    CHECK(adj.reason.find("adjacent") != std::string::npos);
    Admissibility trip = ap.admissible("10101");
    CHECK(trip.verdict == Trilean::no);
    CHECK(trip.reason.find("0,2,4") != std::string::npos);
    CHECK(!ap.admissible("1001001").yes());
    CHECK(GapPatternShift::equal_gaps(true).id() == "ap-free:allow-empty");
}

TEST_CASE("equal-gaps census by exhaustive enumeration") {
    // Number of admissible words of each length, counting both symbols at
    // every position.  Frozen from an exhaustive scan; any change to the
    // adjacency or triple conditions moves these counts.
    GapPatternShift ap = GapPatternShift::equal_gaps();
    std::vector<std::uint64_t> want{2, 3, 5, 8, 12, 19, 29, 45, 68, 105, 154, 233};
    for (std::size_t len = 1; len <= want.size(); ++len) {
        std::uint64_t count = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << len); ++mask) {
            Word w;
            for (std::size_t i = 0; i < len; ++i)
                w += (mask >> (len - 1 - i)) & 1 ? '1' : '0';
            if (ap.admissible(w).yes()) ++count;
        }
        CHECK(count == want[len - 1]);
    }
}

TEST_CASE("equal-gaps admissibility equals the triple-loop oracle") {
    std::mt19937 rng(2718);
    GapPatternShift ap = GapPatternShift::equal_gaps();
    for (int round = 0; round < 200; ++round) {
        Word w = random_binary_word(rng, 1 + rng() % 32, 0.3);
        CHECK(ap.admissible(w).yes() == brute_ap_free_ok(marks_of(w)));
    }
}

TEST_CASE("pq family frozen verdicts") {
    GapPatternShift pq = GapPatternShift::pq_family();
    CHECK(pq.id() == "ip-free");
    CHECK(pq.p_gens().size() == 31);
    CHECK(pq.q_gens().size() == 31);
    CHECK(pq.p_gens()[0] == 1);
    CHECK(pq.p_gens()[30] == std::uint64_t{1} << 30);
    CHECK(pq.q_gens()[0] == 4);
    CHECK(pq.q_gens()[30] == std::uint64_t{1} << 62);

    // Adjacent marks are legal here; the forbidden patterns all have three
    // marks.
    CHECK(pq.admissible("11").yes());
    // d1 = 1 pairs with q-sum 4: marks {0,1,4} are forbidden.
    Admissibility t = pq.admissible("11001");
    CHECK(t.verdict == Trilean::no);
    CHECK(t.reason.find("0,1,4") != std::string::npos);
    // d1 = 3 = p1 + p2 pairs with 4 + 16: marks {0,3,20} are forbidden.
    Word w(21, '0');
    w[0] = w[3] = w[20] = '1';
    CHECK(!pq.admissible(w).yes());
    w[20] = '0';
    w[19] = '1';
    CHECK(pq.admissible(w).yes());
}

TEST_CASE("pq decomposition is the binary expansion for default generators") {
    GapPatternShift pq = GapPatternShift::pq_family();
    CHECK(GapPatternShift::decompose(21, pq.p_gens()) ==
          std::vector<std::size_t>{0, 2, 4});
    CHECK(GapPatternShift::decompose(0, pq.p_gens())->empty());
    CHECK(!GapPatternShift::decompose(3, Members{4, 16}).has_value());

    CHECK(pq.paired_q_sum(1) == 4);
    CHECK(pq.paired_q_sum(3) == 20);
    CHECK(pq.paired_q_sum(5) == 68);
    for (std::uint64_t d = 1; d <= 300; ++d) CHECK(pq.paired_q_sum(d) == paired_q_by_bits(d));

    // q - p = 4^k - 2^(k-1); the diff decomposition recovers the p-sum.
    CHECK(pq.paired_p_sum_from_diff(3) == 1);   // alpha = {1}: q-p = 3, p = 1
    CHECK(pq.paired_p_sum_from_diff(14) == 2);  // alpha = {2}: q-p = 14, p = 2
    CHECK(pq.paired_p_sum_from_diff(17) == 3);  // alpha = {1,2}
    CHECK(!pq.paired_p_sum_from_diff(2).has_value());
}

TEST_CASE("pq admissibility equals the bit-pairing oracle") {
    std::mt19937 rng(31415);
    GapPatternShift pq = GapPatternShift::pq_family();
    for (int round = 0; round < 200; ++round) {
        Word w = random_binary_word(rng, 1 + rng() % 48, 0.25);
        CHECK(pq.admissible(w).yes() == brute_pq_ok(marks_of(w)));
    }
}

TEST_CASE("custom pq generators are validated") {
    CHECK(GapPatternShift::pq_family({2, 8}, {5, 40}).id() == "ip-free:custom");
    CHECK_THROWS_AS(GapPatternShift::pq_family({1, 2}, {4}), UsageError);
    CHECK_THROWS_AS(GapPatternShift::pq_family({}, {}), UsageError);
    CHECK_THROWS_AS(GapPatternShift::pq_family({0, 2}, {4, 16}), UsageError);
    CHECK_THROWS_AS(GapPatternShift::pq_family({1, 2}, {4, 2}), UsageError);
    // p not superincreasing: 3 <= 1 + 2.
    CHECK_THROWS_AS(GapPatternShift::pq_family({1, 2, 3}, {4, 16, 64}), UsageError);
    // q - p not superincreasing: (5 - 4) <= (2 - 1).
    CHECK_THROWS_AS(GapPatternShift::pq_family({1, 4}, {2, 5}), UsageError);

    // A family with gaps in its p side really does reject non-sums.
    GapPatternShift g = GapPatternShift::pq_family({2, 8}, {5, 40});
    CHECK(!g.paired_q_sum(1).has_value());
    CHECK(g.paired_q_sum(10) == 45);
}

TEST_CASE("boundary gap certificates are exact") {
    GapPatternShift ap = GapPatternShift::equal_gaps();
    CHECK(ap.bad_zero_gaps("101", "1") == std::vector<std::uint64_t>{0, 1});
    GapPatternShift pq = GapPatternShift::pq_family();
    CHECK(pq.bad_zero_gaps("11", "1") == std::vector<std::uint64_t>{2});
    CHECK(pq.bad_zero_gaps("1", "1").empty());

    // Against the direct method: u 0^g v is inadmissible exactly at the
    // certified gaps, for admissible u and v.
    std::mt19937 rng(606);
    const GapPatternShift* kinds[] = {&ap, &pq};
    for (const GapPatternShift* k : kinds) {
        int done = 0;
        while (done < 60) {
            Word u = random_binary_word(rng, 1 + rng() % 10, 0.4);
            Word v = random_binary_word(rng, 1 + rng() % 10, 0.4);
            if (!k->admissible(u).yes() || !k->admissible(v).yes()) continue;
            ++done;
            auto bad = k->bad_zero_gaps(u, v);
            for (std::uint64_t g = 0; g <= 70; ++g) {
                Word filled = u + Word(static_cast<std::size_t>(g), '0') + v;
                bool listed = std::binary_search(bad.begin(), bad.end(), g);
                CHECK(k->admissible(filled).yes() == !listed);
            }
        }
    }
}

TEST_CASE("transfer sets match the per-n fill oracle") {
    std::mt19937 rng(7070);
    GapPatternShift ap = GapPatternShift::equal_gaps();
    GapPatternShift pq = GapPatternShift::pq_family();
    BoundedDensityShift log2(Budget::log_base(2));
    const MarkSubshift* kinds[] = {&ap, &pq, &log2};
    for (const MarkSubshift* k : kinds) {
        int done = 0;
        while (done < 25) {
            Word u = random_binary_word(rng, 1 + rng() % 8, 0.4);
            Word v = random_binary_word(rng, 1 + rng() % 8, 0.4);
            if (!k->admissible(u).yes() || !k->admissible(v).yes()) continue;
            ++done;
            std::uint64_t horizon = 40;
            WindowSet t = k->transfer_set(u, v, horizon);
            for (std::uint64_t n = 1; n <= horizon; ++n)
                CHECK(t.contains(n) == brute_transfer_member(*k, u, v, n));
        }
    }
}

TEST_CASE("transfer set frozen examples") {
    GapPatternShift ap = GapPatternShift::equal_gaps();
    WindowSet t = ap.transfer_set("101", "1", 12);
    CHECK(t.contains(2));
    CHECK(!t.contains(1));
    CHECK(!t.contains(3));
    CHECK(!t.contains(4));
    CHECK(t.covers(5, 12));

    GapPatternShift pq = GapPatternShift::pq_family();
    WindowSet s = pq.transfer_set("11", "1", 6);
    CHECK(s.count() == 5);
    CHECK(!s.contains(4));
    CHECK(s.contains(1));

    // Inadmissible inputs transfer nowhere.
    CHECK(ap.transfer_set("11", "1", 10).count() == 0);

    CubeSpacingShift even(SpacingSide::even);
    WindowSet e = even.transfer_set("1", "1", 70);
    CHECK(e.count() == 57);
    CHECK(e.covers(8, 64));
    CHECK(!e.contains(7));
    CHECK(!e.contains(65));

    CHECK_THROWS_AS(ap.transfer_set("", "1", 5), UsageError);
}

TEST_CASE("full shift accepts everything and transfers through overlaps") {
    FullShift full(2);
    CHECK(full.id() == "full");
    CHECK(full.admissible("0110").yes());
    CHECK(full.admissible("012").verdict == Trilean::no);
    CHECK(FullShift(3).admissible("012").yes());
    CHECK(FullShift(3).id() == "full:3");
    CHECK_THROWS_AS(FullShift(1), UsageError);
    CHECK_THROWS_AS(FullShift(10), UsageError);

    WindowSet t = full.transfer_set("01", "10", 8);
    for (std::uint64_t n = 1; n <= 8; ++n) CHECK(t.contains(n));

    // "00" then "11" cannot overlap at distance 1.
    WindowSet s = full.transfer_set("00", "11", 8);
    CHECK(!s.contains(1));
    CHECK(s.covers(2, 8));

    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        Word u = random_binary_word(rng, 1 + rng() % 6, 0.5);
        Word v = random_binary_word(rng, 1 + rng() % 6, 0.5);
        WindowSet w = full.transfer_set(u, v, 12);
        for (std::uint64_t n = 1; n <= 12; ++n)
            CHECK(w.contains(n) == brute_transfer_member(full, u, v, n));
    }
}

TEST_CASE("closure oracles answer from the reference point") {
    SubstitutionClosureShift closure(1);
    CHECK(closure.id() == "closure:d=1");
    CHECK(closure.depth() == 1);

    Admissibility hit = closure.admissible("110");
    CHECK(hit.yes());
    CHECK(hit.occurrence == 0);
    CHECK(closure.admissible("0101").occurrence == 6);
    CHECK(closure.admissible("").yes());

    // "110" is always preceded by '1' in the fixed point, so "0110" never
    // occurs; absence from a prefix is reported at confidence, not as a hard
    // no.
    Admissibility miss = closure.admissible("0110");
    CHECK(miss.verdict == Trilean::no_at_confidence);
    CHECK(miss.reason.find("absent") != std::string::npos);

    CHECK(closure.admissible("2").verdict == Trilean::no);
    CHECK_THROWS_AS(closure.zero_extension_point("2"), NotAdmissibleError);
    CHECK(!closure.zero_extension_point("110").has_value());
    CHECK(!closure.zero_extension_point("0110").has_value());
}

TEST_CASE("closure transfer sees the marker return times") {
    SubstitutionClosureShift closure(1);
    WindowSet t = closure.transfer_set("110", "110", 100);
    CHECK(t.contains(4));
    CHECK(t.contains(8));
    CHECK(t.contains(12));
    for (std::uint64_t n : {1, 2, 3, 5, 6, 7}) CHECK(!t.contains(n));
}

TEST_CASE("descriptors build every kind") {
    const char* ids[] = {"full",         "full:3",    "spacing-even",
                         "spacing-odd",  "ap-free",   "ap-free:allow-empty",
                         "ip-free",      "budget:identity", "budget:log2",
                         "budget:log3",  "closure:d=1", "closure:d=8"};
    for (const char* id : ids) {
        auto shift = make_subshift(id);
        REQUIRE(shift != nullptr);
        CHECK(shift->id() == id);
    }
    CHECK_THROWS_AS(make_subshift("nope"), ParseError);
    CHECK_THROWS_AS(make_subshift("budget:sqrt"), ParseError);
    CHECK_THROWS_AS(make_subshift("closure:d=0"), ParseError);
    CHECK_THROWS_AS(make_subshift("closure:d=9"), ParseError);
    CHECK_THROWS_AS(make_subshift("full:1"), UsageError);
}
