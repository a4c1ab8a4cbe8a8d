// Tests for the foundations: digit words, sparse words, copy merging, the
// depth-d substitution family, and exact rationals.  merge_copies has a dense
// and a sparse implementation that must never drift apart, so they are
// hammered against each other on random inputs.

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "vdwlab/rational.hpp"
#include "vdwlab/substitution.hpp"
#include "vdwlab/word.hpp"

using namespace vdwlab;

TEST_CASE("word alphabet checks") {
    CHECK(is_word_over("0120", 3));
    CHECK(!is_word_over("012", 2));
    CHECK(is_word_over("", 2));
    CHECK(!is_word_over("10a", 3));
    CHECK_NOTHROW(require_word("0101", 2));
    CHECK_THROWS_AS(require_word("012", 2), UnknownSymbolError);
}

TEST_CASE("symbol positions") {
    CHECK(ones_of("10110") == std::vector<std::uint64_t>{0, 2, 3});
    CHECK(positions_of("10110", '0') == std::vector<std::uint64_t>{1, 4});
    CHECK(ones_of("000").empty());
}

TEST_CASE("sparse words round-trip and validate") {
    SparseWord s = SparseWord::from_text("0100101");
    CHECK(s.length == 7);
    CHECK(s.positions == std::vector<std::uint64_t>{1, 4, 6});
    CHECK(s.consistent());
    CHECK(s.to_text() == "0100101");

    SparseWord bad;
    bad.length = 5;
    bad.positions = {3, 1};
    CHECK(!bad.consistent());
    bad.positions = {1, 1};
    CHECK(!bad.consistent());
    bad.positions = {5};
    CHECK(!bad.consistent());

    SparseWord huge;
    huge.length = (std::uint64_t{1} << 24) + 1;
    CHECK_THROWS_AS(huge.to_text(), MemberCapExceededError);
}

TEST_CASE("merge_copies detects overlap conflicts") {
    Word out;
    CHECK(merge_copies("101", {0, 2}, out));
    CHECK(out == "10101");
    CHECK(merge_copies("11", {0, 3}, out));
    CHECK(out == "11011");
    // Shifting "10" by one puts a mark where the first copy wrote a zero.
    CHECK(!merge_copies("10", {0, 1}, out));
    // Identical offsets always agree.
    CHECK(merge_copies("110", {4, 4}, out));
    CHECK(out == "0000110");
}

TEST_CASE("sparse merge agrees with the dense merge on random cases") {
    std::mt19937 rng(624);
    for (int round = 0; round < 300; ++round) {
        std::size_t len = 1 + rng() % 12;
        Word w;
        for (std::size_t i = 0; i < len; ++i) w += (rng() % 2) ? '1' : '0';
        std::vector<std::uint64_t> offsets;
        std::size_t copies = 1 + rng() % 4;
        for (std::size_t i = 0; i < copies; ++i) offsets.push_back(rng() % 30);

        Word dense;
        bool dense_ok = merge_copies(w, offsets, dense);
        SparseWord sparse;
        bool sparse_ok = merge_copies_sparse(w.size(), ones_of(w), offsets, sparse);

        CHECK(dense_ok == sparse_ok);
        if (dense_ok) {
            CHECK(sparse.length == dense.size());
            CHECK(sparse.positions == ones_of(dense));
            CHECK(sparse.consistent());
        }
    }
}

TEST_CASE("substitution constructor guards") {
    CHECK_THROWS_AS(Substitution("01", "011"), UsageError);
    CHECK_THROWS_AS(Substitution("0", "1"), UsageError);
    CHECK_THROWS_AS(Substitution("02", "12"), UnknownSymbolError);
    Substitution s("01", "10");
    CHECK_THROWS_AS(s.image('2'), UnknownSymbolError);
}

TEST_CASE("substitution application") {
    Substitution s("0101", "1101");
    CHECK(s.length() == 4);
    CHECK(s.image('0') == "0101");
    CHECK(s.image('1') == "1101");
    CHECK(s.apply("10") == "11010101");
    CHECK(s.apply("").empty());
}

TEST_CASE("fixed point prefixes are coherent") {
    Substitution s = depth_substitution(1);
    // By hand: 1 -> 1101 -> 1101 1101 0101 1101.
    CHECK(s.fixed_point_prefix('1', 16) == "1101110101011101");
    CHECK(s.fixed_point_prefix('1', 3) == "110");

    // Substituting a prefix of the fixed point yields a longer prefix of the
    // same fixed point.
    Word p = s.fixed_point_prefix('1', 40);
    CHECK(s.apply(p).substr(0, 100) == s.fixed_point_prefix('1', 100));

    // Prefixes nest.
    Word longer = s.fixed_point_prefix('1', 200);
    CHECK(longer.substr(0, 40) == p);

    Substitution shifted("10", "11");
    CHECK_THROWS_AS(shifted.fixed_point_prefix('0', 8), SeedNotExtensibleError);
    CHECK(shifted.fixed_point_prefix('1', 4) == "1111");
}

TEST_CASE("depth family images") {
    CHECK(depth_substitution(1).image('0') == "0101");
    CHECK(depth_substitution(1).image('1') == "1101");
    CHECK(depth_substitution(2).image('0') == "011011011");
    CHECK(depth_substitution(2).image('1') == "111011011");
    CHECK_THROWS_AS(depth_substitution(0), UsageError);

    for (unsigned d = 1; d <= 5; ++d) {
        Substitution s = depth_substitution(d);
        std::size_t L = static_cast<std::size_t>(d + 1) * (d + 1);
        REQUIRE(s.length() == L);
        // The images differ only in their leading symbol, and the shared tail
        // has zeros exactly at the multiples of d + 1.
        CHECK(s.image('0').substr(1) == s.image('1').substr(1));
        for (std::size_t j = 1; j < L; ++j) {
            char want = (j % (d + 1) == 0) ? '0' : '1';
            CHECK(s.image('1')[j] == want);
        }
    }
}

TEST_CASE("rationals normalize on construction") {
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(-6, -4) == Rat(3, 2));
    CHECK(Rat(0, 7) == Rat(0));
    CHECK(Rat(5).num() == 5);
    CHECK(Rat(5).den() == 1);
    CHECK_THROWS_AS(Rat(1, 0), UsageError);
}

TEST_CASE("rational arithmetic stays exact") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(1, 2) * Rat(2, 3) == Rat(1, 3));
    CHECK(Rat(1, 2) / Rat(3, 4) == Rat(2, 3));
    CHECK_THROWS_AS(Rat(1, 2) / Rat(0), UsageError);
    // 1/3 repeated 3 times is exactly 1, the classic float failure.
    CHECK(Rat(1, 3) + Rat(1, 3) + Rat(1, 3) == Rat(1));
}

TEST_CASE("rational ordering and printing") {
    CHECK(Rat(1, 3) < Rat(2, 5));
    CHECK(Rat(-1, 2) < Rat(0));
    CHECK(Rat(7, 512).str() == "7/512");
    CHECK(Rat(0).str() == "0");
    CHECK(Rat(-3, 6).str() == "-1/2");
    CHECK(Rat(8, 4).str() == "2");
}

TEST_CASE("rational overflow is detected, not wrapped") {
    Rat big(INT64_MAX, 1);
    CHECK_THROWS_AS(big * big, MemberCapExceededError);
    CHECK_NOTHROW(Rat(INT64_MAX, 2) * Rat(2, 1));
}
