// SPDX-License-Identifier: Apache-2.0
#include "quadchar/character.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace quadchar;

TEST(CharacterTable, F9Fibers) {
    field f(3, 2);
    const fiber_sets fib = fibers(build_character_table(f));
    EXPECT_EQ(fib.squares, (std::vector<index_t>{1, 2, 3, 6}));  // 1, 2, g, 2g
    EXPECT_EQ(fib.nonsquares, (std::vector<index_t>{4, 5, 7, 8}));
}

TEST(CharacterTable, SmallPrimeFieldFibers) {
    field f5(5, 1);
    const fiber_sets fib5 = fibers(build_character_table(f5));
    EXPECT_EQ(fib5.squares, (std::vector<index_t>{1, 4}));
    EXPECT_EQ(fib5.nonsquares, (std::vector<index_t>{2, 3}));

    field f7(7, 1);
    const fiber_sets fib7 = fibers(build_character_table(f7));
    EXPECT_EQ(fib7.squares, (std::vector<index_t>{1, 2, 4}));
    EXPECT_EQ(fib7.nonsquares, (std::vector<index_t>{3, 5, 6}));

    field f3(3, 1);
    const fiber_sets fib3 = fibers(build_character_table(f3));
    EXPECT_EQ(fib3.squares, (std::vector<index_t>{1}));
    EXPECT_EQ(fib3.nonsquares, (std::vector<index_t>{2}));
}

TEST(CharacterTable, ChiOfOneIsPlusOne) {
    for (auto [p, m] : {std::pair<std::int64_t, std::int64_t>{3, 1}, {13, 1}, {3, 2}, {5, 3}}) {
        const character_table t = build_character_table(field(p, m));
        EXPECT_EQ(t.chi[1], +1);
        EXPECT_EQ(t.chi[0], 0);
    }
}

TEST(CharacterTable, FibersAreBalancedUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        const fiber_sets fib = fibers(build_character_table(f));
        ASSERT_EQ(static_cast<std::int64_t>(fib.squares.size()), (f.order() - 1) / 2);
        ASSERT_EQ(static_cast<std::int64_t>(fib.nonsquares.size()), (f.order() - 1) / 2);
    }
}

TEST(CharacterTable, SquareFiberMatchesDirectSquaringUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        const fiber_sets fib = fibers(build_character_table(f));
        const std::set<std::int64_t> direct = oracles::squares_by_squaring(p, m, f.modulus());
        const std::set<std::int64_t> from_chi(fib.squares.begin(), fib.squares.end());
        ASSERT_EQ(from_chi, direct) << "p=" << p << " m=" << m;
    }
}

TEST(CharacterTable, MultiplicativeExhaustivelyUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        const character_table t = build_character_table(f);
        for (index_t i = 1; i < f.order(); ++i)
            for (index_t j = i; j < f.order(); ++j)
                ASSERT_EQ(t.chi[f.mul_index(i, j)], t.chi[i] * t.chi[j])
                    << "p=" << p << " m=" << m;
    }
}

TEST(CharacterTable, MultiplicativeOnRandomPairsInLargeField) {
    field f(4093, 1);
    const character_table t = build_character_table(f);
    std::mt19937_64 rng(1729);
    std::uniform_int_distribution<index_t> pick(1, f.order() - 1);
    for (int it = 0; it < 10000; ++it) {
        const index_t i = pick(rng), j = pick(rng);
        ASSERT_EQ(t.chi[f.mul_index(i, j)], t.chi[i] * t.chi[j]);
    }
}

TEST(CharacterTable, ChiOfMinusOneLawUnderCap) {
    for (auto [p, m] : testutil::field_params_up_to(4096)) {
        field f(p, m);
        const character_table t = build_character_table(f);
        const index_t minus_one = f.index_of(f.neg(f.one()));
        const int expected = (p % 4 == 1 || m % 2 == 0) ? +1 : -1;
        ASSERT_EQ(t.chi[minus_one], expected) << "p=" << p << " m=" << m;
    }
}
