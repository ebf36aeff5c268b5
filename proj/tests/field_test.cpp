// SPDX-License-Identifier: Apache-2.0
#include "quadchar/field.hpp"

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "test_util.hpp"

using namespace quadchar;

TEST(FieldConstruction, PrimeFieldDefaultModulusIsX) {
    field f(5, 1);
    EXPECT_EQ(f.order(), 5);
    EXPECT_EQ(f.modulus(), (std::vector<std::int64_t>{0, 1}));
}

TEST(FieldConstruction, DefaultModulusIsLexSmallestIrreducible) {
    field f(3, 2);
    EXPECT_EQ(f.modulus(), (std::vector<std::int64_t>{1, 0, 1}));  // x^2 + 1

    // cross-check the selection rule against trial division on several fields
    for (auto [p, m] : {std::pair<std::int64_t, std::int64_t>{3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
        field g(p, m);
        EXPECT_EQ(g.modulus(), oracles::smallest_irreducible(p, m)) << "p=" << p << " m=" << m;
    }
}

TEST(FieldConstruction, DefaultModulusIsDeterministic) {
    field a(3, 3), b(3, 3);
    EXPECT_TRUE(a == b);
}

TEST(FieldConstruction, RejectsReducibleModulus) {
    // x^2 + 2 = (x+1)(x+2) over Z_3; the root test agrees
    std::vector<std::int64_t> f{2, 0, 1};
    EXPECT_FALSE(oracles::irreducible_by_trial_division(f, 3));
    try {
        field bad(3, 2, f);
        FAIL() << "expected reducible_modulus";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::reducible_modulus);
    }
}

TEST(FieldConstruction, AcceptsExplicitIrreducibleModulus) {
    field f(3, 2, std::vector<std::int64_t>{1, 0, 1});
    EXPECT_EQ(f.order(), 9);
}

TEST(FieldConstruction, ErrorCodes) {
    EXPECT_THROW(
        {
            try {
                field f(9, 1);
            } catch (const error& e) {
                EXPECT_EQ(e.code(), errc::not_prime);
                throw;
            }
        },
        error);
    EXPECT_THROW(
        {
            try {
                field f(2, 3);
            } catch (const error& e) {
                EXPECT_EQ(e.code(), errc::even_prime);
                throw;
            }
        },
        error);
    EXPECT_THROW(
        {
            try {
                field f(3, 8);  //  3^8 = 6561 > 4096
            } catch (const error& e) {
                EXPECT_EQ(e.code(), errc::order_cap_exceeded);
                throw;
            }
        },
        error);
}

TEST(FieldConstruction, CapIsOverridable) {
    field f(3, 8, std::nullopt, 6561);
    EXPECT_EQ(f.order(), 6561);
}

TEST(FieldArithmetic, GammaSquaredInF9) {
    field f(3, 2);  // x^2 + 1, so g^2 = -1 = 2
    const field_element g = f.element({0, 1});
    EXPECT_EQ(f.mul(g, g), f.from_constant(2));
}

TEST(FieldArithmetic, ProductExampleInF9) {
    // (1+g)(1+2g) = 1 + 3g + 2g^2 = 1 + 0 + 2*2 = 5 = 2
    field f(3, 2);
    EXPECT_EQ(f.mul(f.element({1, 1}), f.element({1, 2})), f.from_constant(2));
}

TEST(FieldArithmetic, InverseOfOneIsOne) {
    for (auto [p, m] : {std::pair<std::int64_t, std::int64_t>{5, 1}, {3, 2}, {7, 2}}) {
        field f(p, m);
        EXPECT_EQ(f.inv(f.one()), f.one());
    }
}

TEST(FieldArithmetic, InverseIsExactOnSmallFields) {
    for (auto [p, m] : {std::pair<std::int64_t, std::int64_t>{7, 1}, {3, 2}, {5, 2}, {3, 3}}) {
        field f(p, m);
        for (index_t i = 1; i < f.order(); ++i) {
            const field_element a = f.element_at(i);
            EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
        }
    }
}

TEST(FieldArithmetic, ZeroHasNoInverse) {
    field f(5, 1);
    try {
        f.inv(f.zero());
        FAIL() << "expected zero_inverse";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::zero_inverse);
    }
}

TEST(FieldArithmetic, PowMatchesRepeatedMultiplication) {
    field f(5, 2);
    const field_element a = f.element({2, 3});
    field_element acc = f.one();
    for (int e = 0; e <= 12; ++e) {
        EXPECT_EQ(f.pow(a, e), acc) << "e=" << e;
        acc = f.mul(acc, a);
    }
}

TEST(FieldNorm, ConjugateFormulaInF9) {
    // with g^2 = -1: N(a+bg) = (a+bg)(a-bg) = a^2 + b^2
    field f(3, 2);
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b) {
            if (a == 0 && b == 0) continue;
            EXPECT_EQ(f.norm(f.element({a, b})), (a * a + b * b) % 3);
        }
    EXPECT_EQ(f.norm(f.element({1, 1})), 2);
}

TEST(FieldNorm, IdentityCases) {
    field f9(3, 2), f5(5, 1);
    EXPECT_EQ(f9.norm(f9.one()), 1);
    EXPECT_EQ(f5.norm(f5.from_constant(3)), 3);  // m = 1 norm is the identity
    EXPECT_EQ(f9.norm(f9.zero()), 0);
}

TEST(FieldNorm, MultiplicativeOnAllFieldsUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        for (index_t i = 1; i < f.order(); ++i)
            for (index_t j = i; j < f.order(); ++j) {
                const field_element a = f.element_at(i), b = f.element_at(j);
                ASSERT_EQ(f.norm(f.mul(a, b)), f.norm(a) * f.norm(b) % p)
                    << "p=" << p << " m=" << m << " i=" << i << " j=" << j;
            }
    }
}

TEST(EulerCriterion, SmallPrimeField) {
    field f(7, 1);
    EXPECT_EQ(f.euler_criterion(f.from_constant(2)), +1);  // 2 = 3^2, and 2^3 = 8 = 1 mod 7
    EXPECT_EQ(f.euler_criterion(f.from_constant(3)), -1);  // 3^3 = 27 = -1 mod 7
    EXPECT_EQ(f.euler_criterion(f.one()), +1);
}

TEST(EulerCriterion, RejectsZero) {
    field f(7, 1);
    try {
        f.euler_criterion(f.zero());
        FAIL() << "expected zero_element";
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::zero_element);
    }
}

TEST(EulerCriterion, AgreesWithNormLegendreUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        for (index_t i = 1; i < f.order(); ++i) {
            const field_element b = f.element_at(i);
            ASSERT_EQ(legendre(f.norm(b), p), f.euler_criterion(b)) << "p=" << p << " m=" << m;
        }
    }
}

TEST(Legendre, KnownValues) {
    EXPECT_EQ(legendre(2, 7), +1);  // 2 = 3^2 mod 7
    EXPECT_EQ(legendre(0, 5), 0);
    for (std::int64_t p : {3, 5, 7, 11, 13}) EXPECT_EQ(legendre(1, p), +1);
}

TEST(Legendre, MatchesDirectSquaringModEleven) {
    std::set<std::int64_t> squares;
    for (std::int64_t x = 1; x < 11; ++x) squares.insert(x * x % 11);
    for (std::int64_t a = 1; a < 11; ++a)
        EXPECT_EQ(legendre(a, 11), squares.count(a) ? +1 : -1);
}

TEST(ElementIndex, RoundTripOnAllFieldsUnder512) {
    for (auto [p, m] : testutil::field_params_up_to(512)) {
        field f(p, m);
        for (index_t i = 0; i < f.order(); ++i)
            ASSERT_EQ(f.index_of(f.element_at(i)), i) << "p=" << p << " m=" << m;
        EXPECT_EQ(f.index_of(f.zero()), 0);
        EXPECT_EQ(f.index_of(f.one()), 1);
    }
}

TEST(ElementIndex, AdderMatchesElementAddition) {
    for (auto [p, m] : {std::pair<std::int64_t, std::int64_t>{13, 1}, {3, 3}, {5, 2}}) {
        field f(p, m);
        const index_adder add(f);
        for (index_t i = 0; i < f.order(); ++i)
            for (index_t j = 0; j < f.order(); ++j) {
                ASSERT_EQ(add(i, j), f.add_index(i, j));
                ASSERT_EQ(add(i, j), oracles::add_indices(i, j, p, m));
            }
    }
}

TEST(Irreducibility, RabinAgreesWithTrialDivision) {
    for (std::int64_t p : {3, 5}) {
        for (std::int64_t t = 0; t < p * p; ++t) {
            detail::zp_poly f = oracles::digits(t, p, 2);
            f.push_back(1);
            EXPECT_EQ(detail::is_irreducible(f, p), oracles::irreducible_by_trial_division(f, p))
                << "p=" << p << " t=" << t;
        }
    }
    for (std::int64_t t = 0; t < 27; ++t) {
        detail::zp_poly f = oracles::digits(t, 3, 3);
        f.push_back(1);
        EXPECT_EQ(detail::is_irreducible(f, 3), oracles::irreducible_by_trial_division(f, 3));
    }
}
