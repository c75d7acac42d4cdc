#include "oracles.hpp"

#include "sqdet/polyring.hpp"
#include "sqdet/random.hpp"

#include <gtest/gtest.h>

using namespace sqdet;

TEST(IntPoly, NormalizesAndPrints) {
    IntPoly p{1, 0, 2, 0, 1, 0, 0};
    EXPECT_EQ(p.degree(), 4);
    EXPECT_EQ(p.to_string(), "1 + 2q^2 + q^4");
    EXPECT_TRUE((IntPoly{0, 0}).is_zero());
    EXPECT_EQ(IntPoly().degree(), IntPoly::kZeroDegree);
    EXPECT_EQ(IntPoly::monomial(-3, 2).to_string(), "-3q^2");
}

TEST(IntPoly, Arithmetic) {
    IntPoly a{1, 1};   // 1 + q
    IntPoly b{-1, 1};  // -1 + q
    EXPECT_EQ(a * b, (IntPoly{-1, 0, 1}));
    EXPECT_EQ(a + b, (IntPoly{0, 2}));
    EXPECT_EQ(a - a, IntPoly());
    EXPECT_EQ(a.pow(3), (IntPoly{1, 3, 3, 1}));
    EXPECT_EQ(IntPoly::divexact(a * b, b), a);
    EXPECT_THROW(IntPoly::divexact(IntPoly{1, 0, 1}, a), std::logic_error);
}

TEST(IntPoly, QIntegers) {
    EXPECT_EQ(q_integer(1), IntPoly(1L));
    EXPECT_EQ(q_integer(3), (IntPoly{1, 0, 1, 0, 1}));
    EXPECT_EQ(poly_eval(IntPoly{1, 0, 2, 0, 1}, 2), 25);
    EXPECT_THROW(q_integer(0), std::invalid_argument);
    for (unsigned n = 1; n < 12; ++n) {
        EXPECT_EQ(q_integer(n), oracle::q_int(n));
        EXPECT_EQ(poly_eval(q_integer(n), 1), n);
    }
    // [4][2] from the two-line-pair fixtures
    EXPECT_EQ(q_integer(4) * q_integer(2), (IntPoly{1, 0, 2, 0, 2, 0, 2, 0, 1}));
}

TEST(Det, SmallKnownValues) {
    EXPECT_EQ(int_det(IntMatrix{{3, 1}, {1, 3}}), 8);
    EXPECT_EQ(int_det(IntMatrix{{3, -2}, {-2, 4}}), 8);
    EXPECT_EQ(int_det(IntMatrix{{0, 1}, {1, 0}}), -1);
    EXPECT_EQ(int_det(IntMatrix{{1, 2}, {2, 4}}), 0);
    EXPECT_EQ(int_det(IntMatrix(0, 0)), 1);
    EXPECT_THROW(int_det(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Det, TridiagonalFamily) {
    for (std::size_t n = 1; n <= 30; ++n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 2;
            if (i + 1 < n) m(i, i + 1) = m(i + 1, i) = -1;
        }
        EXPECT_EQ(int_det(m), static_cast<long>(n + 1));
    }
}

TEST(Det, MatchesLaplaceOnRandomIntegerMatrices) {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-2, 2);  // many zeros: exercises pivoting
        EXPECT_EQ(int_det(m), oracle::det(m));
    }
}

TEST(Det, MatchesLaplaceOnRandomPolyMatrices) {
    Rng rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
        PolyMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<BigInt> c(static_cast<std::size_t>(rng.uniform(0, 3)));
                for (auto& x : c) x = rng.uniform(-2, 2);
                m(i, j) = IntPoly(c);
            }
        EXPECT_EQ(poly_det(m), oracle::det(m));
    }
}

TEST(PolyMatrix, LabelsEvaluateSymmetry) {
    EXPECT_THROW(PolyMatrix(std::vector<std::string>{"a", "a"}), std::invalid_argument);
    PolyMatrix m{{IntPoly{1, 0, 1}, IntPoly{0, -1}}, {IntPoly{0, -1}, IntPoly{1, 0, 1}}};
    EXPECT_TRUE(m.is_symmetric());
    EXPECT_EQ(m.evaluate(1), (IntMatrix{{2, -1}, {-1, 2}}));
    EXPECT_EQ(poly_det(m), (IntPoly{1, 0, 1, 0, 1}));
    m(0, 1) = IntPoly(1L);
    EXPECT_FALSE(m.is_symmetric());
}
