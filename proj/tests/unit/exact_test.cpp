#include <random>

#include <gtest/gtest.h>

#include "dictlp/matrix.hpp"
#include "dictlp/rational.hpp"
#include "oracles.hpp"

using namespace dictlp;
using dictlp::testing::random_matrix;
using dictlp::testing::random_rational;
using dictlp::testing::random_vector;

TEST(Rational, CanonicalizesOnConstruction) {
    const Rational half = rat_canonicalize(2, 4);
    EXPECT_EQ(half.numerator(), 1);
    EXPECT_EQ(half.denominator(), 2);

    const Rational neg = rat_canonicalize(3, -6);
    EXPECT_EQ(neg.numerator(), -1);
    EXPECT_EQ(neg.denominator(), 2);

    const Rational zero = rat_canonicalize(0, 7);
    EXPECT_EQ(zero.numerator(), 0);
    EXPECT_EQ(zero.denominator(), 1);
    EXPECT_EQ(zero, Rational(0));
}

TEST(Rational, ZeroDenominatorIsAnError) {
    EXPECT_THROW(rat_canonicalize(1, 0), std::domain_error);
    EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, TextSyntax) {
    EXPECT_EQ(Rational::parse("-11/2"), Rational::fraction(-11, 2));
    EXPECT_EQ(Rational::parse("3"), Rational(3));
    EXPECT_EQ(Rational::parse("0"), Rational(0));
    EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
    EXPECT_EQ(Rational::fraction(-11, 2).to_string(), "-11/2");
    EXPECT_EQ(Rational(-3).to_string(), "-3");

    for (const char* bad : {"", "-", "+3", "1/", "/2", "1/-2", "1.5", "a", " 3", "--1", "1/2/3"})
        EXPECT_THROW(Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, ArbitraryPrecision) {
    Rational big = Rational::parse("123456789012345678901234567890");
    Rational sq = big * big;
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ(sq.to_string(), "15241578753238836750495351562536198787501905199875019052100");
}

TEST(RationalProperty, FieldRoundTrips) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        const Rational a = random_rational(rng, 1000, 97);
        const Rational b = random_rational(rng, 1000, 97);
        EXPECT_EQ((a + b) - b, a);
        if (!b.is_zero()) {
            EXPECT_EQ((a * b) / b, a);
        }
        EXPECT_GT(a.denominator(), 0);
        EXPECT_EQ(gcd(a.numerator(), a.denominator()), 1);
    }
}

TEST(Rref, IdentityIsFixed) {
    const RrefResult r = rref(QMatrix::identity(2));
    EXPECT_EQ(r.reduced, QMatrix::identity(2));
    EXPECT_EQ(r.rank, 2u);
    EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, DependentRows) {
    const RrefResult r = rref(QMatrix{{1, 2}, {2, 4}});
    EXPECT_EQ(r.reduced, (QMatrix{{1, 2}, {0, 0}}));
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.pivot_cols, (std::vector<std::size_t>{0}));
}

TEST(Rref, AugmentedExampleMatrixHasFullRowRank) {
    const QMatrix a{{4, 2, -2, 1, 0}, {-1, -1, -2, 0, 1}};
    // Oracle: a nonzero 2x2 minor certifies rank 2 for a 2-row matrix.
    EXPECT_NE(dictlp::testing::det2(a(0, 0), a(0, 1), a(1, 0), a(1, 1)), Rational(0));
    EXPECT_EQ(rref(a).rank, 2u);
}

TEST(RrefProperty, IdempotentWithIncreasingPivots) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 5);
        // Sparse-ish entries make rank deficiency common.
        QMatrix m = random_matrix(rng, dim(rng), dim(rng), 2, 2);
        const RrefResult once = rref(m);
        const RrefResult twice = rref(once.reduced);
        EXPECT_EQ(twice.reduced, once.reduced);
        EXPECT_EQ(twice.rank, once.rank);
        EXPECT_TRUE(std::is_sorted(once.pivot_cols.begin(), once.pivot_cols.end()));
        EXPECT_EQ(std::adjacent_find(once.pivot_cols.begin(), once.pivot_cols.end()), once.pivot_cols.end());
        for (std::size_t r = once.rank; r < m.rows(); ++r) EXPECT_TRUE(is_zero(once.reduced.row(r)));
    }
}

TEST(SolveLinear, Examples) {
    EXPECT_EQ(solve_linear(QMatrix::identity(2), QVector{5, -3}), (QVector{5, -3}));
    // A_B for the slack basis of the example is the identity.
    EXPECT_EQ(solve_linear(QMatrix{{1, 0}, {0, 1}}, QVector{18, -3}), (QVector{18, -3}));
    EXPECT_FALSE(solve_linear(QMatrix{{1, 1}, {1, 1}}, QVector{1, 2}).has_value());
    EXPECT_FALSE(solve_linear(QMatrix{{1, 1}, {1, 1}}, QVector{0, 0}).has_value());
}

TEST(SolveLinear, DimensionMismatch) {
    EXPECT_THROW(solve_linear(QMatrix(2, 3), QVector{1, 2}), std::invalid_argument);
    EXPECT_THROW(solve_linear(QMatrix::identity(2), QVector{1, 2, 3}), std::invalid_argument);
}

TEST(SolveLinearProperty, SolutionSatisfiesSystem) {
    std::mt19937_64 rng(3);
    int solved = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        const std::size_t n = dim(rng);
        const QMatrix m = random_matrix(rng, n, n, 3, 2);
        const QVector rhs = random_vector(rng, n);
        auto x = solve_linear(m, rhs);
        EXPECT_EQ(x.has_value(), rank(m) == n);
        if (x) {
            EXPECT_EQ(m * *x, rhs);
            ++solved;
        }
    }
    EXPECT_GT(solved, 100);
}

TEST(Rowspace, Contains) {
    EXPECT_TRUE(rowspace_contains(QMatrix::identity(3), QVector{7, -1, 2}));
    EXPECT_FALSE(rowspace_contains(QMatrix{{1, 0, 0}}, QVector{0, 1, 0}));
    const QMatrix r{{0, 4, 2, -2, 1, 0, -18}, {0, -1, -1, -2, 0, 1, 3}, {1, -8, -11, 10, 0, 0, 0}};
    EXPECT_TRUE(rowspace_contains(r, QVector{1, -8, -11, 10, 0, 0, 0}));
    EXPECT_THROW(rowspace_contains(r, QVector{1, 2}), std::invalid_argument);
}

TEST(Rowspace, Equal) {
    const QMatrix id = QMatrix::identity(2);
    EXPECT_TRUE(rowspace_equal(id, id));
    EXPECT_TRUE(rowspace_equal(id, QMatrix{{2, 0}, {0, 3}}));
    EXPECT_FALSE(rowspace_equal(id, QMatrix{{1, 1}}));
    EXPECT_THROW(rowspace_equal(id, QMatrix(2, 3)), std::invalid_argument);
}

TEST(RowspaceProperty, EqualIsAnEquivalence) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const QMatrix base = random_matrix(rng, 3, 5);
        // Same span through random invertible recombinations.
        auto recombine = [&](const QMatrix& m) {
            for (;;) {
                QMatrix t = random_matrix(rng, 3, 3);
                if (rank(t) == 3) return t * m;
            }
        };
        const QMatrix b = recombine(base);
        const QMatrix c = recombine(b);
        EXPECT_TRUE(rowspace_equal(base, base));
        EXPECT_EQ(rowspace_equal(base, b), rowspace_equal(b, base));
        EXPECT_TRUE(rowspace_equal(base, b));
        EXPECT_TRUE(rowspace_equal(b, c));
        EXPECT_TRUE(rowspace_equal(base, c));

        QMatrix other = random_matrix(rng, 2, 5);
        EXPECT_EQ(rowspace_equal(base, other), rowspace_equal(other, base));
    }
}
