#include <random>

#include <gtest/gtest.h>

#include "dictlp/duality.hpp"
#include "oracles.hpp"

using namespace dictlp;

namespace {

StandardLP e1() { return StandardLP(QMatrix{{4, 2, -2}, {-1, -1, -2}}, QVector{18, -3}, QVector{8, 11, -10}); }

using Idx = std::vector<std::size_t>;

const QMatrix kE1R{{0, 4, 2, -2, 1, 0, -18}, {0, -1, -1, -2, 0, 1, 3}, {1, -8, -11, 10, 0, 0, 0}};

}  // namespace

TEST(BuildR, Example) {
    const RMatrix r = build_R(e1());
    EXPECT_EQ(r.mat, kE1R);
    EXPECT_EQ(rank(r.mat), 3u);
    EXPECT_EQ(r.mat(2, 6), Rational(0));
}

TEST(BuildR, RankIsAlwaysMPlusOne) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        const StandardLP lp = dictlp::testing::random_integer_lp(rng, dim(rng), dim(rng));
        EXPECT_EQ(rank(build_R(lp).mat), lp.m() + 1);
    }
}

TEST(InKernel, Examples) {
    const RMatrix r = build_R(e1());
    EXPECT_TRUE(in_kernel(r, QVector{0, 0, 0, 0, 18, -3, 1}));
    EXPECT_TRUE(in_kernel(r, QVector{24, 3, 0, 0, 6, 0, 1}));
    // Oracle: first row of R dotted with all ones is 4+2-2+1-18 = -13.
    EXPECT_EQ(dot(r.mat.row(0), QVector{1, 1, 1, 1, 1, 1, 1}), Rational(-13));
    EXPECT_FALSE(in_kernel(r, QVector{1, 1, 1, 1, 1, 1, 1}));
    EXPECT_THROW(in_kernel(r, QVector{1, 2}), std::invalid_argument);
}

TEST(InRowspace, Examples) {
    const RMatrix r = build_R(e1());
    EXPECT_TRUE(in_rowspace(r, QVector{1, -8, -11, 10, 0, 0, 0}));
    // Initial dual dictionary: y = (-8, -11, 10, 0, 0), -w = 0.
    EXPECT_TRUE(in_rowspace(r, QVector{1, -8, -11, 10, 0, 0, 0}));
    // Second dual dictionary: y5 = -8, y2 = -3, y3 = 26, -w = -24.
    EXPECT_TRUE(in_rowspace(r, QVector{1, 0, -3, 26, 0, -8, -24}));
    EXPECT_FALSE(in_rowspace(r, QVector{24, 3, 0, 0, 6, 0, 1}));
    EXPECT_THROW(in_rowspace(r, QVector{1}), std::invalid_argument);

    auto u = rowspace_witness(r, QVector{1, 0, -3, 26, 0, -8, -24});
    ASSERT_TRUE(u.has_value());
    EXPECT_EQ(*u, (QVector{0, -8, 1}));
    EXPECT_FALSE(rowspace_witness(r, QVector{24, 3, 0, 0, 6, 0, 1}).has_value());
}

TEST(Orthogonality, KernelAndRowspaceAreComplements) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 4);
        const StandardLP lp = dictlp::testing::random_integer_lp(rng, dim(rng), dim(rng));
        const RMatrix r = build_R(lp);
        const auto kernel = dictlp::testing::nullspace_basis(r.mat);
        ASSERT_EQ(kernel.size(), lp.n() + 1);
        for (int sample = 0; sample < 5; ++sample) {
            QVector x(r.mat.cols());
            for (const auto& k : kernel) x = x + dictlp::testing::random_rational(rng) * k;
            QVector y(r.mat.cols());
            for (std::size_t i = 0; i < r.mat.rows(); ++i) y = y + dictlp::testing::random_rational(rng) * r.mat.row(i);
            EXPECT_TRUE(in_kernel(r, x));
            EXPECT_TRUE(in_rowspace(r, y));
            EXPECT_EQ(dot(x, y), Rational(0));
            if (!is_zero(x)) {
                EXPECT_FALSE(in_rowspace(r, x));
            }
        }
        // [x0, x, 1] is in the kernel iff A0 x_dec + x_slack = b and x0 = c^T x_dec.
        for (int sample = 0; sample < 5; ++sample) {
            const QVector x_dec = dictlp::testing::random_vector(rng, lp.n());
            const QVector slack = lp.b() - lp.a0() * x_dec;
            QVector xbar(lp.m() + lp.n() + 2);
            xbar[0] = dot(lp.c(), x_dec);
            for (std::size_t j = 0; j < lp.n(); ++j) xbar[1 + j] = x_dec[j];
            for (std::size_t i = 0; i < lp.m(); ++i) xbar[1 + lp.n() + i] = slack[i];
            xbar[lp.m() + lp.n() + 1] = 1;
            EXPECT_TRUE(in_kernel(r, xbar));
            xbar[0] += 1;
            EXPECT_FALSE(in_kernel(r, xbar));
        }
    }
}

TEST(DictionaryMatrix, Examples) {
    const DictionaryMatrix dm0 = dictionary_matrix(initial_dictionary(e1()));
    EXPECT_EQ(dm0.mat, kE1R);
    EXPECT_EQ(dm0.labels, (Idx{0, 1, 2, 3, 4, 5, 6}));

    const Dictionary second = pivot(initial_dictionary(e1()), 1, 5);
    const DictionaryMatrix dm1 = dictionary_matrix(second);
    EXPECT_EQ(dm1.labels, (Idx{0, 5, 2, 3, 4, 1, 6}));
    EXPECT_EQ(dm1.mat.rows(), 3u);
    EXPECT_EQ(dm1.mat, (QMatrix{{0, 4, -2, -10, 1, 0, -6}, {0, -1, 1, 2, 0, 1, -3}, {1, -8, -3, 26, 0, 0, -24}}));
    EXPECT_TRUE(rowspace_equal(dm1.natural_order(), kE1R));
    EXPECT_FALSE(rowspace_equal(dm1.mat, kE1R));  // label bookkeeping matters
}

TEST(DualDictionaryDirect, ExampleDictionaries) {
    const Idx initial{1, 2, 3};
    const Dictionary d0 = dual_dictionary_direct(e1(), initial);
    EXPECT_EQ(d0.side(), Side::Dual);
    EXPECT_EQ(canonicalize(d0), canonicalize(negative_transpose(initial_dictionary(e1()))));
    EXPECT_EQ(d0.constants(), (QVector{-8, -11, 10}));

    const Idx second{5, 2, 3};
    const Dictionary d1 = dual_dictionary_direct(e1(), second);
    const Dictionary expected(Side::Dual, {5, 2, 3}, {4, 1}, QVector{-8, -3, 26}, QMatrix{{-4, 1}, {2, -1}, {10, -2}},
                              QVector{-6, -3}, -24);
    EXPECT_TRUE(equivalent(d1, expected));
}

TEST(DualDictionaryDirect, SingularSelection) {
    const StandardLP lp(QMatrix{{1, 2}, {2, 4}}, QVector{1, 1}, QVector{1, 1});
    // Primal basis {1,2} is singular, so the matching dual selection N = {3,4} is singular too.
    const Idx s{3, 4};
    EXPECT_THROW(dual_dictionary_direct(lp, s), NotABasisError);
}

TEST(VerifyBijection, ExampleBases) {
    for (const Idx& b : {Idx{4, 5}, Idx{4, 1}}) {
        const BijectionReport rep = verify_bijection(e1(), b);
        EXPECT_TRUE(rep.negative_transpose_matches);
        EXPECT_TRUE(rep.rowspace_matches);
        EXPECT_TRUE(rep.passed());
        EXPECT_EQ(rep.details, "ok");
    }
    const StandardLP lp(QMatrix{{1, 2}, {2, 4}}, QVector{1, 1}, QVector{1, 1});
    const Idx singular{1, 2};
    EXPECT_THROW(verify_bijection(lp, singular), NotABasisError);
}

TEST(EnumerateBases, Example) {
    // Oracle: every 2x2 column pair of [A0 I] has a nonzero determinant.
    const QMatrix a = augment(e1()).a;
    int nonsingular = 0;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            if (!dictlp::testing::det2(a(0, i), a(0, j), a(1, i), a(1, j)).is_zero()) ++nonsingular;
    EXPECT_EQ(nonsingular, 10);

    const auto bases = enumerate_bases(e1(), 100000);
    EXPECT_EQ(bases.size(), 10u);
    EXPECT_EQ(bases.front(), (Idx{1, 2}));
    EXPECT_EQ(bases.back(), (Idx{4, 5}));
    EXPECT_TRUE(std::is_sorted(bases.begin(), bases.end()));
}

TEST(EnumerateBases, SkipsSingularAndRefusesLargeBudgets) {
    const StandardLP zero_col(QMatrix{{0}}, QVector{1}, QVector{1});
    EXPECT_EQ(enumerate_bases(zero_col), (std::vector<Idx>{{2}}));
    try {
        enumerate_bases(e1(), 3);
        FAIL() << "expected refusal";
    } catch (const BudgetExceededError& e) {
        EXPECT_EQ(e.candidates(), 10u);
        EXPECT_NE(std::string(e.what()).find("10"), std::string::npos);
    }
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(6, 3), 20u);
    EXPECT_EQ(binomial(2, 3), 0u);
}

TEST(VerifyAllBases, ParallelMatchesSequential) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 10; ++trial) {
        const StandardLP lp = dictlp::testing::random_integer_lp(rng, 3, 3);
        const auto seq = verify_all_bases(lp, kDefaultBasisLimit, 1);
        const auto par = verify_all_bases(lp, kDefaultBasisLimit, 4);
        ASSERT_EQ(seq.size(), par.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            EXPECT_EQ(seq[i].basis, par[i].basis);
            EXPECT_TRUE(par[i].passed());
        }
    }
}

// y_B free, y_N read off the negative transpose: [1, y, -w] lies in the row
// space of R; conversely row-space vectors with y0 = 1 satisfy the dual
// dictionary equations.
TEST(BijectionProperty, SolutionSetsCoincide) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<std::size_t> dim(1, 3);
        const StandardLP lp = dictlp::testing::random_integer_lp(rng, dim(rng), dim(rng));
        const RMatrix r = build_R(lp);
        const std::size_t total = lp.m() + lp.n();
        for (const auto& basis : enumerate_bases(lp)) {
            const Dictionary dual = negative_transpose(dictionary_from_basis(augment(lp), basis));
            for (int sample = 0; sample < 3; ++sample) {
                QVector y(total);
                for (std::size_t v : dual.nonbasis()) y[v - 1] = dictlp::testing::random_rational(rng);
                Rational obj = dual.objective_value();
                for (std::size_t k = 0; k < dual.cols(); ++k) obj += dual.objective()[k] * y[dual.nonbasis()[k] - 1];
                for (std::size_t i = 0; i < dual.rows(); ++i) {
                    Rational v = dual.constants()[i];
                    for (std::size_t k = 0; k < dual.cols(); ++k)
                        v -= dual.coefficients()(i, k) * y[dual.nonbasis()[k] - 1];
                    y[dual.basis()[i] - 1] = v;
                }
                QVector ybar(total + 2);
                ybar[0] = 1;
                for (std::size_t j = 0; j < total; ++j) ybar[1 + j] = y[j];
                ybar[total + 1] = obj;
                EXPECT_TRUE(in_rowspace(r, ybar));

                // Converse: random multipliers with u0 = 1.
                QVector u = dictlp::testing::random_vector(rng, lp.m() + 1);
                u[lp.m()] = 1;
                const QVector row = r.mat.transpose() * u;
                for (std::size_t i = 0; i < dual.rows(); ++i) {
                    Rational v = dual.constants()[i];
                    for (std::size_t k = 0; k < dual.cols(); ++k)
                        v -= dual.coefficients()(i, k) * row[dual.nonbasis()[k]];
                    EXPECT_EQ(v, row[dual.basis()[i]]);
                }
                Rational w = dual.objective_value();
                for (std::size_t k = 0; k < dual.cols(); ++k) w += dual.objective()[k] * row[dual.nonbasis()[k]];
                EXPECT_EQ(w, row[total + 1]);
            }
        }
    }
}
