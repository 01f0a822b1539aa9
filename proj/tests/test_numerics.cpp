#include <gtest/gtest.h>

#include <random>

#include "ldaha/numerics.hpp"

using namespace ldaha;

namespace {

CMatrix random_matrix(std::mt19937_64 &rng, std::size_t n) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = {u(rng), u(rng)};
    return m;
}

}  // namespace

TEST(MatMul, IdentityLeavesMatrixUnchanged) {
    CMatrix m{{1.0, 2.0}, {CScalar(0, 1), -3.0}};
    EXPECT_TRUE(approx_eq(CMatrix::identity(2) * m, m).ok);
    EXPECT_EQ(approx_eq(CMatrix::identity(2) * m, m).residual, 0.0);
}

TEST(MatMul, DiagonalProduct) {
    CMatrix p = CMatrix::diagonal({2.0, 3.0}) * CMatrix::diagonal({5.0, 7.0});
    EXPECT_EQ(p(0, 0), CScalar(10.0));
    EXPECT_EQ(p(1, 1), CScalar(21.0));
    EXPECT_EQ(p(0, 1), CScalar(0.0));
    EXPECT_EQ(p(1, 0), CScalar(0.0));
}

TEST(MatMul, ShapeMismatchThrows) {
    EXPECT_THROW(mat_mul(CMatrix(2, 3), CMatrix(2, 3)), DimensionError);
}

TEST(MatMul, AssociativeOnRandomTriples) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 9;
        CMatrix a = random_matrix(rng, n), b = random_matrix(rng, n), c = random_matrix(rng, n);
        EXPECT_TRUE(approx_eq((a * b) * c, a * (b * c)).ok);
    }
}

TEST(MatInverse, Identity) {
    EXPECT_TRUE(approx_eq(mat_inverse(CMatrix::identity(5)), CMatrix::identity(5)).ok);
}

TEST(MatInverse, Diagonal) {
    CMatrix inv = mat_inverse(CMatrix::diagonal({2.0, -0.5}));
    EXPECT_TRUE(approx_eq(inv, CMatrix::diagonal({0.5, -2.0})).ok);
}

TEST(MatInverse, UnitDeterminantTwoByTwoIsAdjugate) {
    CMatrix m{{3.0, CScalar(1, 2)}, {CScalar(0.5, 0), (1.0 + 0.5 * CScalar(1, 2)) / 3.0}};
    const CScalar det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    ASSERT_NEAR(std::abs(det - 1.0), 0.0, 1e-15);
    CMatrix adj{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
    EXPECT_TRUE(approx_eq(mat_inverse(m), adj).ok);
}

TEST(MatInverse, RandomMatricesBothSides) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 15;
        CMatrix a = random_matrix(rng, n);
        CMatrix inv = mat_inverse(a, {1e-6, 1e-12});
        EXPECT_TRUE(approx_eq(a * inv, CMatrix::identity(n), {1e-9, 1e-9}).ok);
        EXPECT_TRUE(approx_eq(inv * a, CMatrix::identity(n), {1e-9, 1e-9}).ok);
    }
}

TEST(MatInverse, SingularThrowsWithConditionEstimate) {
    CMatrix s{{1.0, 2.0}, {2.0, 4.0}};
    EXPECT_THROW(mat_inverse(s), IllConditionedError);
    CMatrix near{{1.0, 0.0}, {0.0, 1e-11}};
    try {
        mat_inverse(near);
        FAIL() << "expected IllConditionedError";
    } catch (const IllConditionedError &e) {
        EXPECT_GT(e.condition, 1e9);
    }
}

TEST(MatInverse, NonSquareThrows) { EXPECT_THROW(mat_inverse(CMatrix(2, 3)), DimensionError); }

TEST(ApproxEq, SameMatrixHasZeroResidual) {
    CMatrix m{{1.0, 2.0}, {3.0, 4.0}};
    Comparison c = approx_eq(m, m);
    EXPECT_TRUE(c.ok);
    EXPECT_EQ(c.residual, 0.0);
}

TEST(ApproxEq, DetectsPerturbationAboveRelativeBound) {
    CMatrix i = CMatrix::identity(3);
    CMatrix j(3, 3, std::vector<CScalar>(9, 1.0));
    Comparison c = approx_eq(i, i + CScalar(1e-6) * j, {1e-9, 1e-12});
    EXPECT_FALSE(c.ok);
    EXPECT_NEAR(c.residual, 1e-6, 1e-15);
}

TEST(ApproxEq, ShapeMismatchThrows) {
    EXPECT_THROW(approx_eq(CMatrix(2, 2), CMatrix(2, 3)), DimensionError);
}

TEST(QPoch, EmptyProductIsOne) { EXPECT_EQ(qpoch({0.3, 0.2}, 0.7, 0), CScalar(1.0)); }

TEST(QPoch, LeadingFactorVanishes) {
    for (std::size_t n = 1; n < 5; ++n)
        EXPECT_EQ(qpoch(1.0, 0.4, n), CScalar(0.0));
}

TEST(QPoch, HalfHalfTwo) { EXPECT_NEAR(std::abs(qpoch(0.5, 0.5, 2) - 0.375), 0.0, 1e-16); }

TEST(QPoch, StepRecursion) {
    const CScalar a(0.3, -1.2), q(0.8, 0.1);
    for (std::size_t n = 0; n < 12; ++n) {
        const CScalar lhs = qpoch(a, q, n + 1);
        const CScalar rhs = qpoch(a, q, n) * (1.0 - a * std::pow(q, static_cast<double>(n)));
        EXPECT_TRUE(approx_eq(lhs, rhs, {1e-14, 1e-300}).ok) << n;
    }
}

TEST(CMatrixShape, EntryCountMustMatch) {
    EXPECT_THROW(CMatrix(2, 2, std::vector<CScalar>(3)), DimensionError);
}

TEST(CMatrixShape, BlockDiagonalPlacement) {
    CMatrix b = CMatrix::block_diagonal({CMatrix{{1.0}}, CMatrix{{2.0, 3.0}, {4.0, 5.0}}});
    ASSERT_EQ(b.rows(), 3u);
    EXPECT_EQ(b(0, 0), CScalar(1.0));
    EXPECT_EQ(b(1, 2), CScalar(3.0));
    EXPECT_EQ(b(2, 1), CScalar(4.0));
    EXPECT_EQ(b(0, 2), CScalar(0.0));
}

TEST(Numerics, ProductEqScalesWithTerms) {
    // [[a, b], [c, d]] times its adjugate: the diagonal cancels from |ad| ~ 1e8 down to 1.
    const double a = 1e4, b = 1e4, c = 1e4 - 1e-4;
    const double d = (1.0 + b * c) / a;
    const CMatrix t{{a, b}, {c, d}};
    const CMatrix adj{{d, -b}, {-c, a}};
    EXPECT_TRUE(product_eq(t, adj, CMatrix::identity(2)).ok);
    EXPECT_TRUE(product_eq(CMatrix::identity(2), t, t).ok);
    // A relative error of 1e-6 in one entry is far above the rounding level.
    const CMatrix off{{a * (1 + 1e-6), b}, {c, d}};
    EXPECT_FALSE(product_eq(off, adj, CMatrix::identity(2)).ok);
    EXPECT_THROW(product_eq(t, CMatrix::identity(3), t), DimensionError);
}
