#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"
#include "tpc/linalg.hpp"

namespace tpc {
namespace {

const Field gf2{2};

TEST(Rref, IdentityIsFixed)
{
    const auto r = rref(Matrix::identity(2, gf2));
    EXPECT_EQ(r.reduced, Matrix::identity(2, gf2));
    EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, ZeroHasRankZero)
{
    const auto r = rref(Matrix::zero(3, 3, gf2));
    EXPECT_TRUE(r.reduced.is_zero());
    EXPECT_EQ(r.rank, 0u);
    EXPECT_TRUE(r.pivots.empty());
}

TEST(Rref, RankOneOverGF2)
{
    const auto r = rref(Matrix::from_rows({{1, 1}, {1, 1}}, gf2));
    EXPECT_EQ(r.reduced, Matrix::from_rows({{1, 1}, {0, 0}}, gf2));
    EXPECT_EQ(r.rank, 1u);
    EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Rref, NormalizesPivotsOverGF5)
{
    const Field gf5(5);
    const auto r = rref(Matrix::from_rows({{2, 4}, {1, 3}}, gf5));
    EXPECT_EQ(r.reduced, Matrix::identity(2, gf5));
}

TEST(SolveLinear, IdentityReturnsRhs)
{
    const Field gf3(3);
    const Matrix b = Matrix::from_rows({{2}, {1}, {0}}, gf3);
    EXPECT_EQ(solve_linear(Matrix::identity(3, gf3), b), b);
}

TEST(SolveLinear, InconsistentZeroSystem)
{
    EXPECT_FALSE(solve_linear(Matrix::zero(2, 2, gf2), Matrix::from_rows({{1}, {0}}, gf2)).has_value());
}

TEST(SolveLinear, BackSubstitution)
{
    const auto x = solve_linear(Matrix::from_rows({{1, 1}, {0, 1}}, gf2), Matrix::from_rows({{0}, {1}}, gf2));
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(*x, Matrix::from_rows({{1}, {1}}, gf2));
}

TEST(SolveLinear, DimensionMismatchThrows)
{
    EXPECT_THROW(solve_linear(Matrix::identity(2, gf2), Matrix::zero(3, 1, gf2)), std::invalid_argument);
}

TEST(Nullspace, IdentityHasTrivialKernel) { EXPECT_TRUE(nullspace_basis(Matrix::identity(4, gf2)).empty()); }

TEST(Nullspace, ZeroGivesStandardBasis)
{
    const auto basis = nullspace_basis(Matrix::zero(3, 3, gf2));
    ASSERT_EQ(basis.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(basis[i], Matrix::unit_row(3, i, gf2).transpose());
}

TEST(Nullspace, KernelOfRankOneRow)
{
    const auto basis = nullspace_basis(Matrix::from_rows({{1, 1}}, gf2));
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], Matrix::from_rows({{1}, {1}}, gf2));
}

TEST(FieldTest, RejectsUnsupportedPrimes)
{
    EXPECT_THROW(Field(7), std::invalid_argument);
    EXPECT_THROW(Field(4), std::invalid_argument);
}

TEST(Inverse, RoundTrip)
{
    const Field gf3(3);
    const Matrix m = Matrix::from_rows({{1, 2}, {0, 1}}, gf3);
    const auto inv = inverse(m);
    ASSERT_TRUE(inv.has_value());
    EXPECT_TRUE((m * *inv).is_identity());
    EXPECT_FALSE(inverse(Matrix::from_rows({{1, 1}, {1, 1}}, gf2)).has_value());
}

// Randomized invariants over all three fields.
class LinalgProperties : public ::testing::TestWithParam<int> {};

TEST_P(LinalgProperties, RankNullityAndIdempotentRref)
{
    const Field f(GetParam());
    std::mt19937_64 rng(20240601 + static_cast<unsigned>(GetParam()));
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 7;
        const std::size_t cols = 1 + rng() % 7;
        const Matrix a = testing::random_matrix(rng, rows, cols, f);
        const auto red = rref(a);
        const auto kernel = nullspace_basis(a);
        EXPECT_EQ(red.rank + kernel.size(), cols);
        for (const Matrix& x : kernel) EXPECT_TRUE((a * x).is_zero());
        EXPECT_EQ(rref(red.reduced).reduced, red.reduced);
        EXPECT_EQ(red.rank, red.pivots.size());
    }
}

TEST_P(LinalgProperties, SolvableIffRanksAgree)
{
    const Field f(GetParam());
    std::mt19937_64 rng(777 + static_cast<unsigned>(GetParam()));
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + rng() % 6;
        const std::size_t cols = 1 + rng() % 6;
        const Matrix a = testing::random_matrix(rng, rows, cols, f);
        const Matrix b = testing::random_matrix(rng, rows, 1, f);
        const auto x = solve_linear(a, b);
        EXPECT_EQ(x.has_value(), rank(a) == rank(hstack(a, b)));
        if (x) EXPECT_EQ(a * *x, b);
    }
}

INSTANTIATE_TEST_SUITE_P(PrimeFields, LinalgProperties, ::testing::Values(2, 3, 5));

}  // namespace
}  // namespace tpc
