#include <random>

#include <gtest/gtest.h>

#include <semiform/linalg.hpp>

#include "oracles.hpp"

using namespace semiform;

namespace
{

using Dense = std::vector<std::vector<Rational>>;

// Plain dense Gaussian elimination over Q; returns the rank and leaves a in
// reduced row echelon form.
std::size_t dense_rref(Dense &a, std::size_t cols)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) {
            ++p;
        }
        if (p == a.size()) {
            continue;
        }
        std::swap(a[r], a[p]);
        const Rational lead = a[r][c];
        for (auto &x : a[r]) {
            x /= lead;
        }
        for (std::size_t q = 0; q < a.size(); ++q) {
            if (q != r && a[q][c] != 0) {
                const Rational f = a[q][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    a[q][j] -= f * a[r][j];
                }
            }
        }
        ++r;
    }
    return r;
}

SparseMatrix to_sparse(const Dense &a, std::size_t cols)
{
    SparseMatrix m{a.size(), cols, std::vector<RationalColumn>(cols)};
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (a[i][j] != 0) {
                m.columns[j].emplace_back(i, a[i][j]);
            }
        }
    }
    return m;
}

Dense random_dense(std::mt19937_64 &rng, std::size_t rows, std::size_t cols)
{
    Dense a(rows, std::vector<Rational>(cols));
    for (auto &row : a) {
        for (auto &x : row) {
            if (rng() % 2 == 0) {
                x = oracle::frac(static_cast<long>(rng() % 13) - 6, 1 + static_cast<long>(rng() % 4));
            }
        }
    }
    // Make some rows dependent.
    if (rows >= 3 && rng() % 2 == 0) {
        for (std::size_t j = 0; j < cols; ++j) {
            a[rows - 1][j] = a[0][j] * 2 - a[1][j] / 3;
        }
    }
    return a;
}

} // namespace

TEST(Linalg, SmallExample)
{
    // [2 2] has rank 1 and kernel spanned by (1, -1).
    const SparseMatrix a{1, 2, {{{0, Rational(2)}}, {{0, Rational(2)}}}};
    EXPECT_EQ(rank(a), 1u);
    const auto ker = kernel_basis(a);
    ASSERT_EQ(ker.size(), 1u);
    EXPECT_EQ(ker[0], (IntegerRow{{0, Integer(1)}, {1, Integer(-1)}}));
}

TEST(Linalg, EmptyShapes)
{
    EXPECT_EQ(rank(SparseMatrix{0, 3, std::vector<RationalColumn>(3)}), 0u);
    EXPECT_EQ(kernel_basis(SparseMatrix{0, 3, std::vector<RationalColumn>(3)}).size(), 3u);
    EXPECT_TRUE(kernel_basis(SparseMatrix{4, 0, {}}).empty());
}

TEST(Linalg, EchelonRowsArePrimitiveWithPositiveLead)
{
    const auto form = echelon({{{0, Integer(4)}, {2, Integer(-6)}}, {{0, Integer(-2)}, {1, Integer(5)}}}, true);
    ASSERT_EQ(form.pivots, (std::vector<std::size_t>{0, 1}));
    EXPECT_EQ(form.rows[0], (IntegerRow{{0, Integer(2)}, {2, Integer(-3)}}));
    EXPECT_EQ(form.rows[1], (IntegerRow{{1, Integer(5)}, {2, Integer(-3)}}));
}

TEST(Linalg, ClearDenominators)
{
    const RationalColumn v{{1, oracle::frac(1, 2)}, {4, oracle::frac(-2, 3)}};
    EXPECT_EQ(clear_denominators(v), (IntegerRow{{1, Integer(3)}, {4, Integer(-4)}}));
    EXPECT_EQ(row_entry(clear_denominators(v), 4), -4);
    EXPECT_EQ(row_entry(clear_denominators(v), 2), 0);
}

TEST(Linalg, AgreesWithDenseOracle)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = rng() % 7, cols = rng() % 7;
        const auto a = random_dense(rng, rows, cols);
        const auto sparse = to_sparse(a, cols);

        auto reduced = a;
        const std::size_t expected_rank = dense_rref(reduced, cols);
        EXPECT_EQ(rank(sparse), expected_rank);

        const auto ker = kernel_basis(sparse);
        EXPECT_EQ(ker.size() + expected_rank, cols);
        for (const auto &v : ker) {
            ASSERT_FALSE(v.empty());
            EXPECT_GT(v.front().second, 0);
            for (std::size_t i = 0; i < rows; ++i) {
                Rational dot = 0;
                for (const auto &[j, x] : v) {
                    dot += a[i][j] * Rational(x);
                }
                EXPECT_EQ(dot, 0);
            }
        }
        // The kernel vectors are independent.
        Dense kd(ker.size(), std::vector<Rational>(cols));
        for (std::size_t r = 0; r < ker.size(); ++r) {
            for (const auto &[j, x] : ker[r]) {
                kd[r][j] = Rational(x);
            }
        }
        EXPECT_EQ(dense_rref(kd, cols), ker.size());
    }
}

TEST(Linalg, KernelIsIndependentOfRowOrder)
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 6;
        auto a = random_dense(rng, rows, cols);
        const auto first = kernel_basis(to_sparse(a, cols));
        std::reverse(a.begin(), a.end());
        EXPECT_EQ(kernel_basis(to_sparse(a, cols)), first);
    }
}
