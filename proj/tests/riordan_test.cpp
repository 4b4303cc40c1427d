#include "rpt/riordan.hpp"

#include <random>

#include <gtest/gtest.h>

#include "rpt/stirling.hpp"
#include "test_family.hpp"

namespace rpt {
namespace {

const BlockSizeSet s136 = BlockSizeSet::finite({1, 3, 6});

Matrix from_rows(const std::vector<std::vector<long>>& rows)
{
    Matrix m(static_cast<unsigned>(rows.size()));
    for (unsigned r = 0; r < rows.size(); ++r) {
        for (unsigned c = 0; c < rows[r].size(); ++c) {
            m.at(r, c) = rows[r][c];
        }
    }
    return m;
}

const std::vector<std::vector<long>> printed_m136 = {
    {1},
    {0, 1},
    {0, 0, 1},
    {0, 1, 0, 1},
    {0, 0, 4, 0, 1},
    {0, 0, 0, 10, 0, 1},
    {0, 1, 10, 0, 20, 0, 1},
    {0, 0, 7, 70, 0, 35, 0, 1},
    {0, 0, 0, 28, 280, 0, 56, 0, 1},
};

const std::vector<std::vector<long>> printed_t136 = {
    {1},
    {0, 1},
    {0, 0, 1},
    {0, -1, 0, 1},
    {0, 0, -4, 0, 1},
    {0, 10, 0, -10, 0, 1},
    {0, -1, 70, 0, -20, 0, 1},
    {0, -280, -7, 280, 0, -35, 0, 1},
    {0, 84, -2800, -28, 840, 0, -56, 0, 1},
};

Series random_series(std::mt19937& rng, unsigned order, long constant, long linear)
{
    std::uniform_int_distribution<long> num(-4, 4);
    std::vector<Rational> c(order + 1);
    c[0] = constant;
    c[1] = linear;
    for (unsigned i = 2; i <= order; ++i) {
        c[i] = Rational(num(rng), static_cast<long>(i));
        c[i].canonicalize();
    }
    return Series(order, std::move(c));
}

Rational cofactor_det(const std::vector<std::vector<Rational>>& m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return 1;
    }
    Rational total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) {
            continue;
        }
        std::vector<std::vector<Rational>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Rational> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != c) {
                    row.push_back(m[r][j]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Rational term = m[0][c] * cofactor_det(minor);
        total += (c % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

// Expands the determinant along its polynomial first row 1, x, ..., x^n;
// row r >= 1 holds T[c][r-1] in column c.
IntPolynomial determinant_bell(unsigned n, const Matrix& t)
{
    IntPolynomial result;
    for (unsigned c = 0; c <= n; ++c) {
        std::vector<std::vector<Rational>> minor;
        for (unsigned r = 1; r <= n; ++r) {
            std::vector<Rational> row;
            for (unsigned j = 0; j <= n; ++j) {
                if (j != c) {
                    row.push_back(t.at(j, r - 1));
                }
            }
            minor.push_back(std::move(row));
        }
        Rational value = cofactor_det(minor);
        if ((c + n) % 2 == 1) {
            value = -value;
        }
        EXPECT_EQ(value.get_den(), 1);
        result = result + IntPolynomial::monomial(c, value.get_num());
    }
    return result;
}

TEST(Riordan, PrintedStirlingMatrixAndInverse)
{
    const auto m = stirling_matrix(s136, 9);
    EXPECT_EQ(m.matrix(), from_rows(printed_m136));
    EXPECT_EQ(inverse(m), from_rows(printed_t136));
}

TEST(Riordan, EntriesAreRestrictedStirlingNumbers)
{
    for (const auto& s : testing::family()) {
        if (!s.contains(1)) {
            EXPECT_THROW(stirling_matrix(s, 5), std::domain_error);
            continue;
        }
        const auto m = stirling_matrix(s, 10);
        EXPECT_TRUE(m.matrix().is_lower_triangular());
        for (unsigned n = 0; n < 10; ++n) {
            for (unsigned k = 0; k < 10; ++k) {
                EXPECT_EQ(m.at(n, k), Rational(stirling_rec(n, k, s)));
            }
        }
    }
}

TEST(Riordan, BuildValidatesSeries)
{
    const Series x = Series::monomial(4, 1);
    const Series one = Series::constant(4, 1);
    EXPECT_THROW(RiordanArray::build(Series(4), x, 4), std::domain_error);
    EXPECT_THROW(RiordanArray::build(one, x + one, 4), std::domain_error);
    EXPECT_THROW(RiordanArray::build(one, Series::monomial(4, 2), 4), std::domain_error);
    EXPECT_THROW(RiordanArray::build(one, x, 7), std::invalid_argument);
    EXPECT_EQ(RiordanArray::build(one, x, 5).matrix(), Matrix::identity(5));
}

TEST(Riordan, GroupProductIsMatrixProduct)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const unsigned size = 7;
        const auto a = RiordanArray::build(random_series(rng, 8, 1, 2), random_series(rng, 8, 0, 1), size);
        const auto b = RiordanArray::build(random_series(rng, 8, -3, 0) + Series::constant(8, 1),
                                           random_series(rng, 8, 0, -1), size);
        EXPECT_EQ(multiply(a, b).matrix(), a.matrix() * b.matrix());
    }
}

TEST(Riordan, Orthogonality)
{
    for (const auto& s : testing::family()) {
        if (!s.contains(1)) {
            continue;
        }
        const auto m = stirling_matrix(s, 10);
        EXPECT_EQ(m.matrix() * inverse(m), Matrix::identity(10)) << s.to_string();
        EXPECT_EQ(inverse(m) * m.matrix(), Matrix::identity(10)) << s.to_string();
    }
}

TEST(Riordan, FactorizationRemultiplies)
{
    std::mt19937 rng(5);
    for (unsigned size : {1u, 2u, 6u}) {
        const auto a = RiordanArray::build(random_series(rng, 7, 2, 1), random_series(rng, 7, 0, 3), size);
        const auto fac = factorize(a);
        EXPECT_EQ(fac.scaling.matrix() * fac.shifted, a.matrix()) << size;
        EXPECT_EQ(fac.shifted.size(), size);
    }
    const auto m = stirling_matrix(BlockSizeSet::odd(), 9);
    const auto fac = factorize(m);
    EXPECT_EQ(fac.scaling.matrix(), Matrix::identity(9));
    EXPECT_EQ(fac.shifted, m.matrix());
}

TEST(Riordan, OddProductPrefix)
{
    for (unsigned size = 1; size <= 9; ++size) {
        EXPECT_EQ(odd_product_prefix(size), stirling_matrix(BlockSizeSet::odd(), size).matrix()) << size;
    }
}

TEST(Riordan, LowerTriangularInverse)
{
    Matrix expected(2);
    expected.at(0, 0) = Rational(1, 2);
    expected.at(1, 0) = Rational(-1, 2);
    expected.at(1, 1) = 1;
    EXPECT_EQ(lower_triangular_inverse(from_rows({{2}, {1, 1}})), expected);
    EXPECT_THROW(lower_triangular_inverse(from_rows({{1}, {1, 0}})), std::domain_error);
    EXPECT_THROW(lower_triangular_inverse(from_rows({{1, 1}, {0, 1}})), std::invalid_argument);
}

TEST(BellDet, MatchesPolynomialsAndCofactorExpansion)
{
    EXPECT_EQ(bell_det(6, s136).to_string(), "x^6+20x^4+10x^2+x");
    for (const auto& s : testing::family()) {
        if (!s.contains(1)) {
            EXPECT_THROW(bell_det(3, s), std::domain_error);
            continue;
        }
        const Matrix t = inverse(stirling_matrix(s, 9));
        for (unsigned n = 0; n <= 8; ++n) {
            EXPECT_EQ(bell_det(n, s), bell_polynomial(n, s)) << s.to_string() << " " << n;
            EXPECT_EQ(determinant_bell(n, t), bell_polynomial(n, s)) << s.to_string() << " " << n;
        }
    }
}

}  // namespace
}  // namespace rpt
