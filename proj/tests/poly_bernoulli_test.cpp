#include "rpt/poly_bernoulli.hpp"

#include <gtest/gtest.h>

#include "rpt/lonesum.hpp"
#include "test_family.hpp"

namespace rpt {
namespace {

Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

// b_0 = 1 and sum_{j <= m} C(m+1, j) b_j = 0, so b_1 = -1/2.
std::vector<Rational> bernoulli_numbers(unsigned max_n)
{
    std::vector<Rational> b(max_n + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= max_n; ++m) {
        Rational sum = 0;
        for (unsigned j = 0; j < m; ++j) {
            sum += Rational(binomial(m + 1, j)) * b[j];
        }
        b[m] = -sum / Rational(m + 1);
    }
    return b;
}

TEST(PolyBernoulli, KnownValues)
{
    const auto all = BlockSizeSet::all();
    EXPECT_EQ(poly_bernoulli(3, 2, all), q(-1, 24));
    EXPECT_EQ(poly_bernoulli(2, -2, all), 14);
    EXPECT_EQ(poly_bernoulli(1, 1, all), q(1, 2));
    EXPECT_EQ(poly_bernoulli(0, 3, BlockSizeSet::even()), 1);

    const Rational expected[] = {1, q(1, 4), q(-1, 36), q(-1, 24), q(7, 450)};
    const auto seq = pb_egf_sequence(2, all, 5);
    ASSERT_GE(seq.size(), 5u);
    for (unsigned n = 0; n < 5; ++n) {
        EXPECT_EQ(poly_bernoulli(n, 2, all), expected[n]);
        EXPECT_EQ(seq[n], expected[n]);
    }
}

TEST(PolyBernoulli, Polylog)
{
    EXPECT_EQ(polylog_series(2, 3), Series(3, {0, 1, q(1, 4), q(1, 9)}));
    EXPECT_EQ(polylog_series(-1, 3), Series(3, {0, 1, 2, 3}));
    EXPECT_EQ(polylog_series(0, 2), Series(2, {0, 1, 1}));
}

TEST(PolyBernoulli, RoutesAgree)
{
    for (const auto& s : testing::family()) {
        for (long k = -4; k <= 4; ++k) {
            const auto seq = pb_egf_sequence(k, s, 12 + s.min_element());
            for (unsigned n = 0; n <= 12; ++n) {
                const Rational direct = poly_bernoulli(n, k, s);
                EXPECT_EQ(direct, pb_egf(n, k, s)) << s.to_string() << " n=" << n << " k=" << k;
                EXPECT_EQ(direct, pb_egf(n, k, s, pb_egf_min_order(n, s) + 4));
                EXPECT_EQ(direct, seq.at(n));
                if (k >= 1) {
                    EXPECT_EQ(direct, pb_iterated_integral(n, k, s)) << s.to_string() << " n=" << n << " k=" << k;
                }
            }
        }
    }
}

TEST(PolyBernoulli, Guards)
{
    const auto all = BlockSizeSet::all();
    EXPECT_THROW(pb_egf(5, 2, all, 5), std::invalid_argument);
    EXPECT_THROW(pb_iterated_integral(3, 0, all), std::invalid_argument);
    EXPECT_THROW(pb_iterated_integral(3, 2, all, 4), std::invalid_argument);
}

TEST(PolyBernoulli, CountsLonesumMatrices)
{
    for (unsigned n = 0; n <= 7; ++n) {
        for (unsigned k = 0; k <= 7; ++k) {
            EXPECT_EQ(poly_bernoulli(n, -static_cast<long>(k), BlockSizeSet::all()), Rational(classical_lo(n, k)));
        }
    }
}

TEST(PolyBernoulli, IndexOneIsBernoulli)
{
    const auto b = bernoulli_numbers(16);
    for (unsigned n = 0; n <= 16; ++n) {
        const Rational sign = n % 2 == 0 ? 1 : -1;
        EXPECT_EQ(poly_bernoulli(n, 1, BlockSizeSet::all()), sign * b[n]) << n;
    }
}

}  // namespace
}  // namespace rpt
