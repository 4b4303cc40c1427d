#include "rpt/stirling.hpp"

#include <gtest/gtest.h>

#include "rpt/oracle.hpp"
#include "test_family.hpp"

namespace rpt {
namespace {

const BlockSizeSet s136 = BlockSizeSet::finite({1, 3, 6});

TEST(Stirling, KnownValues)
{
    EXPECT_EQ(stirling_direct(3, 2, BlockSizeSet::all()), 3);
    EXPECT_EQ(stirling_direct(6, 4, s136), 20);
    EXPECT_EQ(stirling_direct(6, 3, s136), 0);
    EXPECT_EQ(stirling_direct(7, 2, s136), 7);
    EXPECT_EQ(stirling_egf(6, 2, BlockSizeSet::odd()), 16);
    EXPECT_EQ(stirling_egf(6, 4, BlockSizeSet::odd()), 20);
    EXPECT_EQ(stirling_rec(6, 6, BlockSizeSet::odd()), 1);
    EXPECT_EQ(stirling_rec(0, 0, BlockSizeSet::even()), 1);
    EXPECT_EQ(stirling_rec(5, 0, BlockSizeSet::even()), 0);
    EXPECT_EQ(stirling_direct(2, 5, BlockSizeSet::all()), 0);

    const auto t = StirlingTriangle::by_recurrence(BlockSizeSet::all(), 4);
    const std::vector<Integer> row4 = {0, 1, 7, 6, 1};
    EXPECT_EQ(t.row(4), row4);
}

TEST(Stirling, TrianglesAgree)
{
    for (const auto& s : testing::family()) {
        const auto rec = StirlingTriangle::by_recurrence(s, 12);
        EXPECT_EQ(rec, StirlingTriangle::by_egf(s, 12)) << s.to_string();
        EXPECT_EQ(rec, StirlingTriangle::by_multinomial(s, 12)) << s.to_string();
        for (unsigned n = 0; n <= 9; ++n) {
            const auto counts = oracle::count_partitions_by_blocks(n, s);
            for (unsigned k = 0; k <= n; ++k) {
                EXPECT_EQ(rec.at(n, k), counts.at(k)) << s.to_string() << " " << n << "," << k;
            }
        }
    }
}

TEST(Stirling, PointwiseRoutesAgree)
{
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 10; ++n) {
            for (unsigned k = 0; k <= n; ++k) {
                const Integer d = stirling_direct(n, k, s);
                EXPECT_EQ(d, stirling_egf(n, k, s));
                EXPECT_EQ(d, stirling_egf(n, k, s, n + 4));
                EXPECT_EQ(d, stirling_rec(n, k, s));
            }
        }
    }
}

TEST(Bell, Polynomials)
{
    const char* expected[] = {"1", "x", "x^2", "x^3+x", "x^4+4x^2", "x^5+10x^3", "x^6+20x^4+10x^2+x",
                              "x^7+35x^5+70x^3+7x^2"};
    for (unsigned n = 0; n < 8; ++n) {
        EXPECT_EQ(bell_polynomial(n, s136).to_string(), expected[n]);
    }
    EXPECT_EQ(bell_number(0, BlockSizeSet::all()), 1);
    EXPECT_EQ(bell_number(5, BlockSizeSet::all()), 52);
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 9; ++n) {
            EXPECT_EQ(bell_number(n, s), oracle::count_partitions(n, s));
            EXPECT_EQ(Rational(bell_number(n, s)), bell_polynomial(n, s).evaluate(1));
        }
    }
}

TEST(Potential, MatchesFunctionCount)
{
    EXPECT_EQ(potential_value(3, 2, s136), 2);
    EXPECT_EQ(potential_value(2, 3, BlockSizeSet::all()), 9);
    EXPECT_EQ(potential_value(0, 5, BlockSizeSet::even()), 1);
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 6; ++n) {
            for (unsigned t = 0; t <= 4; ++t) {
                EXPECT_EQ(potential_value(n, t, s), oracle::count_functions(n, t, s))
                    << s.to_string() << " " << n << " " << t;
            }
        }
    }
}

TEST(Dobinski, BracketsTheExactValue)
{
    const Rational tol(1, 100000000);
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 6; ++n) {
            for (const Rational x : {Rational(1), Rational(1, 3), Rational(5, 2)}) {
                const auto r = dobinski(n, s, x, tol);
                EXPECT_GE(r.tail_bound, 0);
                EXPECT_LT(r.tail_bound, tol);
                EXPECT_TRUE(dobinski_brackets(r, n, s, x)) << s.to_string() << " " << n;
            }
        }
    }
}

TEST(Dobinski, RejectsBadArguments)
{
    EXPECT_THROW(dobinski(2, s136, Rational(0), Rational(1)), std::invalid_argument);
    EXPECT_THROW(dobinski(2, s136, Rational(1), Rational(0)), std::invalid_argument);
}

TEST(Dobinski, ExpEnclosure)
{
    const auto e = exp_enclosure(Rational(1), 20);
    EXPECT_LT(e.lo, e.hi);
    EXPECT_LT(e.lo, Rational(27183, 10000));
    EXPECT_GT(e.hi, Rational(27182, 10000));
    EXPECT_LT(e.hi - e.lo, Rational(1, 1000000000));
}

}  // namespace
}  // namespace rpt
