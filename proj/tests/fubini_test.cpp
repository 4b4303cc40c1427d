#include "rpt/fubini.hpp"

#include <gtest/gtest.h>

#include "rpt/oracle.hpp"
#include "test_family.hpp"

namespace rpt {
namespace {

TEST(Fubini, KnownValues)
{
    EXPECT_EQ(fubini(0, BlockSizeSet::odd()), 1);
    EXPECT_EQ(fubini(3, BlockSizeSet::all()), 13);
    EXPECT_EQ(fubini(4, BlockSizeSet::all()), 75);
    EXPECT_EQ(fubini(3, BlockSizeSet::odd()), 7);
    EXPECT_EQ(fubini(4, BlockSizeSet::even()), 7);
    EXPECT_EQ(fubini(5, BlockSizeSet::even()), 0);
}

TEST(Fubini, RoutesAndOracleAgree)
{
    for (const auto& s : testing::family()) {
        const auto direct = fubini_sequence(s, 14);
        EXPECT_EQ(direct, fubini_egf_sequence(s, 14)) << s.to_string();
        for (unsigned n = 0; n <= 14; ++n) {
            EXPECT_EQ(direct[n], fubini(n, s));
            EXPECT_EQ(direct[n], fubini_egf(n, s));
            EXPECT_EQ(direct[n], fubini_egf(n, s, n + 3));
        }
        for (unsigned n = 0; n <= oracle::max_ordered_partition_n; ++n) {
            EXPECT_EQ(direct[n], oracle::count_ordered_partitions(n, s)) << s.to_string() << " " << n;
        }
    }
}

TEST(Fubini, DobinskiBrackets)
{
    const Rational tol(1, 100000000);
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 6; ++n) {
            const auto r = fubini_dobinski(n, s, tol);
            EXPECT_LT(r.tail_bound, tol);
            EXPECT_TRUE(r.brackets(fubini(n, s))) << s.to_string() << " " << n;
            EXPECT_FALSE(r.brackets(fubini(n, s) + 1));
        }
    }
    EXPECT_THROW(fubini_dobinski(2, BlockSizeSet::all(), Rational(0)), std::invalid_argument);
}

TEST(Fubini, PoonenIdentity)
{
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned q = 1; q <= 6; ++q) {
                const auto check = poonen_check(n, q, s);
                EXPECT_TRUE(check.holds) << s.to_string() << " n=" << n << " q=" << q;
                EXPECT_EQ(check.lhs, check.rhs);
            }
        }
    }
    EXPECT_THROW(poonen_check(3, 0, BlockSizeSet::all()), std::invalid_argument);
}

TEST(Fubini, Congruence)
{
    for (const auto& s : testing::family()) {
        for (unsigned n = 0; n <= 8; ++n) {
            for (unsigned q = 1; q <= 6; ++q) {
                const auto check = congruence_check(n, q, s);
                EXPECT_TRUE(check.holds) << s.to_string() << " n=" << n << " q=" << q;
                EXPECT_GE(check.lhs, 0);
                EXPECT_LT(check.lhs, q);
            }
        }
    }
}

}  // namespace
}  // namespace rpt
