#include "rpt/series.hpp"

#include <random>

#include <gtest/gtest.h>

namespace rpt {
namespace {

Series poly(unsigned order, std::vector<Rational> c)
{
    return Series(order, std::move(c));
}

Rational q(long p, long d = 1)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

Series random_series(std::mt19937& rng, unsigned order, bool zero_constant)
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> c(order + 1);
    for (unsigned i = zero_constant ? 1 : 0; i <= order; ++i) {
        c[i] = q(num(rng), den(rng));
    }
    return Series(order, std::move(c));
}

TEST(Series, RingOperations)
{
    const Series x = Series::monomial(3, 1);
    EXPECT_EQ(x + x, Series::monomial(3, 1, 2));

    const Series em1 = Series::exponential(4) - Series::constant(4, 1);
    EXPECT_EQ(em1 * em1, poly(4, {0, 0, 1, 1, q(7, 12)}));

    const Series zero(4);
    EXPECT_EQ(em1 * zero, zero);
}

TEST(Series, OrderMismatchIsAnError)
{
    EXPECT_THROW(Series(3) + Series(4), std::invalid_argument);
    EXPECT_THROW(Series(3) * Series(4), std::invalid_argument);
}

TEST(Series, IntegerPowers)
{
    const Series a = poly(6, {0, 1, 0, q(1, 6), 0, q(1, 120)});  // sinh
    EXPECT_EQ(pow(a, 0), Series::constant(6, 1));
    EXPECT_EQ(pow(a, 2), poly(6, {0, 0, 1, 0, q(1, 3), 0, q(2, 45)}));
    EXPECT_EQ(pow(Series::monomial(5, 1), 3), Series::monomial(5, 3));
}

TEST(Series, ExpAndLog1p)
{
    EXPECT_EQ(exp(Series(5)), Series::constant(5, 1));

    const Series em1 = Series::exponential(4) - Series::constant(4, 1);
    const Series bell = exp(em1);
    const long expected[] = {1, 1, 2, 5, 15};
    for (unsigned n = 0; n <= 4; ++n) {
        EXPECT_EQ(egf_coeff(bell, n), expected[n]) << n;
    }
    EXPECT_EQ(log1p(em1), Series::monomial(4, 1));

    EXPECT_THROW(exp(Series::constant(3, 1)), std::domain_error);
    EXPECT_THROW(log1p(Series::constant(3, 2)), std::domain_error);
}

TEST(Series, Compose)
{
    const Series f = poly(4, {1, 2, 3, 4, 5});
    EXPECT_EQ(compose(f, Series::monomial(4, 1)), f);

    Series geometric(4);
    for (unsigned i = 0; i <= 4; ++i) {
        geometric += Series::monomial(4, i);
    }
    const Series fub = compose(geometric, Series::exponential(4) - Series::constant(4, 1));
    const long expected[] = {1, 1, 3, 13, 75};
    for (unsigned n = 0; n <= 4; ++n) {
        EXPECT_EQ(egf_coeff(fub, n), expected[n]) << n;
    }

    EXPECT_EQ(compose(Series::monomial(4, 2), poly(4, {0, 1, 1})), poly(4, {0, 0, 1, 2, 1}));
    EXPECT_THROW(compose(f, Series::constant(4, 1)), std::domain_error);
}

TEST(Series, QuasiInverse)
{
    EXPECT_EQ(quasi_inverse(Series(3)), Series::constant(3, 1));
    EXPECT_EQ(quasi_inverse(Series::monomial(3, 1)), poly(3, {1, 1, 1, 1}));
    EXPECT_THROW(quasi_inverse(Series::constant(3, 1)), std::domain_error);

    const Series2 xy = Series2::monomial(2, 2, 1, 1);
    const Series2 expected =
        Series2::constant(2, 2, 1) + Series2::monomial(2, 2, 1, 1) + Series2::monomial(2, 2, 2, 2);
    EXPECT_EQ(quasi_inverse(xy), expected);
}

TEST(Series, Integrate)
{
    EXPECT_EQ(integrate(Series::constant(3, 1)), Series::monomial(3, 1));
    EXPECT_EQ(integrate(Series::monomial(3, 2)), Series::monomial(3, 3, q(1, 3)));
    // the x^4/24 term falls off the end
    EXPECT_EQ(integrate(Series::exponential(3)), poly(3, {0, 1, q(1, 2), q(1, 6)}));
}

TEST(Series, DivExact)
{
    EXPECT_EQ(div_exact(Series::monomial(3, 2), Series::monomial(3, 1)), Series::monomial(2, 1));
    const Series num = poly(4, {0, 0, q(1, 2), 0, q(-1, 24)});
    const Series den = poly(4, {0, 0, q(1, 2)});
    EXPECT_EQ(div_exact(num, den), poly(2, {1, 0, q(-1, 12)}));
    EXPECT_THROW(div_exact(Series::monomial(3, 1), Series::monomial(3, 2)), std::domain_error);
    EXPECT_THROW(div_exact(Series::monomial(3, 1), Series(3)), std::domain_error);
}

TEST(Series, EgfCoefficients)
{
    EXPECT_EQ(egf_coeff(Series::exponential(5), 4), 1);
    EXPECT_THROW(egf_coeff(Series::exponential(5), 6), std::out_of_range);

    // 1 / (1 - (e^x - 1)(e^y - 1)) at x^2 y^2
    const Series em1 = Series::exponential(2) - Series::constant(2, 1);
    const Series2 w = Series2::in_x(em1, 2) * Series2::in_y(2, em1);
    EXPECT_EQ(egf_coeff2(quasi_inverse(w), 2, 2), 5);
    EXPECT_THROW(egf_coeff2(w, 3, 0), std::out_of_range);
}

TEST(SeriesProperties, ExpLogAreInverse)
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 7, true);
        EXPECT_EQ(log1p(exp(a) - Series::constant(7, 1)), a);
        EXPECT_EQ(exp(log1p(a)) - Series::constant(7, 1), a);
    }
}

TEST(SeriesProperties, QuasiInverseTimesOneMinus)
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Series w = random_series(rng, 8, true);
        EXPECT_EQ(quasi_inverse(w) * (Series::constant(8, 1) - w), Series::constant(8, 1));
    }
}

TEST(SeriesProperties, RingLaws)
{
    std::mt19937 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 6, false);
        const Series b = random_series(rng, 6, false);
        const Series c = random_series(rng, 6, false);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
    }
}

TEST(SeriesProperties, DerivativeUndoesIntegral)
{
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Series a = random_series(rng, 6, false);
        // only degrees below the order survive integrate
        EXPECT_EQ(derivative(integrate(a)), a.truncated(5));
    }
}

TEST(SeriesProperties, DivExactInvertsMultiplication)
{
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        Series den = random_series(rng, 8, true);
        if (den[1] == 0) {
            continue;
        }
        const Series b = random_series(rng, 8, false);
        EXPECT_EQ(div_exact(den * b, den), b.truncated(7));
    }
}

TEST(Series2Test, ExpMatchesPowerSum)
{
    const Series2 w = Series2::monomial(3, 3, 1, 0) + Series2::monomial(3, 3, 0, 1, 2);
    Series2 expected = Series2::constant(3, 3, 1);
    Series2 term = expected;
    for (unsigned j = 1; j <= 6; ++j) {
        term = term * w / Rational(j);
        expected += term;
    }
    EXPECT_EQ(exp(w), expected);
    EXPECT_THROW(exp(Series2::constant(2, 2, 1)), std::domain_error);
}

}  // namespace
}  // namespace rpt
