#include "rpt/poly_bernoulli.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rpt/stirling.hpp"

namespace rpt {

Rational poly_bernoulli(unsigned n, long k, const BlockSizeSet& set)
{
    const auto t = StirlingTriangle::by_recurrence(set, n);
    Rational total = 0;
    for (unsigned i = 0; i <= n; ++i) {
        if (t.at(n, i) == 0) {
            continue;
        }
        Rational term = Rational(t.at(n, i) * factorial(i)) * rpow_signed(Rational(i + 1), -k);
        total += ((n - i) % 2 == 0) ? term : Rational(-term);
    }
    return total;
}

Series polylog_series(long k, unsigned order)
{
    Series li(order);
    for (unsigned m = 1; m <= order; ++m) {
        li += Series::monomial(order, m, rpow_signed(Rational(m), -k));
    }
    return li;
}

namespace {

// u(t) = -E_S(-t)
Series negated_reflection(const BlockSizeSet& set, unsigned order)
{
    return -reflect(set.egf(order));
}

void require_order(unsigned order, unsigned needed, const char* what)
{
    if (order < needed) {
        throw std::invalid_argument(std::string(what) + ": truncation order " + std::to_string(order) +
                                    " below the required " + std::to_string(needed));
    }
}

}  // namespace

unsigned pb_egf_min_order(unsigned n, const BlockSizeSet& set)
{
    return n + set.min_element();
}

std::vector<Rational> pb_egf_sequence(long k, const BlockSizeSet& set, unsigned order)
{
    require_order(order, set.min_element(), "pb_egf");
    const Series u = negated_reflection(set, order);
    const Series quotient = div_exact(compose(polylog_series(k, order), u), u);
    std::vector<Rational> out(quotient.order() + 1);
    for (unsigned n = 0; n <= quotient.order(); ++n) {
        out[n] = egf_coeff(quotient, n);
    }
    return out;
}

Rational pb_egf(unsigned n, long k, const BlockSizeSet& set, unsigned order)
{
    require_order(order, pb_egf_min_order(n, set), "pb_egf");
    return pb_egf_sequence(k, set, order).at(n);
}

unsigned pb_integral_min_order(unsigned n, long k, const BlockSizeSet& set)
{
    if (k < 1) {
        throw std::invalid_argument("iterated-integral form needs k >= 1");
    }
    return n + static_cast<unsigned>(k) * set.min_element();
}

Rational pb_iterated_integral(unsigned n, long k, const BlockSizeSet& set, unsigned order)
{
    require_order(order, pb_integral_min_order(n, k, set), "pb_iterated_integral");
    const Series u = negated_reflection(set, order);
    const Series du = derivative(u);

    Series layer = -log1p(-u);  // Li_1(u)
    for (long j = 2; j <= k; ++j) {
        // u has positive valuation, so layer / u is an honest power series
        const Series ratio = div_exact(layer, u.truncated(layer.order()));
        const unsigned m = std::min(ratio.order(), du.order());
        layer = integrate(du.truncated(m) * ratio.truncated(m));
    }
    const Series result = div_exact(layer, u.truncated(layer.order()));
    return egf_coeff(result, n);
}

}  // namespace rpt
