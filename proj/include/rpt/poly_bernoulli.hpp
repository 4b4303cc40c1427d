#pragma once

#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/numeric.hpp"
#include "rpt/series.hpp"

namespace rpt {

/// B_{n,S}^{(k)} = sum_i {n brace i}_S (-1)^{n-i} i! / (i+1)^k, any integer k.
Rational poly_bernoulli(unsigned n, long k, const BlockSizeSet& set);

/// Li_k(t) = sum_{m>=1} t^m / m^k truncated after degree `order`.
Series polylog_series(long k, unsigned order);

/// Smallest truncation order pb_egf accepts for index n: n + min(S).
unsigned pb_egf_min_order(unsigned n, const BlockSizeSet& set);

/// n! [t^n] Li_k(u) / u with u = -E_S(-t), the division done by div_exact.
/// `order` must be at least pb_egf_min_order(n, set).
Rational pb_egf(unsigned n, long k, const BlockSizeSet& set, unsigned order);
inline Rational pb_egf(unsigned n, long k, const BlockSizeSet& set)
{
    return pb_egf(n, k, set, pb_egf_min_order(n, set));
}

/// Values for n = 0 .. order - min(S) from one series evaluation.
std::vector<Rational> pb_egf_sequence(long k, const BlockSizeSet& set, unsigned order);

/// Smallest truncation order pb_iterated_integral accepts: n + k min(S).
unsigned pb_integral_min_order(unsigned n, long k, const BlockSizeSet& set);

/// Same numbers through nested integrals: L_1 = -log(1 - u) and
/// L_j = integral of u' (L_{j-1} / u), finishing with L_k / u. Each division
/// costs min(S) orders, hence the larger truncation. Requires k >= 1.
Rational pb_iterated_integral(unsigned n, long k, const BlockSizeSet& set, unsigned order);
inline Rational pb_iterated_integral(unsigned n, long k, const BlockSizeSet& set)
{
    return pb_iterated_integral(n, k, set, pb_integral_min_order(n, k, set));
}

}  // namespace rpt
