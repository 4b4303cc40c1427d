#include "rpt/fubini.hpp"

#include <stdexcept>

#include "rpt/series.hpp"
#include "rpt/stirling.hpp"

namespace rpt {

std::vector<Integer> fubini_sequence(const BlockSizeSet& set, unsigned max_n)
{
    const auto t = StirlingTriangle::by_recurrence(set, max_n);
    std::vector<Integer> out(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        Integer total = 0;
        Integer kf = 1;
        for (unsigned k = 0; k <= n; ++k) {
            if (k > 0) {
                kf *= k;
            }
            total += kf * t.at(n, k);
        }
        out[n] = total;
    }
    return out;
}

Integer fubini(unsigned n, const BlockSizeSet& set)
{
    return fubini_sequence(set, n).back();
}

std::vector<Integer> fubini_egf_sequence(const BlockSizeSet& set, unsigned order)
{
    const Series gf = quasi_inverse(set.egf(order));
    std::vector<Integer> out(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        out[n] = egf_coeff(gf, n).get_num();
    }
    return out;
}

Integer fubini_egf(unsigned n, const BlockSizeSet& set, unsigned order)
{
    if (order < n) {
        throw std::invalid_argument("fubini_egf: truncation order below n");
    }
    return egf_coeff(quasi_inverse(set.egf(order)), n).get_num();
}

bool FubiniDobinski::brackets(const Integer& value) const
{
    const Rational v(value);
    return partial_sum <= v && v <= partial_sum + tail_bound;
}

namespace {

// P_t(n) = sum_i {n brace i}_S (t)_i for one fixed Stirling row.
Integer potential_from_row(const std::vector<Integer>& row, unsigned t)
{
    Integer total = 0;
    for (unsigned i = 0; i < row.size() && i <= t; ++i) {
        total += row[i] * falling_factorial(Integer(t), i);
    }
    return total;
}

}  // namespace

// The k-th term is 2^{-k-1} P_k(n) <= k^n / 2^{k+1} = u_k, because P_k(n)
// counts a subset of the maps [n] -> [k]. For k >= K+1 the ratio
// u_{k+1}/u_k = (1 + 1/k)^n / 2 is at most rho = (1 + 1/(K+1))^n / 2, so the
// tail past K is at most u_{K+1} / (1 - rho) <= 4 u_{K+1} once rho <= 3/4.
FubiniDobinski fubini_dobinski(unsigned n, const BlockSizeSet& set, const Rational& tol)
{
    if (tol <= 0) {
        throw std::invalid_argument("fubini_dobinski: tolerance must be positive");
    }
    const auto row = StirlingTriangle::by_recurrence(set, n).row(n);
    const Rational three_quarters(3, 4);
    Rational weight(1, 2);  // 2^{-k-1}
    Rational partial = weight * Rational(potential_from_row(row, 0));
    for (unsigned last = 0;; ++last) {
        const unsigned next = last + 1;
        weight /= 2;
        const Rational first_tail_bound = Rational(ipow(Integer(next), n)) * weight;
        const Rational rho = rpow(Rational(next + 1, next), n) / 2;
        if (rho <= three_quarters && 4 * first_tail_bound < tol) {
            return {partial, 4 * first_tail_bound, last};
        }
        partial += weight * Rational(potential_from_row(row, next));
    }
}

namespace {

struct PoonenParts {
    Integer lhs;             // 2^q F_n
    Integer convolution;     // sum_l C(n,l) F_l P_q(n-l)
    Integer geometric;       // sum_{l=0}^{q-1} 2^{q-l-1} P_l(n)
    Integer fubini_n;
};

PoonenParts poonen_parts(unsigned n, unsigned q, const BlockSizeSet& set)
{
    if (q < 1) {
        throw std::invalid_argument("Poonen identity needs q >= 1");
    }
    const auto t = StirlingTriangle::by_recurrence(set, n);
    const auto f = fubini_sequence(set, n);
    PoonenParts parts;
    parts.fubini_n = f[n];
    parts.lhs = ipow(Integer(2), q) * f[n];
    for (unsigned l = 0; l <= n; ++l) {
        parts.convolution += binomial(n, l) * f[l] * potential_from_row(t.row(n - l), q);
    }
    for (unsigned l = 0; l < q; ++l) {
        parts.geometric += ipow(Integer(2), q - l - 1) * potential_from_row(t.row(n), l);
    }
    return parts;
}

Integer residue(const Integer& value, unsigned modulus)
{
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), modulus);
    return r;
}

}  // namespace

IdentityCheck poonen_check(unsigned n, unsigned q, const BlockSizeSet& set)
{
    const auto parts = poonen_parts(n, q, set);
    const Integer rhs = parts.convolution + parts.geometric;
    return {parts.lhs, rhs, parts.lhs == rhs};
}

IdentityCheck congruence_check(unsigned n, unsigned q, const BlockSizeSet& set)
{
    const auto parts = poonen_parts(n, q, set);
    const Integer lhs = residue((ipow(Integer(2), q) - 1) * parts.fubini_n, q);
    const Integer rhs = residue(parts.geometric, q);
    return {lhs, rhs, lhs == rhs};
}

}  // namespace rpt
