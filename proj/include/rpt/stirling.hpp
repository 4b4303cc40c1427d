#pragma once

#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/numeric.hpp"
#include "rpt/polynomial.hpp"

namespace rpt {

/// Lower-triangular table of S-restricted Stirling numbers of the second
/// kind {n brace k}_S for 0 <= k <= n <= max_n. Immutable once built.
class StirlingTriangle {
public:
    /// Distinguished-element recurrence (the primary route).
    static StirlingTriangle by_recurrence(const BlockSizeSet& set, unsigned max_n);
    /// Column k read off (E_S)^k / k!.
    static StirlingTriangle by_egf(const BlockSizeSet& set, unsigned max_n);
    /// Multinomial sum over block-size multiplicity vectors.
    static StirlingTriangle by_multinomial(const BlockSizeSet& set, unsigned max_n);

    const BlockSizeSet& set() const noexcept { return set_; }
    unsigned max_n() const noexcept { return max_n_; }

    /// {n brace k}_S; zero for k > n.
    const Integer& at(unsigned n, unsigned k) const;
    const std::vector<Integer>& row(unsigned n) const { return rows_.at(n); }

    friend bool operator==(const StirlingTriangle& a, const StirlingTriangle& b) { return a.rows_ == b.rows_; }

private:
    StirlingTriangle(BlockSizeSet set, unsigned max_n);

    BlockSizeSet set_;
    unsigned max_n_;
    std::vector<std::vector<Integer>> rows_;  // rows_[n] has n+1 entries
};

Integer stirling_direct(unsigned n, unsigned k, const BlockSizeSet& set);

/// n! [x^n] (E_S(x))^k / k!, with E_S truncated after degree `order` (>= n).
Integer stirling_egf(unsigned n, unsigned k, const BlockSizeSet& set, unsigned order);
inline Integer stirling_egf(unsigned n, unsigned k, const BlockSizeSet& set)
{
    return stirling_egf(n, k, set, n);
}

Integer stirling_rec(unsigned n, unsigned k, const BlockSizeSet& set);

Integer bell_number(unsigned n, const BlockSizeSet& set);

/// B_{n,S}(x) = sum_k {n brace k}_S x^k.
IntPolynomial bell_polynomial(unsigned n, const BlockSizeSet& set);

/// n-th derivative at 0 of (1 + E_S(x))^t, i.e. sum_k {n brace k}_S (t)_k.
/// Counts maps [n] -> [t] whose nonempty fibres all have size in S.
Integer potential_value(unsigned n, unsigned t, const BlockSizeSet& set);

struct DobinskiResult {
    Rational partial_sum;  // sum_{l <= last_index} f_{S,l}^{(n)}(0) x^l / l!
    Rational tail_bound;   // rigorous bound on the omitted tail
    unsigned last_index;
};

/// Truncated Dobinski-type series for e^x B_{n,S}(x). Requires x > 0 and
/// tol > 0; the returned tail bound is below tol.
DobinskiResult dobinski(unsigned n, const BlockSizeSet& set, const Rational& x, const Rational& tol);

/// Rational enclosure lo <= e^x <= hi, for x >= 0, using Taylor terms
/// through degree `terms`.
struct ExpEnclosure {
    Rational lo;
    Rational hi;
};
ExpEnclosure exp_enclosure(const Rational& x, unsigned terms);

/// Exact check that partial_sum <= e^x B_{n,S}(x) <= partial_sum + tail_bound,
/// refining the enclosure of e^x until it decides. Returns false only if the
/// bracket is wrong.
bool dobinski_brackets(const DobinskiResult& result, unsigned n, const BlockSizeSet& set, const Rational& x);

}  // namespace rpt
