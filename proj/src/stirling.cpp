#include "rpt/stirling.hpp"

#include <stdexcept>
#include <string>

namespace rpt {

StirlingTriangle::StirlingTriangle(BlockSizeSet set, unsigned max_n) : set_(std::move(set)), max_n_(max_n)
{
    rows_.resize(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        rows_[n].assign(n + 1, Integer(0));
    }
}

const Integer& StirlingTriangle::at(unsigned n, unsigned k) const
{
    static const Integer zero = 0;
    if (n > max_n_) {
        throw std::out_of_range("Stirling triangle row " + std::to_string(n) + " beyond max_n " +
                                std::to_string(max_n_));
    }
    return k <= n ? rows_[n][k] : zero;
}

StirlingTriangle StirlingTriangle::by_recurrence(const BlockSizeSet& set, unsigned max_n)
{
    StirlingTriangle t(set, max_n);
    t.rows_[0][0] = 1;
    const auto sizes = set.enumerate(max_n);
    // {m+1 brace k} = sum_{s in S} C(m, s-1) {m-s+1 brace k-1}: the block
    // holding element m+1 has size s.
    for (unsigned m = 0; m + 1 <= max_n; ++m) {
        auto& row = t.rows_[m + 1];
        for (unsigned s : sizes) {
            if (s > m + 1) {
                break;
            }
            const Integer ways = binomial(m, s - 1);
            const auto& prev = t.rows_[m + 1 - s];
            for (unsigned k = 1; k <= m + 1 && k - 1 < prev.size(); ++k) {
                if (prev[k - 1] != 0) {
                    row[k] += ways * prev[k - 1];
                }
            }
        }
    }
    return t;
}

StirlingTriangle StirlingTriangle::by_egf(const BlockSizeSet& set, unsigned max_n)
{
    StirlingTriangle t(set, max_n);
    const Series e = set.egf(max_n);
    Series column = Series::constant(max_n, 1);  // E^k / k!
    for (unsigned k = 0; k <= max_n; ++k) {
        if (k > 0) {
            column = column * e / Rational(k);
        }
        for (unsigned n = k; n <= max_n; ++n) {
            const Rational v = egf_coeff(column, n);
            t.rows_[n][k] = v.get_num();
        }
    }
    return t;
}

StirlingTriangle StirlingTriangle::by_multinomial(const BlockSizeSet& set, unsigned max_n)
{
    StirlingTriangle t(set, max_n);
    for (unsigned n = 0; n <= max_n; ++n) {
        for (unsigned k = 0; k <= n; ++k) {
            t.rows_[n][k] = stirling_direct(n, k, set);
        }
    }
    return t;
}

namespace {

// Depth-first over multiplicities c_i of the allowed sizes s_i, accumulating
// n! / prod(c_i! (s_i!)^{c_i}) for every vector with sum c_i s_i = n and
// sum c_i = k.
void multinomial_dfs(const std::vector<unsigned>& sizes, std::size_t index, unsigned remaining_sum,
                     unsigned remaining_parts, const Integer& denominator, const Integer& n_factorial,
                     Integer& total)
{
    if (remaining_sum == 0 && remaining_parts == 0) {
        total += n_factorial / denominator;
        return;
    }
    if (index == sizes.size() || remaining_parts == 0 || remaining_sum == 0) {
        return;
    }
    const unsigned s = sizes[index];
    // sizes are ascending: every remaining part is at least s and at most sizes.back()
    if (static_cast<unsigned long>(remaining_parts) * s > remaining_sum ||
        static_cast<unsigned long>(remaining_parts) * sizes.back() < remaining_sum) {
        return;
    }
    const Integer s_factorial = factorial(s);
    Integer denom = denominator;
    for (unsigned c = 0; c <= remaining_parts && c * s <= remaining_sum; ++c) {
        if (c > 0) {
            denom *= s_factorial * c;
        }
        multinomial_dfs(sizes, index + 1, remaining_sum - c * s, remaining_parts - c, denom, n_factorial, total);
    }
}

}  // namespace

Integer stirling_direct(unsigned n, unsigned k, const BlockSizeSet& set)
{
    if (k > n) {
        return 0;
    }
    if (n == 0) {
        return 1;
    }
    const auto sizes = set.enumerate(n);
    if (sizes.empty()) {
        return 0;
    }
    Integer total = 0;
    multinomial_dfs(sizes, 0, n, k, Integer(1), factorial(n), total);
    return total;
}

Integer stirling_egf(unsigned n, unsigned k, const BlockSizeSet& set, unsigned order)
{
    if (order < n) {
        throw std::invalid_argument("stirling_egf: truncation order below n");
    }
    if (k > n) {
        return 0;
    }
    const Series column = pow(set.egf(order), k) / Rational(factorial(k));
    return egf_coeff(column, n).get_num();
}

Integer stirling_rec(unsigned n, unsigned k, const BlockSizeSet& set)
{
    return StirlingTriangle::by_recurrence(set, n).at(n, k);
}

Integer bell_number(unsigned n, const BlockSizeSet& set)
{
    const auto t = StirlingTriangle::by_recurrence(set, n);
    Integer total = 0;
    for (const auto& v : t.row(n)) {
        total += v;
    }
    return total;
}

IntPolynomial bell_polynomial(unsigned n, const BlockSizeSet& set)
{
    return IntPolynomial(StirlingTriangle::by_recurrence(set, n).row(n));
}

namespace {

Integer potential_from_row(const std::vector<Integer>& row, unsigned t)
{
    Integer total = 0;
    Integer falling = 1;  // (t)_k
    for (unsigned k = 0; k < row.size(); ++k) {
        if (k > 0) {
            falling *= static_cast<long>(t) - static_cast<long>(k) + 1;
        }
        if (falling == 0) {
            break;
        }
        total += row[k] * falling;
    }
    return total;
}

}  // namespace

Integer potential_value(unsigned n, unsigned t, const BlockSizeSet& set)
{
    return potential_from_row(StirlingTriangle::by_recurrence(set, n).row(n), t);
}

// Tail bound. Each coefficient f_{S,l}^{(n)}(0) counts a subset of the l^n
// maps [n] -> [l], so the l-th term is at most u_l = l^n x^l / l!. For
// l >= L+1,
//     u_{l+1} / u_l = (1 + 1/l)^n x / (l + 1) <= (1 + 1/(L+1))^n x / (L+2) = rho,
// since both factors decrease in l. Hence the tail beyond L is at most
// u_{L+1} / (1 - rho) <= 2 u_{L+1} once rho <= 1/2. L is increased until
// that ratio condition holds and 2 u_{L+1} < tol.
DobinskiResult dobinski(unsigned n, const BlockSizeSet& set, const Rational& x, const Rational& tol)
{
    if (tol <= 0) {
        throw std::invalid_argument("dobinski: tolerance must be positive");
    }
    if (x <= 0) {
        throw std::invalid_argument("dobinski: x must be positive");
    }
    const auto row = StirlingTriangle::by_recurrence(set, n).row(n);
    const Rational half(1, 2);

    Rational partial = Rational(potential_from_row(row, 0));  // l = 0 term
    Rational power_over_factorial = 1;                          // x^l / l!
    for (unsigned last = 0;; ++last) {
        const unsigned next = last + 1;
        const Rational next_weight = power_over_factorial * x / next;
        const Rational first_tail_bound = Rational(ipow(Integer(next), n)) * next_weight;
        const Rational rho = rpow(Rational(next + 1, next), n) * x / (next + 1);
        if (rho <= half && 2 * first_tail_bound < tol) {
            return {partial, 2 * first_tail_bound, last};
        }
        power_over_factorial = next_weight;
        partial += Rational(potential_from_row(row, next)) * power_over_factorial;
    }
}

ExpEnclosure exp_enclosure(const Rational& x, unsigned terms)
{
    if (x < 0) {
        throw std::invalid_argument("exp_enclosure: x must be nonnegative");
    }
    Rational sum = 1;
    Rational term = 1;
    for (unsigned j = 1; j <= terms; ++j) {
        term = term * x / j;
        sum += term;
    }
    // Remainder sum_{j > J} x^j / j! <= x^{J+1}/(J+1)! * 1/(1 - x/(J+2)) when x < J+2.
    const Rational next = term * x / (terms + 1);
    const Rational ratio = x / (terms + 2);
    if (ratio >= 1) {
        throw std::invalid_argument("exp_enclosure: too few terms for this x");
    }
    return {sum, sum + next / (1 - ratio)};
}

bool dobinski_brackets(const DobinskiResult& result, unsigned n, const BlockSizeSet& set, const Rational& x)
{
    const Rational bell_at_x = bell_polynomial(n, set).evaluate(x);
    const Rational lower = result.partial_sum;
    const Rational upper = result.partial_sum + result.tail_bound;
    unsigned terms = 8;
    while (Rational(terms + 2) <= x) {
        terms *= 2;
    }
    for (; terms <= 4096; terms *= 2) {
        const auto e = exp_enclosure(x, terms);
        const Rational target_lo = e.lo * bell_at_x;
        const Rational target_hi = e.hi * bell_at_x;
        if (target_hi < lower || target_lo > upper) {
            return false;  // target provably outside
        }
        if (target_lo >= lower && target_hi <= upper) {
            return true;
        }
    }
    return false;
}

}  // namespace rpt
