#include "rpt/series.hpp"

#include <stdexcept>
#include <string>

namespace rpt {

namespace {

void require_same_order(unsigned a, unsigned b)
{
    if (a != b) {
        throw std::invalid_argument("series order mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

void require_zero_constant(const Rational& c, const char* what)
{
    if (c != 0) {
        throw std::domain_error(std::string(what) + ": argument has a nonzero constant term");
    }
}

}  // namespace

Series::Series(unsigned order) : coeffs_(static_cast<std::size_t>(order) + 1) {}

Series::Series(unsigned order, std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.size() > static_cast<std::size_t>(order) + 1) {
        throw std::invalid_argument("more coefficients than the truncation order allows");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

Series Series::constant(unsigned order, const Rational& value)
{
    Series s(order);
    s.coeffs_[0] = value;
    return s;
}

Series Series::monomial(unsigned order, unsigned degree, const Rational& coefficient)
{
    Series s(order);
    if (degree <= order) {
        s.coeffs_[degree] = coefficient;
    }
    return s;
}

Series Series::from_egf(unsigned order, std::span<const Rational> values)
{
    Series s(order);
    for (unsigned n = 0; n <= order && n < values.size(); ++n) {
        s.coeffs_[n] = values[n] / Rational(factorial(n));
    }
    return s;
}

Series Series::exponential(unsigned order)
{
    Series s(order);
    for (unsigned n = 0; n <= order; ++n) {
        s.coeffs_[n] = Rational(1, factorial(n));
    }
    return s;
}

unsigned Series::valuation() const noexcept
{
    unsigned v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) {
        ++v;
    }
    return v;
}

Series Series::truncated(unsigned order) const
{
    if (order > this->order()) {
        throw std::invalid_argument("cannot truncate a series to a higher order");
    }
    return Series(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

Series Series::operator-() const
{
    Series r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Series& Series::operator+=(const Series& other)
{
    require_same_order(order(), other.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Series& Series::operator-=(const Series& other)
{
    require_same_order(order(), other.order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Series& Series::operator*=(const Series& other)
{
    *this = *this * other;
    return *this;
}

Series& Series::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Series& Series::operator/=(const Rational& scalar)
{
    if (scalar == 0) {
        throw std::domain_error("series divided by zero");
    }
    for (auto& c : coeffs_) {
        c /= scalar;
    }
    return *this;
}

Series operator*(const Series& a, const Series& b)
{
    require_same_order(a.order(), b.order());
    const unsigned n = a.order();
    Series r(n);
    for (unsigned i = 0; i <= n; ++i) {
        if (a.coeffs_[i] == 0) {
            continue;
        }
        for (unsigned j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] != 0) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

Series pow(const Series& base, unsigned exponent)
{
    Series result = Series::constant(base.order(), 1);
    Series square = base;
    while (exponent > 0) {
        if (exponent & 1u) {
            result *= square;
        }
        exponent >>= 1;
        if (exponent > 0) {
            square *= square;
        }
    }
    return result;
}

Series exp(const Series& a)
{
    require_zero_constant(a[0], "exp");
    const unsigned order = a.order();
    std::vector<Rational> b(order + 1);
    b[0] = 1;
    // n b_n = sum_{k=1}^{n} k a_k b_{n-k}
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (unsigned k = 1; k <= n; ++k) {
            if (a[k] != 0) {
                acc += k * a[k] * b[n - k];
            }
        }
        b[n] = acc / n;
    }
    return Series(order, std::move(b));
}

Series log1p(const Series& a)
{
    require_zero_constant(a[0], "log1p");
    const unsigned order = a.order();
    std::vector<Rational> b(order + 1);
    // (1 + a) b' = a'  =>  n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = n * a[n];
        for (unsigned k = 1; k < n; ++k) {
            if (a[n - k] != 0) {
                acc -= k * b[k] * a[n - k];
            }
        }
        b[n] = acc / n;
    }
    return Series(order, std::move(b));
}

Series compose(const Series& outer, const Series& inner)
{
    require_same_order(outer.order(), inner.order());
    require_zero_constant(inner[0], "compose");
    const unsigned order = outer.order();
    Series result = Series::constant(order, outer[order]);
    for (unsigned j = order; j-- > 0;) {
        result = result * inner;
        result += Series::constant(order, outer[j]);
    }
    return result;
}

Series reciprocal(const Series& a)
{
    if (a[0] == 0) {
        throw std::domain_error("reciprocal: constant term is zero");
    }
    const unsigned order = a.order();
    std::vector<Rational> b(order + 1);
    const Rational inv = 1 / a[0];
    b[0] = inv;
    for (unsigned n = 1; n <= order; ++n) {
        Rational acc = 0;
        for (unsigned k = 1; k <= n; ++k) {
            if (a[k] != 0) {
                acc += a[k] * b[n - k];
            }
        }
        b[n] = -acc * inv;
    }
    return Series(order, std::move(b));
}

Series quasi_inverse(const Series& w)
{
    require_zero_constant(w[0], "quasi_inverse");
    return reciprocal(Series::constant(w.order(), 1) - w);
}

Series integrate(const Series& a)
{
    const unsigned order = a.order();
    std::vector<Rational> r(order + 1);
    for (unsigned n = 0; n < order; ++n) {
        r[n + 1] = a[n] / (n + 1);
    }
    return Series(order, std::move(r));
}

Series derivative(const Series& a)
{
    const unsigned order = a.order() == 0 ? 0 : a.order() - 1;
    std::vector<Rational> r(order + 1);
    for (unsigned n = 0; n + 1 <= a.order(); ++n) {
        r[n] = (n + 1) * a[n + 1];
    }
    return Series(order, std::move(r));
}

Series reflect(const Series& a)
{
    std::vector<Rational> r(a.coefficients().begin(), a.coefficients().end());
    for (std::size_t n = 1; n < r.size(); n += 2) {
        r[n] = -r[n];
    }
    return Series(a.order(), std::move(r));
}

Series div_exact(const Series& num, const Series& den)
{
    require_same_order(num.order(), den.order());
    if (den.is_zero()) {
        throw std::domain_error("div_exact: zero denominator");
    }
    const unsigned v = den.valuation();
    if (num.valuation() < v) {
        throw std::domain_error("div_exact: numerator valuation " + std::to_string(num.valuation()) +
                                " is below denominator valuation " + std::to_string(v));
    }
    const unsigned order = num.order() - v;
    const auto shifted = [&](const Series& s) {
        auto c = s.coefficients();
        return Series(order, std::vector<Rational>(c.begin() + v, c.end()));
    };
    return shifted(num) * reciprocal(shifted(den));
}

Rational egf_coeff(const Series& a, unsigned n)
{
    if (n > a.order()) {
        throw std::out_of_range("egf_coeff: degree " + std::to_string(n) + " beyond order " +
                                std::to_string(a.order()));
    }
    return a[n] * Rational(factorial(n));
}

// ---------------------------------------------------------------------------

Series2::Series2(unsigned nx, unsigned ny)
    : nx_(nx), ny_(ny), coeffs_((static_cast<std::size_t>(nx) + 1) * (static_cast<std::size_t>(ny) + 1))
{
}

Series2::Series2(unsigned nx, unsigned ny, std::vector<Rational> grid) : nx_(nx), ny_(ny), coeffs_(std::move(grid))
{
    if (coeffs_.size() != (static_cast<std::size_t>(nx) + 1) * (static_cast<std::size_t>(ny) + 1)) {
        throw std::invalid_argument("bivariate coefficient grid has the wrong size");
    }
}

Series2 Series2::constant(unsigned nx, unsigned ny, const Rational& value)
{
    Series2 s(nx, ny);
    s.cell(0, 0) = value;
    return s;
}

Series2 Series2::monomial(unsigned nx, unsigned ny, unsigned i, unsigned j, const Rational& coefficient)
{
    Series2 s(nx, ny);
    if (i <= nx && j <= ny) {
        s.cell(i, j) = coefficient;
    }
    return s;
}

Series2 Series2::in_x(const Series& f, unsigned ny)
{
    Series2 s(f.order(), ny);
    for (unsigned i = 0; i <= f.order(); ++i) {
        s.cell(i, 0) = f[i];
    }
    return s;
}

Series2 Series2::in_y(unsigned nx, const Series& g)
{
    Series2 s(nx, g.order());
    for (unsigned j = 0; j <= g.order(); ++j) {
        s.cell(0, j) = g[j];
    }
    return s;
}

const Rational& Series2::at(unsigned i, unsigned j) const
{
    if (i > nx_ || j > ny_) {
        throw std::out_of_range("bivariate coefficient index out of range");
    }
    return coeffs_[i * (ny_ + 1) + j];
}

bool Series2::is_zero() const noexcept
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

namespace {

void require_same_orders(const Series2& a, const Series2& b)
{
    if (a.order_x() != b.order_x() || a.order_y() != b.order_y()) {
        throw std::invalid_argument("bivariate series order mismatch");
    }
}

}  // namespace

Series2& Series2::operator+=(const Series2& other)
{
    require_same_orders(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Series2& Series2::operator-=(const Series2& other)
{
    require_same_orders(*this, other);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Series2& Series2::operator*=(const Rational& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    return *this;
}

Series2& Series2::operator/=(const Rational& scalar)
{
    if (scalar == 0) {
        throw std::domain_error("series divided by zero");
    }
    for (auto& c : coeffs_) {
        c /= scalar;
    }
    return *this;
}

Series2 operator*(const Series2& a, const Series2& b)
{
    require_same_orders(a, b);
    Series2 r(a.nx_, a.ny_);
    for (unsigned i1 = 0; i1 <= a.nx_; ++i1) {
        for (unsigned j1 = 0; j1 <= a.ny_; ++j1) {
            const Rational& lhs = a.at(i1, j1);
            if (lhs == 0) {
                continue;
            }
            for (unsigned i2 = 0; i1 + i2 <= a.nx_; ++i2) {
                for (unsigned j2 = 0; j1 + j2 <= a.ny_; ++j2) {
                    const Rational& rhs = b.at(i2, j2);
                    if (rhs != 0) {
                        r.cell(i1 + i2, j1 + j2) += lhs * rhs;
                    }
                }
            }
        }
    }
    return r;
}

Series2 pow(const Series2& base, unsigned exponent)
{
    Series2 result = Series2::constant(base.order_x(), base.order_y(), 1);
    for (unsigned e = 0; e < exponent; ++e) {
        result = result * base;
    }
    return result;
}

Series2 quasi_inverse(const Series2& w)
{
    if (w.at(0, 0) != 0) {
        throw std::domain_error("quasi_inverse: argument has a nonzero constant term");
    }
    const unsigned nx = w.order_x();
    const unsigned ny = w.order_y();
    // q = 1 + w q, solved coefficientwise in increasing (i, j).
    std::vector<Rational> q((nx + 1) * (ny + 1));
    const auto idx = [ny](unsigned i, unsigned j) { return i * (ny + 1) + j; };
    for (unsigned i = 0; i <= nx; ++i) {
        for (unsigned j = 0; j <= ny; ++j) {
            Rational acc = (i == 0 && j == 0) ? 1 : 0;
            for (unsigned a = 0; a <= i; ++a) {
                for (unsigned b = 0; b <= j; ++b) {
                    if ((a == 0 && b == 0) || w.at(a, b) == 0) {
                        continue;
                    }
                    acc += w.at(a, b) * q[idx(i - a, j - b)];
                }
            }
            q[idx(i, j)] = acc;
        }
    }
    return Series2(nx, ny, std::move(q));
}

Series2 exp(const Series2& w)
{
    if (w.at(0, 0) != 0) {
        throw std::domain_error("exp: argument has a nonzero constant term");
    }
    // w^j vanishes once j exceeds nx + ny.
    Series2 result = Series2::constant(w.order_x(), w.order_y(), 1);
    Series2 term = result;
    for (unsigned j = 1; j <= w.order_x() + w.order_y(); ++j) {
        term = term * w / Rational(j);
        if (term.is_zero()) {
            break;
        }
        result += term;
    }
    return result;
}

Rational egf_coeff2(const Series2& a, unsigned n, unsigned k)
{
    if (n > a.order_x() || k > a.order_y()) {
        throw std::out_of_range("egf_coeff2: index beyond truncation order");
    }
    return a.at(n, k) * Rational(factorial(n) * factorial(k));
}

}  // namespace rpt
