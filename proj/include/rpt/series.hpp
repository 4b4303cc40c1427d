#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rpt/numeric.hpp"

namespace rpt {

/// Univariate power series over the rationals, truncated after degree
/// `order()`. Coefficients are stored densely in ordinary form, so the
/// exponential-generating-function value at n is n! * (*this)[n].
///
/// Every binary operation requires both operands to carry the same order;
/// nothing is ever silently extended or truncated.
class Series {
public:
    explicit Series(unsigned order);
    Series(unsigned order, std::vector<Rational> coefficients);

    static Series constant(unsigned order, const Rational& value);
    static Series monomial(unsigned order, unsigned degree, const Rational& coefficient = 1);
    /// Builds sum_n values[n] x^n / n! (missing values are zero).
    static Series from_egf(unsigned order, std::span<const Rational> values);
    static Series exponential(unsigned order);  // e^x

    unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
    const Rational& operator[](unsigned degree) const { return coeffs_.at(degree); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    /// Lowest degree with a nonzero coefficient; order() + 1 for the zero series.
    unsigned valuation() const noexcept;
    bool is_zero() const noexcept { return valuation() > order(); }

    /// Drops every coefficient above `order`; `order` may not exceed order().
    Series truncated(unsigned order) const;

    Series operator-() const;
    Series& operator+=(const Series& other);
    Series& operator-=(const Series& other);
    Series& operator*=(const Series& other);
    Series& operator*=(const Rational& scalar);
    Series& operator/=(const Rational& scalar);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& s) { return a *= s; }
    friend Series operator*(const Rational& s, Series a) { return a *= s; }
    friend Series operator/(Series a, const Rational& s) { return a /= s; }

    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Rational> coeffs_;
};

Series pow(const Series& base, unsigned exponent);

/// exp(a); requires a(0) = 0.
Series exp(const Series& a);

/// log(1 + a); requires a(0) = 0.
Series log1p(const Series& a);

/// outer(inner(x)); requires inner(0) = 0 and equal orders.
Series compose(const Series& outer, const Series& inner);

/// 1 / a for a unit constant term.
Series reciprocal(const Series& a);

/// sum_{j>=0} w^j = 1 / (1 - w); requires w(0) = 0.
Series quasi_inverse(const Series& w);

/// Integral from 0. Keeps the input order; the coefficient that would land
/// at degree order()+1 is dropped.
Series integrate(const Series& a);

/// d/dx. The result has order max(order()-1, 0).
Series derivative(const Series& a);

/// a(-x).
Series reflect(const Series& a);

/// num / den where valuation(num) >= valuation(den). The quotient is exact
/// through degree order() - valuation(den), which becomes its order.
Series div_exact(const Series& num, const Series& den);

/// n! [x^n] a.
Rational egf_coeff(const Series& a, unsigned n);

/// Bivariate power series truncated at x-degree nx and y-degree ny
/// independently. Storage is the dense (nx+1) x (ny+1) grid.
class Series2 {
public:
    Series2(unsigned nx, unsigned ny);
    /// Row-major grid: grid[i * (ny + 1) + j] is [x^i y^j].
    Series2(unsigned nx, unsigned ny, std::vector<Rational> grid);

    static Series2 constant(unsigned nx, unsigned ny, const Rational& value);
    static Series2 monomial(unsigned nx, unsigned ny, unsigned i, unsigned j, const Rational& coefficient = 1);
    /// Lifts f(x) into the bivariate ring; requires f.order() == nx.
    static Series2 in_x(const Series& f, unsigned ny);
    /// Lifts g(y); requires g.order() == ny.
    static Series2 in_y(unsigned nx, const Series& g);

    unsigned order_x() const noexcept { return nx_; }
    unsigned order_y() const noexcept { return ny_; }
    const Rational& at(unsigned i, unsigned j) const;
    bool is_zero() const noexcept;

    Series2& operator+=(const Series2& other);
    Series2& operator-=(const Series2& other);
    Series2& operator*=(const Rational& scalar);
    Series2& operator/=(const Rational& scalar);

    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator-(Series2 a, const Series2& b) { return a -= b; }
    friend Series2 operator*(const Series2& a, const Series2& b);
    friend Series2 operator*(Series2 a, const Rational& s) { return a *= s; }
    friend Series2 operator/(Series2 a, const Rational& s) { return a /= s; }

    friend bool operator==(const Series2& a, const Series2& b) = default;

private:
    Rational& cell(unsigned i, unsigned j) { return coeffs_[i * (ny_ + 1) + j]; }

    unsigned nx_;
    unsigned ny_;
    std::vector<Rational> coeffs_;
};

Series2 pow(const Series2& base, unsigned exponent);

/// sum_{j>=0} w^j; requires w(0,0) = 0.
Series2 quasi_inverse(const Series2& w);

/// exp(w); requires w(0,0) = 0.
Series2 exp(const Series2& w);

/// n! k! [x^n y^k] a.
Rational egf_coeff2(const Series2& a, unsigned n, unsigned k);

}  // namespace rpt
