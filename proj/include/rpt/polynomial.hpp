#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "rpt/numeric.hpp"

namespace rpt {

/// Dense univariate polynomial with integer coefficients; coefficient i
/// multiplies x^i. Trailing zero coefficients are never stored.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients);
    IntPolynomial(std::initializer_list<long> coefficients);

    static IntPolynomial monomial(unsigned degree, const Integer& coefficient = 1);

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Integer coefficient(unsigned i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
    const std::vector<Integer>& coefficients() const noexcept { return coeffs_; }

    Rational evaluate(const Rational& x) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const Integer& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const Integer& s) { return a *= s; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Highest degree first, e.g. "x^6+20x^4+10x^2+x".
    std::string to_string() const;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

}  // namespace rpt
