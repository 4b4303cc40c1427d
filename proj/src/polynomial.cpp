#include "rpt/polynomial.hpp"

#include <algorithm>

namespace rpt {

IntPolynomial::IntPolynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coefficients)
{
    for (long c : coefficients) {
        coeffs_.emplace_back(c);
    }
    trim();
}

IntPolynomial IntPolynomial::monomial(unsigned degree, const Integer& coefficient)
{
    std::vector<Integer> c(degree + 1);
    c[degree] = coefficient;
    return IntPolynomial(std::move(c));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

Rational IntPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
    coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] += other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
    coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
        coeffs_[i] -= other.coeffs_[i];
    }
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& scalar)
{
    for (auto& c : coeffs_) {
        c *= scalar;
    }
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.coeffs_.empty() || b.coeffs_.empty()) {
        return {};
    }
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Integer& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        const Integer magnitude = abs(c);
        if (c < 0) {
            out += '-';
        } else if (!out.empty()) {
            out += '+';
        }
        if (magnitude != 1 || i == 0) {
            out += magnitude.get_str();
        }
        if (i >= 1) {
            out += 'x';
        }
        if (i >= 2) {
            out += '^' + std::to_string(i);
        }
    }
    return out;
}

}  // namespace rpt
