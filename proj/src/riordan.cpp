#include "rpt/riordan.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rpt {

Matrix::Matrix(unsigned size) : size_(size), cells_(static_cast<std::size_t>(size) * size) {}

Matrix Matrix::identity(unsigned size)
{
    Matrix m(size);
    for (unsigned i = 0; i < size; ++i) {
        m.at(i, i) = 1;
    }
    return m;
}

Matrix Matrix::leading(unsigned size) const
{
    if (size > size_) {
        throw std::invalid_argument("leading block larger than matrix");
    }
    Matrix m(size);
    for (unsigned i = 0; i < size; ++i) {
        for (unsigned j = 0; j < size; ++j) {
            m.at(i, j) = at(i, j);
        }
    }
    return m;
}

bool Matrix::is_lower_triangular() const
{
    for (unsigned i = 0; i < size_; ++i) {
        for (unsigned j = i + 1; j < size_; ++j) {
            if (at(i, j) != 0) {
                return false;
            }
        }
    }
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.size_ != b.size_) {
        throw std::invalid_argument("matrix size mismatch");
    }
    Matrix c(a.size_);
    for (unsigned i = 0; i < a.size_; ++i) {
        for (unsigned l = 0; l < a.size_; ++l) {
            const Rational& x = a.at(i, l);
            if (x == 0) {
                continue;
            }
            for (unsigned j = 0; j < a.size_; ++j) {
                if (b.at(l, j) != 0) {
                    c.at(i, j) += x * b.at(l, j);
                }
            }
        }
    }
    return c;
}

Matrix direct_sum(const Matrix& a, const Matrix& b)
{
    Matrix m(a.size() + b.size());
    for (unsigned i = 0; i < a.size(); ++i) {
        for (unsigned j = 0; j < a.size(); ++j) {
            m.at(i, j) = a.at(i, j);
        }
    }
    for (unsigned i = 0; i < b.size(); ++i) {
        for (unsigned j = 0; j < b.size(); ++j) {
            m.at(a.size() + i, a.size() + j) = b.at(i, j);
        }
    }
    return m;
}

Matrix lower_triangular_inverse(const Matrix& m)
{
    if (!m.is_lower_triangular()) {
        throw std::invalid_argument("matrix is not lower triangular");
    }
    const unsigned size = m.size();
    Matrix inv(size);
    // Column j of the inverse solves m x = e_j.
    for (unsigned j = 0; j < size; ++j) {
        for (unsigned i = j; i < size; ++i) {
            if (m.at(i, i) == 0) {
                throw std::domain_error("singular diagonal at index " + std::to_string(i));
            }
            Rational acc = (i == j) ? 1 : 0;
            for (unsigned l = j; l < i; ++l) {
                if (m.at(i, l) != 0) {
                    acc -= m.at(i, l) * inv.at(l, j);
                }
            }
            inv.at(i, j) = acc / m.at(i, i);
        }
    }
    return inv;
}

RiordanArray::RiordanArray(Series g, Series f, Matrix matrix)
    : g_(std::move(g)), f_(std::move(f)), matrix_(std::move(matrix))
{
}

RiordanArray RiordanArray::build(const Series& g, const Series& f, unsigned size)
{
    if (size == 0) {
        throw std::invalid_argument("Riordan array size must be positive");
    }
    if (g.order() + 1 < size || f.order() + 1 < size || f.order() < 1) {
        throw std::invalid_argument("series orders too small for Riordan array of size " + std::to_string(size));
    }
    if (g[0] == 0) {
        throw std::domain_error("Riordan array needs g(0) != 0");
    }
    if (f[0] != 0) {
        throw std::domain_error("Riordan array needs f(0) = 0");
    }
    if (f[1] == 0) {
        throw std::domain_error("Riordan array needs f'(0) != 0");
    }
    const unsigned order = size - 1;
    const Series ft = f.truncated(order);
    Series column = g.truncated(order);  // g f^k / k!
    Matrix m(size);
    for (unsigned k = 0; k < size; ++k) {
        if (k > 0) {
            column = column * ft / Rational(k);
        }
        for (unsigned n = k; n < size; ++n) {
            m.at(n, k) = egf_coeff(column, n);
        }
    }
    return RiordanArray(g, f, std::move(m));
}

RiordanArray stirling_matrix(const BlockSizeSet& set, unsigned size)
{
    if (!set.contains(1)) {
        throw std::domain_error("stirling_matrix requires 1 in S (" + set.to_string() + ")");
    }
    const unsigned order = std::max(size, 2u) - 1;
    return RiordanArray::build(Series::constant(order, 1), set.egf(order), size);
}

RiordanArray multiply(const RiordanArray& a, const RiordanArray& b)
{
    if (a.size() != b.size()) {
        throw std::invalid_argument("Riordan arrays of different sizes");
    }
    const unsigned order =
        std::min({a.g().order(), a.f().order(), b.g().order(), b.f().order()});
    const Series g = a.g().truncated(order);
    const Series f = a.f().truncated(order);
    const Series h = b.g().truncated(order);
    const Series l = b.f().truncated(order);
    return RiordanArray::build(g * compose(h, f), compose(l, f), a.size());
}

Matrix inverse(const RiordanArray& a)
{
    return lower_triangular_inverse(a.matrix());
}

RiordanFactorization factorize(const RiordanArray& a)
{
    const unsigned size = a.size();
    const Series x = Series::monomial(std::max(a.g().order(), 1u), 1);
    RiordanArray scaling = RiordanArray::build(a.g(), x, size);
    // For size 1 the shifted factor is just [1]; the tail is kept at size 1.
    RiordanArray tail = RiordanArray::build(derivative(a.f()), a.f(), std::max(size, 2u) - 1);
    Matrix shifted = size == 1 ? Matrix::identity(1) : direct_sum(Matrix::identity(1), tail.matrix());
    return {std::move(scaling), std::move(tail), std::move(shifted)};
}

Matrix odd_product_prefix(unsigned size)
{
    if (size == 0) {
        throw std::invalid_argument("odd_product_prefix needs size >= 1");
    }
    const unsigned order = std::max(size, 2u) - 1;
    Series cosh(order);
    for (unsigned n = 0; n <= order; n += 2) {
        cosh += Series::monomial(order, n, Rational(1, factorial(n)));
    }
    const Series x = Series::monomial(order, 1);
    Matrix product = Matrix::identity(size);
    for (unsigned l = 1; l < size; ++l) {
        const Matrix bar = RiordanArray::build(cosh, x, size - l).matrix();
        product = product * direct_sum(Matrix::identity(l), bar);
    }
    return product;
}

IntPolynomial bell_det(unsigned n, const BlockSizeSet& set)
{
    const Matrix inv = inverse(stirling_matrix(set, n + 1));
    std::vector<IntPolynomial> bell;
    bell.reserve(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        IntPolynomial b = IntPolynomial::monomial(m);
        for (unsigned k = 0; k < m; ++k) {
            const Rational& t = inv.at(m, k);
            if (t.get_den() != 1) {
                throw std::logic_error("inverse Stirling entry is not an integer");
            }
            b -= bell[k] * t.get_num();
        }
        bell.push_back(std::move(b));
    }
    return bell.back();
}

}  // namespace rpt
