#pragma once

#include <vector>

#include "rpt/block_size_set.hpp"
#include "rpt/numeric.hpp"
#include "rpt/polynomial.hpp"
#include "rpt/series.hpp"

namespace rpt {

/// Dense square matrix of exact rationals.
class Matrix {
public:
    explicit Matrix(unsigned size = 0);

    static Matrix identity(unsigned size);

    unsigned size() const noexcept { return size_; }
    const Rational& at(unsigned row, unsigned col) const { return cells_.at(row * size_ + col); }
    Rational& at(unsigned row, unsigned col) { return cells_.at(row * size_ + col); }

    /// Top-left `size` x `size` block.
    Matrix leading(unsigned size) const;
    bool is_lower_triangular() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    unsigned size_;
    std::vector<Rational> cells_;
};

/// a (+) b: block diagonal with a in the top-left corner.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// Inverse of a lower-triangular matrix with nonzero diagonal, by forward
/// substitution. Throws std::domain_error on a zero diagonal entry.
Matrix lower_triangular_inverse(const Matrix& m);

/// Exponential Riordan array <g, f> truncated to size x size: column k has
/// exponential generating function g f^k / k!, so
///     d(n, k) = n!/k! [x^n] g(x) f(x)^k.
class RiordanArray {
public:
    /// Requires g(0) != 0, f(0) = 0, f'(0) != 0, order(g) >= size-1 and
    /// order(f) >= max(size-1, 1).
    static RiordanArray build(const Series& g, const Series& f, unsigned size);

    const Series& g() const noexcept { return g_; }
    const Series& f() const noexcept { return f_; }
    unsigned size() const noexcept { return matrix_.size(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Rational& at(unsigned n, unsigned k) const { return matrix_.at(n, k); }

private:
    RiordanArray(Series g, Series f, Matrix matrix);

    Series g_;
    Series f_;
    Matrix matrix_;
};

/// M_S = <1, E_S(x)>, whose entries are {n brace k}_S. Requires 1 in S.
RiordanArray stirling_matrix(const BlockSizeSet& set, unsigned size);

/// <g, f> * <h, l> = <g h(f), l(f)>.
RiordanArray multiply(const RiordanArray& a, const RiordanArray& b);

Matrix inverse(const RiordanArray& a);

/// <g, f> = <g, x> * ([1] (+) <f', f>).
struct RiordanFactorization {
    RiordanArray scaling;  // <g, x>
    RiordanArray tail;     // <f', f>, one size smaller
    Matrix shifted;        // [1] (+) tail
};
RiordanFactorization factorize(const RiordanArray& a);

/// Product (I_1 (+) P) (I_2 (+) P) ... (I_{size-1} (+) P) with P = <cosh x, x>,
/// each factor cut to size x size. Equals the leading block of the odd-block
/// Stirling matrix.
Matrix odd_product_prefix(unsigned size);

/// B_{n,S}(x) from B_n = x^n - sum_{k<n} {n brace k}^{-1}_S B_k, the
/// recurrence behind the determinant formula. Requires 1 in S.
IntPolynomial bell_det(unsigned n, const BlockSizeSet& set);

}  // namespace rpt
