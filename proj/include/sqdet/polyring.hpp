#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace sqdet {

using BigInt = mpz_class;

/// Dense univariate polynomial in q with integer coefficients.
///
/// coeffs()[k] is the coefficient of q^k. The representation is always
/// normalized: the last stored coefficient is nonzero, and the zero
/// polynomial stores nothing.
class IntPoly {
public:
    /// Degree reported for the zero polynomial. Never a valid index.
    static constexpr long kZeroDegree = -1;

    IntPoly() = default;
    IntPoly(const BigInt& c);  // NOLINT(google-explicit-constructor): constants embed
    IntPoly(long c);           // NOLINT(google-explicit-constructor)
    explicit IntPoly(std::vector<BigInt> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    /// c·q^k
    static IntPoly monomial(const BigInt& c, std::size_t k);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    /// Coefficient of q^k, zero beyond the degree.
    BigInt coeff(std::size_t k) const;
    /// Lowest exponent with a nonzero coefficient; kZeroDegree for zero.
    long low_degree() const;

    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    IntPoly pow(unsigned long e) const;

    /// Exact quotient a / d over Z[q]. Throws InternalError when d does not
    /// divide a (which Bareiss elimination guarantees never happens).
    static IntPoly divexact(const IntPoly& a, const IntPoly& d);

    /// Human-readable form, e.g. "1 + 2q^2 + q^4".
    std::string to_string() const;

private:
    void normalize();
    std::vector<BigInt> coeffs_;
};

/// [n]_{q^2} = 1 + q^2 + ... + q^{2n-2}. Throws std::invalid_argument for n = 0.
IntPoly q_integer(unsigned long n);

/// Exact Horner evaluation.
BigInt poly_eval(const IntPoly& p, const BigInt& x);

/// Dense rectangular integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigInt> data_;
};

/// Square matrix of polynomials with row/column labels (the same list for
/// both). The label order is whatever the caller supplies.
class PolyMatrix {
public:
    PolyMatrix() = default;
    /// n×n zero matrix with labels "0".."n-1".
    explicit PolyMatrix(std::size_t n);
    /// Zero matrix labelled by `labels`; throws std::invalid_argument on duplicates.
    explicit PolyMatrix(std::vector<std::string> labels);
    PolyMatrix(std::initializer_list<std::initializer_list<IntPoly>> rows);

    static PolyMatrix from_constants(const IntMatrix& m);

    std::size_t size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    IntPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const IntPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    /// Entrywise evaluation at q = x.
    IntMatrix evaluate(const BigInt& x) const;
    bool is_symmetric() const;

private:
    std::size_t n_ = 0;
    std::vector<std::string> labels_;
    std::vector<IntPoly> entries_;
};

/// Fraction-free (Bareiss) determinant over Z. Throws std::invalid_argument
/// unless the matrix is square. The 0×0 determinant is 1.
BigInt int_det(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant over Z[q], with every division an
/// exact polynomial division. The result is re-checked against int_det of
/// the matrix evaluated at q = 1, 2, 3; a disagreement throws InternalError.
IntPoly poly_det(const PolyMatrix& m);

/// Same elimination without the evaluation cross-check.
IntPoly poly_det_unchecked(const PolyMatrix& m);

} // namespace sqdet
