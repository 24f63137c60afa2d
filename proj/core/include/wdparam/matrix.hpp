#pragma once

#include "wdparam/ratfun.hpp"

namespace wdparam {

/// Dense matrix over K with exact arithmetic.  Only the small sizes arising
/// from realized parameters (n, n^2) are used, so everything is plain
/// Gaussian elimination.
class Matrix {
public:
    Matrix() = default;
    Matrix(const FieldContext* ctx, size_t rows, size_t cols);
    static Matrix identity(const FieldContext* ctx, size_t n);

    const FieldContext* ctx() const { return ctx_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator*(const FieldElem& c) const;
    bool operator==(const Matrix& o) const;
    Matrix transpose() const;
    Matrix pow(unsigned long e) const;
    bool is_zero() const;

    /// Gauss-Jordan inverse; throws compute_error when singular.
    Matrix inverse() const;
    size_t rank() const;
    /// Basis of the right kernel, one column per basis vector.
    Matrix kernel_basis() const;
    /// One solution x of A x = b; throws when inconsistent.
    std::vector<FieldElem> solve(const std::vector<FieldElem>& b) const;
    /// Solve A X = B column-wise (B with matching row count).
    Matrix solve(const Matrix& B) const;

    /// Characteristic polynomial det(x I - A) (Faddeev-LeVerrier).
    Poly charpoly() const;
    /// det(I - T A), the reciprocal characteristic polynomial.
    Poly det_one_minus_T() const;
    FieldElem det() const;
    FieldElem trace() const;

    /// Columns spanning im(A).
    Matrix column_space_basis() const;

    /// Stack this on top of o (same column count).
    static Matrix vstack(const Matrix& a, const Matrix& b);
    /// Keep the listed columns.
    Matrix select_columns(const std::vector<size_t>& idx) const;
    Matrix select_rows(const std::vector<size_t>& idx) const;

    std::string str() const;

private:
    const FieldContext* ctx_ = nullptr;
    size_t rows_ = 0, cols_ = 0;
    std::vector<FieldElem> a_;
};

}  // namespace wdparam
