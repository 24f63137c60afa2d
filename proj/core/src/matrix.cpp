#include "wdparam/matrix.hpp"

#include <sstream>

namespace wdparam {

Matrix::Matrix(const FieldContext* ctx, size_t rows, size_t cols)
    : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, FieldElem::zero(ctx)) {}

Matrix Matrix::identity(const FieldContext* ctx, size_t n) {
    Matrix m(ctx, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElem::one(ctx);
    return m;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw validation_error("matrix dimension mismatch");
    Matrix r(ctx_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (x.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        }
    }
    return r;
}

Matrix Matrix::operator*(const FieldElem& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x = x * c;
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix Matrix::transpose() const {
    Matrix r(ctx_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::pow(unsigned long e) const {
    Matrix acc = identity(ctx_, rows_);
    Matrix base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row echelon reduction in place; returns pivot column indices.
std::vector<size_t> row_reduce(Matrix& m) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t sel = r;
        while (sel < m.rows() && m.at(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
        FieldElem inv = m.at(r, c).inv();
        for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = m.at(r, j) * inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            FieldElem f = m.at(i, c);
            for (size_t j = c; j < m.cols(); ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw validation_error("inverse of non-square matrix");
    Matrix aug(ctx_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = FieldElem::one(ctx_);
    }
    auto pivots = row_reduce(aug);
    if (pivots.size() != rows_ || pivots.back() >= cols_)
        throw compute_error("singular matrix");
    Matrix r(ctx_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = aug.at(i, cols_ + j);
    return r;
}

size_t Matrix::rank() const {
    Matrix m = *this;
    return row_reduce(m).size();
}

Matrix Matrix::kernel_basis() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(ctx_, cols_, free_cols.size());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        size_t fc = free_cols[fi];
        k.at(fc, fi) = FieldElem::one(ctx_);
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            k.at(pivots[pi], fi) = -m.at(pi, fc);
    }
    return k;
}

std::vector<FieldElem> Matrix::solve(const std::vector<FieldElem>& b) const {
    if (b.size() != rows_) throw validation_error("rhs size mismatch");
    Matrix aug(ctx_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto pivots = row_reduce(aug);
    std::vector<FieldElem> x(cols_, FieldElem::zero(ctx_));
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
        if (pivots[pi] == cols_) throw compute_error("inconsistent linear system");
        x[pivots[pi]] = aug.at(pi, cols_);
    }
    return x;
}

Matrix Matrix::solve(const Matrix& B) const {
    Matrix x(ctx_, cols_, B.cols());
    for (size_t c = 0; c < B.cols(); ++c) {
        std::vector<FieldElem> col(rows_, FieldElem::zero(ctx_));
        for (size_t i = 0; i < rows_; ++i) col[i] = B.at(i, c);
        auto sol = solve(col);
        for (size_t i = 0; i < cols_; ++i) x.at(i, c) = sol[i];
    }
    return x;
}

Poly Matrix::charpoly() const {
    if (rows_ != cols_) throw validation_error("charpoly of non-square matrix");
    size_t n = rows_;
    // Faddeev-LeVerrier: exact in characteristic zero.
    std::vector<FieldElem> c(n + 1, FieldElem::zero(ctx_));
    c[n] = FieldElem::one(ctx_);
    Matrix m(ctx_, n, n);  // M_0 = 0
    for (size_t k = 1; k <= n; ++k) {
        // M_k = A*M_{k-1} + c_{n-k+1} I
        m = (*this) * m;
        for (size_t i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) + c[n - k + 1];
        FieldElem tr = ((*this) * m).trace();
        c[n - k] = -(tr / FieldElem::from_int(ctx_, static_cast<long>(k)));
    }
    return Poly(ctx_, std::move(c));
}

Poly Matrix::det_one_minus_T() const {
    Poly cp = charpoly();
    // det(I - T A) = T^n charpoly(1/T) with charpoly = det(xI - A)
    std::vector<FieldElem> rev(cp.coeffs().rbegin(), cp.coeffs().rend());
    return Poly(ctx_, std::move(rev));
}

FieldElem Matrix::det() const {
    Poly cp = charpoly();
    FieldElem c0 = cp.coeffs().empty() ? FieldElem::zero(ctx_) : cp[0];
    // det(A) = (-1)^n * charpoly(0)
    return (rows_ % 2 == 0) ? c0 : -c0;
}

FieldElem Matrix::trace() const {
    FieldElem t = FieldElem::zero(ctx_);
    for (size_t i = 0; i < rows_; ++i) t = t + at(i, i);
    return t;
}

Matrix Matrix::column_space_basis() const {
    Matrix m = *this;
    auto pivots = row_reduce(m);
    return select_columns(pivots);
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols()) throw validation_error("vstack column mismatch");
    Matrix r(a.ctx(), a.rows() + b.rows(), a.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (size_t i = 0; i < b.rows(); ++i)
        for (size_t j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::select_columns(const std::vector<size_t>& idx) const {
    Matrix r(ctx_, rows_, idx.size());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(i, idx[j]);
    return r;
}

Matrix Matrix::select_rows(const std::vector<size_t>& idx) const {
    Matrix r(ctx_, idx.size(), cols_);
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(i, j) = at(idx[i], j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
        os << "]\n";
    }
    return os.str();
}

}  // namespace wdparam
