#include "sqc/matrix.hpp"

#include <utility>

#include "sqc/errors.hpp"

namespace sqc {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw dimension_mismatch("matrix entry count does not match rows x cols");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw dimension_mismatch("matrix product shapes");
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("matrix sum shapes");
    Matrix c = a;
    for (std::size_t i = 0; i < b.entries().size(); ++i)
        c.entries_[i] += b.entries()[i];
    return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw dimension_mismatch("matrix difference shapes");
    Matrix c = a;
    for (std::size_t i = 0; i < b.entries().size(); ++i)
        c.entries_[i] -= b.entries()[i];
    return c;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix m = *this;
    for (auto& e : m.entries_) e *= c;
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw dimension_mismatch("matrix-vector shapes");
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& e = at(i, j);
            if (!e.is_zero() && !v[j].is_zero()) out[i] += e * v[j];
        }
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

Matrix rref(const Matrix& m) {
    std::vector<std::vector<Scalar>> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<Scalar> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m.at(i, j);
        rows.push_back(std::move(r));
    }
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < rows.size(); ++col) {
        std::size_t sel = pivot_row;
        while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[pivot_row], rows[sel]);
        const Scalar inv = scalar_inv(rows[pivot_row][col]);
        for (std::size_t j = col; j < m.cols(); ++j) rows[pivot_row][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot_row || rows[i][col].is_zero()) continue;
            const Scalar f = rows[i][col];
            for (std::size_t j = col; j < m.cols(); ++j)
                rows[i][j] -= f * rows[pivot_row][j];
        }
        ++pivot_row;
    }
    Matrix out(pivot_row, m.cols());
    for (std::size_t i = 0; i < pivot_row; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = rows[i][j];
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw dimension_mismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    // Eliminate on [m | I].
    Matrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    const Matrix red = rref(aug);
    if (red.rows() < n) throw division_by_zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (red.at(i, j) != (i == j ? Scalar(1) : Scalar(0)))
                throw division_by_zero();
    Matrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
    return inv;
}

} // namespace sqc
