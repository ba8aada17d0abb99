#pragma once

#include <cstddef>
#include <vector>

#include "sqc/scalar.hpp"

namespace sqc {

/// Dense row-major matrix over the exact field F.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Scalar& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix scaled(const Scalar& c) const;

    /// Matrix-vector product.
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;

    bool is_zero() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

/// Reduced row-echelon form with zero rows removed; the result's rows are a
/// canonical basis of the input's row space (an empty matrix for rank 0).
Matrix rref(const Matrix& m);

/// Rank via elimination.
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; throws division_by_zero when singular.
Matrix inverse(const Matrix& m);

} // namespace sqc
