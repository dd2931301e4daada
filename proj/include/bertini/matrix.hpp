#ifndef BERTINI_MATRIX_HPP
#define BERTINI_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "bertini/scalar.hpp"

namespace bertini {

/*
 * Dense matrix over a single coefficient field, with exact rank, kernel
 * and determinant.  Two independent elimination routes are kept on
 * purpose: rank and determinant run fraction-free (Bareiss) over Q and
 * plain Gaussian over F_p, while kernels come from a Gauss-Jordan
 * reduced row echelon form.  rank-nullity ties the two together in the
 * property tests.
 */
class Matrix {
public:
    Matrix(FieldTag tag, std::size_t rows, std::size_t cols);  // zero-filled
    static Matrix identity(FieldTag tag, std::size_t n);
    static Matrix from_rows(FieldTag tag, const std::vector<std::vector<Scalar>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    FieldTag tag() const { return tag_; }

    const Scalar& at(std::size_t i, std::size_t j) const;
    void set(std::size_t i, std::size_t j, const Scalar& v);  // checks the domain

    std::vector<Scalar> row(std::size_t i) const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
    bool operator==(const Matrix& o) const;

    /// Exact rank (fraction-free elimination over Q, Gaussian over F_p).
    std::size_t rank() const;

    /// Canonical basis of the right kernel, one vector per free column of
    /// the RREF, in increasing free-column order.  Size = cols - rank.
    std::vector<std::vector<Scalar>> kernel_basis() const;

    /// Exact determinant; throws ShapeError unless square.
    Scalar det() const;

    /// Inverse; throws InvalidTransformError when singular.
    Matrix inverse() const;

    /// Reduced row echelon form; optionally reports the rank.
    Matrix rref(std::size_t* out_rank = nullptr) const;

private:
    FieldTag tag_;
    std::size_t rows_, cols_;
    std::vector<Scalar> e_;

    Scalar& mut(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
};

}  // namespace bertini

#endif  // BERTINI_MATRIX_HPP
