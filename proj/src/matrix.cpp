#include "bertini/matrix.hpp"

#include <utility>

namespace bertini {

Matrix::Matrix(FieldTag tag, std::size_t rows, std::size_t cols)
    : tag_(tag), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(tag)) {}

Matrix Matrix::identity(FieldTag tag, std::size_t n) {
    Matrix m(tag, n, n);
    for (std::size_t i = 0; i < n; ++i) m.mut(i, i) = Scalar::one(tag);
    return m;
}

Matrix Matrix::from_rows(FieldTag tag, const std::vector<std::vector<Scalar>>& rows) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : 0;
    Matrix m(tag, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeError("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

const Scalar& Matrix::at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    return e_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    if (v.tag() != tag_)
        throw FieldMismatchError("entry domain " + v.tag().str() + " differs from matrix domain " +
                                 tag_.str());
    e_[i * cols_ + j] = v;
}

std::vector<Scalar> Matrix::row(std::size_t i) const {
    std::vector<Scalar> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(i, j));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(tag_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.mut(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (tag_ != o.tag_) throw FieldMismatchError("product of matrices over different fields");
    if (cols_ != o.rows_) throw ShapeError("inner dimensions disagree");
    Matrix p(tag_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                p.mut(i, j) += a * o.at(k, j);
        }
    return p;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (v.size() != cols_) throw ShapeError("vector length disagrees with column count");
    std::vector<Scalar> out(rows_, Scalar::zero(tag_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero()) out[i] += at(i, j) * v[j];
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    if (tag_ != o.tag_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

namespace {

// Clears denominators row by row; returns the integer matrix and the
// per-row multipliers.
std::vector<std::vector<mpz_class>> integerize(const Matrix& m, std::vector<mpz_class>& mults) {
    std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
    mults.assign(m.rows(), mpz_class(1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l(1);
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rat().get_den().get_mpz_t());
        mults[i] = l;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            mpq_class v = m.at(i, j).rat() * mpq_class(l);
            z[i][j] = v.get_num();  // denominator is 1 by construction
        }
    }
    return z;
}

// Fraction-free forward elimination with column skipping.  Pivot rule:
// first row with a nonzero entry in the current column.  Entries stay
// minors of the input, so every division is exact.  Returns the rank;
// when `det_out` is non-null the matrix must be square and the value of
// det(Z) (with row-swap sign) is reported, or 0 on rank deficiency.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>>& z, mpz_class* det_out) {
    const std::size_t rows = z.size();
    const std::size_t cols = rows ? z[0].size() : 0;
    mpz_class prev(1);
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && z[piv][c] == 0) ++piv;
        if (piv == rows) {
            if (det_out) {
                *det_out = 0;
                return r;
            }
            continue;
        }
        if (piv != r) {
            std::swap(z[piv], z[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = z[i][j] * z[r][c] - z[i][c] * z[r][j];
                mpz_divexact(z[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            z[i][c] = 0;
        }
        prev = z[r][c];
        ++r;
    }
    if (det_out) {
        if (r < rows)
            *det_out = 0;
        else
            *det_out = sign > 0 ? prev : mpz_class(-prev);
    }
    return r;
}

// Plain Gaussian elimination over F_p; same pivot rule.  Reports rank,
// and det (with sign) when requested on a square matrix.
std::size_t gauss_fp_rank(std::vector<std::vector<Scalar>>& a, FieldTag tag, Scalar* det_out) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    Scalar det = Scalar::one(tag);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) {
            if (det_out) {
                *det_out = Scalar::zero(tag);
                return r;
            }
            continue;
        }
        if (piv != r) {
            std::swap(a[piv], a[r]);
            det = -det;
        }
        det = det * a[r][c];
        Scalar inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    if (det_out) *det_out = r < rows ? Scalar::zero(tag) : det;
    return r;
}

}  // namespace

std::size_t Matrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (tag_.is_rational()) {
        std::vector<mpz_class> mults;
        auto z = integerize(*this, mults);
        return bareiss_rank(z, nullptr);
    }
    std::vector<std::vector<Scalar>> a(rows_);
    for (std::size_t i = 0; i < rows_; ++i) a[i] = row(i);
    return gauss_fp_rank(a, tag_, nullptr);
}

Scalar Matrix::det() const {
    if (rows_ != cols_) throw ShapeError("determinant of a non-square matrix");
    if (rows_ == 0) return Scalar::one(tag_);
    if (tag_.is_rational()) {
        std::vector<mpz_class> mults;
        auto z = integerize(*this, mults);
        mpz_class d;
        bareiss_rank(z, &d);
        mpq_class result(d);
        for (const auto& m : mults) result /= mpq_class(m);
        return Scalar::rational(std::move(result));
    }
    std::vector<std::vector<Scalar>> a(rows_);
    for (std::size_t i = 0; i < rows_; ++i) a[i] = row(i);
    Scalar d = Scalar::zero(tag_);
    gauss_fp_rank(a, tag_, &d);
    return d;
}

Matrix Matrix::rref(std::size_t* out_rank) const {
    Matrix r = *this;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
        std::size_t piv = rank;
        while (piv < rows_ && r.at(piv, c).is_zero()) ++piv;
        if (piv == rows_) continue;
        if (piv != rank)
            for (std::size_t j = 0; j < cols_; ++j) std::swap(r.mut(rank, j), r.mut(piv, j));
        Scalar inv = r.at(rank, c).inverse();
        for (std::size_t j = c; j < cols_; ++j) r.mut(rank, j) = r.at(rank, j) * inv;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == rank || r.at(i, c).is_zero()) continue;
            Scalar f = r.at(i, c);
            for (std::size_t j = c; j < cols_; ++j) r.mut(i, j) -= f * r.at(rank, j);
        }
        ++rank;
    }
    if (out_rank) *out_rank = rank;
    return r;
}

std::vector<std::vector<Scalar>> Matrix::kernel_basis() const {
    std::size_t rank = 0;
    Matrix r = rref(&rank);
    // pivot column of each echelon row
    std::vector<std::size_t> pivot_col(rank);
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0, c = 0; i < rank; ++i) {
        while (c < cols_ && r.at(i, c).is_zero()) ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    std::vector<std::vector<Scalar>> basis;
    basis.reserve(cols_ - rank);
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Scalar> v(cols_, Scalar::zero(tag_));
        v[f] = Scalar::one(tag_);
        for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = -r.at(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw ShapeError("inverse of a non-square matrix");
    Matrix aug(tag_, rows_, 2 * cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) aug.mut(i, j) = at(i, j);
        aug.mut(i, cols_ + i) = Scalar::one(tag_);
    }
    std::size_t rank = 0;
    Matrix r = aug.rref(&rank);
    // rank of the left block decides invertibility
    for (std::size_t i = 0; i < rows_; ++i) {
        bool pivot_in_left = false;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!r.at(i, j).is_zero()) {
                pivot_in_left = true;
                break;
            }
        if (!pivot_in_left) throw InvalidTransformError("matrix is singular");
    }
    Matrix inv(tag_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) inv.mut(i, j) = r.at(i, cols_ + j);
    return inv;
}

}  // namespace bertini
