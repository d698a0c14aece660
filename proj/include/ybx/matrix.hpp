#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace ybx {

// Dense exact matrix. Column convention throughout: column j holds the image
// of basis vector e_j. Tensor bases are ordered lexicographically,
// index(i,j) = i*d + j. Any rows-as-images display is an explicit transpose
// at the presentation boundary.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const FieldDescriptor& fd)
        : rows_(rows), cols_(cols), fd_(fd), e_(rows * cols, Scalar::zero(fd)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(std::size_t n, const FieldDescriptor& fd) {
        Matrix m(n, n, fd);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(fd));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDescriptor& field() const { return fd_; }

    const Scalar& at(std::size_t i, std::size_t j) const {
        range_check(i, j);
        return e_[i * cols_ + j];
    }

    void set(std::size_t i, std::size_t j, const Scalar& v) {
        range_check(i, j);
        require_same_field(fd_, v.field(), "matrix entry");
        e_[i * cols_ + j] = v;
    }

    void add_at(std::size_t i, std::size_t j, const Scalar& v) {
        range_check(i, j);
        require_same_field(fd_, v.field(), "matrix entry");
        e_[i * cols_ + j] += v;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && fd_ == o.fd_ && e_ == o.e_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        shape_check(o, "matrix +");
        Matrix m(rows_, cols_, fd_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
        return m;
    }

    Matrix operator-(const Matrix& o) const {
        shape_check(o, "matrix -");
        Matrix m(rows_, cols_, fd_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        require_same_field(fd_, o.fd_, "matrix *");
        if (cols_ != o.rows_)
            throw std::invalid_argument("matrix *: inner dimensions disagree (" +
                                        std::to_string(cols_) + " vs " +
                                        std::to_string(o.rows_) + ")");
        Matrix m(rows_, o.cols_, fd_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t t = 0; t < cols_; ++t) {
                const Scalar& a = e_[i * cols_ + t];
                if (a.is_zero()) continue;  // operators here are mostly sparse
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    const Scalar& b = o.e_[t * o.cols_ + j];
                    if (!b.is_zero()) m.e_[i * o.cols_ + j] += a * b;
                }
            }
        return m;
    }

    Matrix scaled(const Scalar& lambda) const {
        require_same_field(fd_, lambda.field(), "matrix scale");
        Matrix m(rows_, cols_, fd_);
        for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * lambda;
        return m;
    }

    Matrix transposed() const {
        Matrix m(cols_, rows_, fd_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.e_[j * rows_ + i] = e_[i * cols_ + j];
        return m;
    }

    // Gauss-Jordan over the exact field; nullopt when rank deficient.
    std::optional<Matrix> inverse() const {
        if (rows_ != cols_)
            throw std::invalid_argument("inverse: matrix is not square");
        Matrix a(*this);
        Matrix inv = identity(rows_, fd_);
        for (std::size_t col = 0; col < cols_; ++col) {
            std::size_t pivot = rows_;
            for (std::size_t r = col; r < rows_; ++r)
                if (!a.e_[r * cols_ + col].is_zero()) { pivot = r; break; }
            if (pivot == rows_) return std::nullopt;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            Scalar inv_p = a.e_[col * cols_ + col].inverse();
            a.scale_row(col, inv_p);
            inv.scale_row(col, inv_p);
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == col) continue;
                Scalar f = a.e_[r * cols_ + col];
                if (f.is_zero()) continue;
                a.add_row_multiple(r, col, -f);
                inv.add_row_multiple(r, col, -f);
            }
        }
        return inv;
    }

    // In-place reduced row echelon form; returns pivot columns.
    std::vector<std::size_t> rref() {
        std::vector<std::size_t> pivots;
        std::size_t row = 0;
        for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
            std::size_t pivot = rows_;
            for (std::size_t r = row; r < rows_; ++r)
                if (!e_[r * cols_ + col].is_zero()) { pivot = r; break; }
            if (pivot == rows_) continue;
            swap_rows(pivot, row);
            scale_row(row, e_[row * cols_ + col].inverse());
            for (std::size_t r = 0; r < rows_; ++r) {
                if (r == row) continue;
                Scalar f = e_[r * cols_ + col];
                if (!f.is_zero()) add_row_multiple(r, row, -f);
            }
            pivots.push_back(col);
            ++row;
        }
        return pivots;
    }

private:
    void range_check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw std::out_of_range("matrix index (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") outside " +
                                    std::to_string(rows_) + "x" + std::to_string(cols_));
    }

    void shape_check(const Matrix& o, const char* where) const {
        require_same_field(fd_, o.fd_, where);
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string(where) + ": shape mismatch");
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j)
            std::swap(e_[a * cols_ + j], e_[b * cols_ + j]);
    }

    void scale_row(std::size_t r, const Scalar& f) {
        for (std::size_t j = 0; j < cols_; ++j) e_[r * cols_ + j] *= f;
    }

    // row r += f * row src
    void add_row_multiple(std::size_t r, std::size_t src, const Scalar& f) {
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& s = e_[src * cols_ + j];
            if (!s.is_zero()) e_[r * cols_ + j] += f * s;
        }
    }

    std::size_t rows_, cols_;
    FieldDescriptor fd_;
    std::vector<Scalar> e_;
};

// One solution of A x = b when the system is consistent, nullopt otherwise.
// Free variables are set to zero.
inline std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b) {
    if (b.size() != a.rows())
        throw std::invalid_argument("solve: right-hand side length mismatch");
    Matrix aug(a.rows(), a.cols() + 1, a.field());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a.at(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    std::vector<std::size_t> pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == a.cols())
        return std::nullopt;  // pivot in the constants column: inconsistent
    std::vector<Scalar> x(a.cols(), Scalar::zero(a.field()));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, a.cols());
    return x;
}

// Basis of the kernel of A, one vector per free column.
inline std::vector<std::vector<Scalar>> nullspace(const Matrix& a) {
    Matrix red(a);
    std::vector<std::size_t> pivots = red.rref();
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Scalar> v(a.cols(), Scalar::zero(a.field()));
        v[free] = Scalar::one(a.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// tau(v (x) w) = w (x) v as a d^2 x d^2 permutation matrix.
inline Matrix twist(std::size_t d, const FieldDescriptor& fd) {
    if (d == 0)
        throw std::invalid_argument("twist: dimension must be positive");
    Matrix t(d * d, d * d, fd);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) t.set(j * d + i, i * d + j, Scalar::one(fd));
    return t;
}

// kron(a,b)[(i*b.rows+k), (j*b.cols+l)] = a[i,j] * b[k,l]
inline Matrix kron(const Matrix& a, const Matrix& b) {
    require_same_field(a.field(), b.field(), "kron");
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (!bkl.is_zero()) m.set(i * b.rows() + k, j * b.cols() + l, aij * bkl);
                }
        }
    return m;
}

inline void require_operator_shape(const Matrix& r, std::size_t d, const char* where) {
    if (r.rows() != d * d || r.cols() != d * d)
        throw std::invalid_argument(std::string(where) + ": operator must be " +
                                    std::to_string(d * d) + "x" + std::to_string(d * d) +
                                    " for dimension " + std::to_string(d));
}

// Lifts of an operator on V(x)V to V(x)V(x)V, acting on the named tensor factors.
inline Matrix lift12(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "lift12");
    return kron(r, Matrix::identity(d, r.field()));
}

inline Matrix lift23(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "lift23");
    return kron(Matrix::identity(d, r.field()), r);
}

inline Matrix lift13(const Matrix& r, std::size_t d) {
    require_operator_shape(r, d, "lift13");
    Matrix it = kron(Matrix::identity(d, r.field()), twist(d, r.field()));
    return it * lift12(r, d) * it;
}

}  // namespace ybx
