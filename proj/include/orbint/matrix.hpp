#pragma once

// Dense exact matrices over F0 (Rational) and F (QuadExt).

#include "orbint/errors.hpp"
#include "orbint/field.hpp"

#include <cassert>
#include <cstddef>
#include <ostream>
#include <utility>
#include <vector>

namespace orbint {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            assert(row.size() == cols_);
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix column(const std::vector<T>& v) {
        Matrix m(v.size(), 1);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
        return m;
    }
    static Matrix row(const std::vector<T>& v) {
        Matrix m(1, v.size());
        for (std::size_t i = 0; i < v.size(); ++i) m(0, i) = v[i];
        return m;
    }
    /// Standard basis vector e_i as an n x 1 column.
    static Matrix unit_column(std::size_t n, std::size_t i) {
        Matrix m(n, 1);
        m(i, 0) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const { return data_; }

    Matrix col(std::size_t j) const {
        Matrix c(rows_, 1);
        for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
        return c;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Entrywise conjugate of the transpose.
    Matrix adjoint() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = conj((*this)(i, j));
        return t;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? ", [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: dimension mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using QMat = Matrix<Rational>;
using FMat = Matrix<QuadExt>;

/// Horizontal concatenation.
template <class T>
Matrix<T> hconcat(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.cols() == 0) return b;
    if (b.cols() == 0) return a;
    if (a.rows() != b.rows()) throw std::invalid_argument("hconcat: row mismatch");
    Matrix<T> r(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

/// Gaussian elimination; exact over any field.
template <class T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    T det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m(piv, c))) ++piv;
        if (piv == n) return T(0);
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m(r, c))) continue;
            T f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> m = a;
    Matrix<T> inv = Matrix<T>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m(piv, c))) ++piv;
        if (piv == n) throw SingularError("matrix is singular");
        if (piv != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m(piv, j), m(c, j));
                std::swap(inv(piv, j), inv(c, j));
            }
        T d = m(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m(c, j) /= d;
            inv(c, j) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || is_zero(m(r, c))) continue;
            T f = m(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                m(r, j) -= f * m(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, long k) {
    if (k < 0) return power(inverse(a), -k);
    Matrix<T> r = Matrix<T>::identity(a.rows());
    for (long i = 0; i < k; ++i) r = r * a;
    return r;
}

/// Coefficients c_0..c_n of det(T*I - A) (monic, c_n = 1), by Faddeev-LeVerrier.
template <class T>
std::vector<T> charpoly(const Matrix<T>& a) {
    if (!a.is_square()) throw std::invalid_argument("charpoly of a non-square matrix");
    const std::size_t n = a.rows();
    std::vector<T> c(n + 1, T(0));
    c[n] = T(1);
    Matrix<T> mk(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk;
        for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[n - k + 1];
        Matrix<T> am = a * mk;
        T tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / T(static_cast<long>(k));
    }
    return c;
}

/// Companion matrix of the monic polynomial T^n + c_{n-1} T^{n-1} + ... + c_0:
/// C e_j = e_{j+1} for j < n-1 and C e_{n-1} = -sum c_k e_k.
template <class T>
Matrix<T> companion(const std::vector<T>& coeffs_low) {
    const std::size_t n = coeffs_low.size();
    Matrix<T> c(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) c(j + 1, j) = T(1);
    for (std::size_t k = 0; k < n; ++k) c(k, n - 1) = -coeffs_low[k];
    return c;
}

/// Embeds a matrix over F0 into F.
FMat to_ext(const QMat& m);

/// Real form of an F-matrix on F0^{2n}, coordinates (re_1, im_1, re_2, im_2, ...):
/// the entry a + b sqrt(eps) becomes the block [[a, eps b], [b, a]].
QMat realify(const FMat& m, long epsilon);

/// Inverse of realify on column vectors: pairs (re, im) back to F-entries.
FMat complexify_column(const QMat& v, long epsilon);

}  // namespace orbint
