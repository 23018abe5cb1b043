/*
   Copyright 2026 the mahler-relations authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <vector>

#include "errors.hpp"

namespace mahler {

/// Dense matrix over a field-like type (FieldElem, RatFunc, ...).
template <class T>
class Matrix {
   public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    static Matrix identity(size_t n, const T& one) {
        Matrix m(n, n, one.zero_like());
        for (size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] + o.data_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        require_same_shape(o);
        Matrix r = *this;
        for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = r.data_[i] - o.data_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
        Matrix r(rows_, o.cols_, data_.empty() ? T() : data_[0].zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a.is_zero()) continue;
                for (size_t j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b.is_zero()) continue;
                    r(i, j) = r(i, j) + a * b;
                }
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (auto& e : r.data_) e = e * s;
        return r;
    }

    std::vector<T> row(size_t i) const {
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }

    /// Apply f to every entry, producing a matrix of f's result type.
    template <class F>
    auto map(F f) const {
        using U = decltype(f(data_[0]));
        Matrix<U> r(rows_, cols_, f(data_[0]).zero_like());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    /// Determinant by Gaussian elimination over the entry field.
    T determinant() const {
        if (rows_ != cols_) throw Error("determinant of non-square matrix");
        if (rows_ == 0) throw Error("determinant of empty matrix");
        Matrix a = *this;
        T det = data_[0].one_like();
        bool negate = false;
        for (size_t c = 0; c < cols_; ++c) {
            size_t p = c;
            while (p < rows_ && a(p, c).is_zero()) ++p;
            if (p == rows_) return data_[0].zero_like();
            if (p != c) {
                for (size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
                negate = !negate;
            }
            det = det * a(c, c);
            T inv_pivot = a(c, c).one_like() / a(c, c);
            for (size_t i = c + 1; i < rows_; ++i) {
                if (a(i, c).is_zero()) continue;
                T f = a(i, c) * inv_pivot;
                for (size_t j = c; j < cols_; ++j) a(i, j) = a(i, j) - f * a(c, j);
            }
        }
        return negate ? -det : det;
    }

    /// Inverse by Gauss-Jordan; throws for singular input.
    Matrix inverse() const {
        if (rows_ != cols_) throw Error("inverse of non-square matrix");
        Matrix a = *this;
        Matrix inv = identity(rows_, data_[0].one_like());
        for (size_t c = 0; c < cols_; ++c) {
            size_t p = c;
            while (p < rows_ && a(p, c).is_zero()) ++p;
            if (p == rows_) throw Error("matrix is singular");
            if (p != c)
                for (size_t j = 0; j < cols_; ++j) {
                    std::swap(a(p, j), a(c, j));
                    std::swap(inv(p, j), inv(c, j));
                }
            T ip = a(c, c).one_like() / a(c, c);
            for (size_t j = 0; j < cols_; ++j) {
                a(c, j) = a(c, j) * ip;
                inv(c, j) = inv(c, j) * ip;
            }
            for (size_t i = 0; i < rows_; ++i) {
                if (i == c || a(i, c).is_zero()) continue;
                T f = a(i, c);
                for (size_t j = 0; j < cols_; ++j) {
                    a(i, j) = a(i, j) - f * a(c, j);
                    inv(i, j) = inv(i, j) - f * inv(c, j);
                }
            }
        }
        return inv;
    }

    T operator-() const = delete;

   private:
    void require_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("matrix shape mismatch");
    }
    size_t rows_, cols_;
    std::vector<T> data_;
};

/// v * M for a row vector v.
template <class T>
std::vector<T> row_times_matrix(const std::vector<T>& v, const Matrix<T>& m) {
    if (v.size() != m.rows()) throw Error("row-vector/matrix shape mismatch");
    std::vector<T> out(m.cols(), v.empty() ? T() : v[0].zero_like());
    for (size_t i = 0; i < m.rows(); ++i) {
        if (v[i].is_zero()) continue;
        for (size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            out[j] = out[j] + v[i] * m(i, j);
        }
    }
    return out;
}

}  // namespace mahler
