/*
 * Copyright 2026 The fisherkit Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#include "fisherkit/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace fisherkit {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols())
            throw DimensionMismatch("from_rows: ragged row lengths");
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

std::vector<double> Matrix::col_copy(std::size_t j) const {
    auto v = col(j);
    return {v.begin(), v.end()};
}

void Matrix::set_col(std::size_t j, std::span<const double> v) {
    if (v.size() != rows_) throw DimensionMismatch("set_col: length mismatch");
    std::copy(v.begin(), v.end(), data_.begin() + static_cast<std::ptrdiff_t>(j * rows_));
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t j = 0; j < cols_; ++j)
        for (std::size_t i = 0; i < rows_; ++i) t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::leading_cols(std::size_t k) const {
    if (k > cols_) throw DimensionMismatch("leading_cols: k exceeds column count");
    Matrix m(rows_, k);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(k * rows_),
              m.data_.begin());
    return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    if (!same_shape(other)) throw DimensionMismatch("matrix addition shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    if (!same_shape(other)) throw DimensionMismatch("matrix subtraction shape mismatch");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
}

Matrix& Matrix::operator*=(double s) {
    for (double& x : data_) x *= s;
    return *this;
}

double Matrix::frobenius_norm() const {
    double sum = 0.0;
    for (double x : data_) sum += x * x;
    return std::sqrt(sum);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : data_) m = std::max(m, std::fabs(x));
    return m;
}

double Matrix::trace() const {
    double t = 0.0;
    const std::size_t n = std::min(rows_, cols_);
    for (std::size_t i = 0; i < n; ++i) t += (*this)(i, i);
    return t;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(double s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const double bkj = b(k, j);
            if (bkj == 0.0) continue;
            for (std::size_t i = 0; i < a.rows(); ++i) c(i, j) += a(i, k) * bkj;
        }
    }
    return c;
}

std::vector<double> operator*(const Matrix& a, std::span<const double> x) {
    if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const double xk = x[k];
        if (xk == 0.0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i) y[i] += a(i, k) * xk;
    }
    return y;
}

std::vector<double> multiply_transposed(const Matrix& a, std::span<const double> x) {
    if (a.rows() != x.size()) throw DimensionMismatch("transposed matrix-vector shape mismatch");
    std::vector<double> y(a.cols(), 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] = dot(a.col(j), x);
    return y;
}

Matrix multiply_transposed(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("aᵀb shape mismatch");
    Matrix c(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (std::size_t i = 0; i < a.cols(); ++i) c(i, j) = dot(a.col(i), b.col(j));
    return c;
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

double squared_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("squared_distance: length mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

void scale(std::span<double> a, double s) {
    for (double& x : a) x *= s;
}

std::vector<double> subtract(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DimensionMismatch("subtract: length mismatch");
    std::vector<double> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

double abs_cosine(std::span<const double> a, std::span<const double> b) {
    const double na = norm2(a);
    const double nb = norm2(b);
    if (na == 0.0 || nb == 0.0) throw ZeroVector("abs_cosine: zero vector");
    return std::min(1.0, std::fabs(dot(a, b)) / (na * nb));
}

Matrix unit_columns(Matrix m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const double n = norm2(m.col(j));
        if (n > 0.0) scale(m.col(j), 1.0 / n);
    }
    return m;
}

SymMatrix::SymMatrix(Matrix a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("SymMatrix requires a square matrix");
    if (a.rows() == 0) throw DimensionMismatch("SymMatrix requires dim >= 1");
    const std::size_t n = a.rows();
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const double v = 0.5 * (a(i, j) + a(j, i));
            a(i, j) = v;
            a(j, i) = v;
        }
    }
    mat_ = std::move(a);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
    mat_ += other.mat_;
    return *this;
}

SymMatrix SymMatrix::shifted(double eps) const {
    Matrix m = mat_;
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += eps;
    return SymMatrix(std::move(m));
}

SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
    return SymMatrix(a.mat() - b.mat());
}

void add_outer(Matrix& s, std::span<const double> v, double weight) {
    if (s.rows() != v.size() || s.cols() != v.size())
        throw DimensionMismatch("add_outer: shape mismatch");
    for (std::size_t j = 0; j < v.size(); ++j) {
        const double wj = weight * v[j];
        if (wj == 0.0) continue;
        for (std::size_t i = 0; i < v.size(); ++i) s(i, j) += v[i] * wj;
    }
}

}  // namespace fisherkit
