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
#ifndef FISHERKIT_MATRIX_HPP
#define FISHERKIT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fisherkit/errors.hpp"

namespace fisherkit {

/// Dense real matrix, column-major storage. Columns are the natural unit
/// throughout the toolkit (samples are columns of a d-by-n data matrix).
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return data_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i + j * rows_]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i + j * rows_]; }

    std::span<double> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
    std::span<const double> col(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }
    std::vector<double> col_copy(std::size_t j) const;
    void set_col(std::size_t j, std::span<const double> v);

    Matrix transposed() const;
    /// Columns [0, k) as a new matrix.
    Matrix leading_cols(std::size_t k) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(double s);

    double frobenius_norm() const;
    double max_abs() const;
    double trace() const;

    bool same_shape(const Matrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_;
    }

    const std::vector<double>& data() const { return data_; }
    std::vector<double>& data() { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(double s, Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<double> operator*(const Matrix& a, std::span<const double> x);

/// aᵀ · x without materializing the transpose.
std::vector<double> multiply_transposed(const Matrix& a, std::span<const double> x);
Matrix multiply_transposed(const Matrix& a, const Matrix& b);

// Small vector helpers shared across the toolkit.
double dot(std::span<const double> a, std::span<const double> b);
double norm2(std::span<const double> a);
double squared_distance(std::span<const double> a, std::span<const double> b);
void scale(std::span<double> a, double s);
std::vector<double> subtract(std::span<const double> a, std::span<const double> b);
/// Absolute cosine of the angle between two vectors.
double abs_cosine(std::span<const double> a, std::span<const double> b);
/// Rescale every column to unit l2 norm (zero columns left untouched).
Matrix unit_columns(Matrix m);

/// Symmetric matrix. Construction symmetrizes as (A + Aᵀ)/2 so that
/// accumulated rounding asymmetry never reaches the solvers.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(Matrix a);
    static SymMatrix identity(std::size_t n) { return SymMatrix(Matrix::identity(n)); }

    std::size_t dim() const { return mat_.rows(); }
    double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    const Matrix& mat() const { return mat_; }

    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double trace() const { return mat_.trace(); }

    SymMatrix& operator+=(const SymMatrix& other);
    /// This + eps on the diagonal.
    SymMatrix shifted(double eps) const;

private:
    Matrix mat_;
};

SymMatrix operator+(SymMatrix a, const SymMatrix& b);
SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);

/// S += weight · v vᵀ, accumulated in column-major order.
void add_outer(Matrix& s, std::span<const double> v, double weight = 1.0);

}  // namespace fisherkit

#endif  // FISHERKIT_MATRIX_HPP
