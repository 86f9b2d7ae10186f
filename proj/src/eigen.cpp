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
#include "fisherkit/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace fisherkit {

namespace {

double off_diagonal_norm(const Matrix& a) {
    double sum = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (i != j) sum += a(i, j) * a(i, j);
    return std::sqrt(sum);
}

void sort_descending(std::vector<double>& values, Matrix& vectors) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<double> sorted_values(values.size());
    Matrix sorted_vectors(vectors.rows(), vectors.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
        sorted_values[k] = values[order[k]];
        sorted_vectors.set_col(k, vectors.col(order[k]));
    }
    values = std::move(sorted_values);
    vectors = std::move(sorted_vectors);
}

}  // namespace

void sign_normalize_columns(Matrix& m) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        auto c = m.col(j);
        std::size_t lead = 0;
        for (std::size_t i = 1; i < c.size(); ++i)
            if (std::fabs(c[i]) > std::fabs(c[lead])) lead = i;
        if (c[lead] < 0.0)
            for (double& x : c) x = -x;
    }
}

Matrix cholesky(const SymMatrix& b) {
    const std::size_t n = b.dim();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::fabs(b(i, i)));
    const double pivot_tol =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_diag;

    Matrix c(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        double pivot = b(j, j);
        for (std::size_t k = 0; k < j; ++k) pivot -= c(j, k) * c(j, k);
        if (pivot <= pivot_tol)
            throw NotPositiveDefinite("cholesky: pivot " + std::to_string(pivot) +
                                      " at index " + std::to_string(j));
        c(j, j) = std::sqrt(pivot);
        for (std::size_t i = j + 1; i < n; ++i) {
            double s = b(i, j);
            for (std::size_t k = 0; k < j; ++k) s -= c(i, k) * c(j, k);
            c(i, j) = s / c(j, j);
        }
    }
    return c;
}

EigDecomposition sym_eig(const SymMatrix& sym, const EigOptions& opts) {
    const std::size_t n = sym.dim();
    Matrix a = sym.mat();
    Matrix v = Matrix::identity(n);

    const double norm = a.frobenius_norm();
    const double tol = opts.off_diag_rel_tol * norm;
    const std::size_t max_sweeps = opts.max_sweeps_per_dim * n;

    std::size_t sweeps = 0;
    while (off_diagonal_norm(a) > tol) {
        if (++sweeps > max_sweeps)
            throw NoConvergence("sym_eig: no convergence after " + std::to_string(max_sweeps) +
                                " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a(p, q);
                if (apq == 0.0) continue;
                // Classic Jacobi rotation that annihilates a(p, q).
                const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p);
                    const double akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k);
                    const double aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v(k, p);
                    const double vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
        }
    }

    EigDecomposition result;
    result.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i);
    result.vectors = std::move(v);
    sort_descending(result.values, result.vectors);
    sign_normalize_columns(result.vectors);
    return result;
}

std::vector<double> solve_lower(const Matrix& l, std::span<const double> b) {
    const std::size_t n = l.rows();
    if (b.size() != n) throw DimensionMismatch("solve_lower: length mismatch");
    std::vector<double> x(b.begin(), b.end());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < i; ++k) x[i] -= l(i, k) * x[k];
        x[i] /= l(i, i);
    }
    return x;
}

std::vector<double> solve_lower_transposed(const Matrix& l, std::span<const double> b) {
    const std::size_t n = l.rows();
    if (b.size() != n) throw DimensionMismatch("solve_lower_transposed: length mismatch");
    std::vector<double> x(b.begin(), b.end());
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t k = ii + 1; k < n; ++k) x[ii] -= l(k, ii) * x[k];
        x[ii] /= l(ii, ii);
    }
    return x;
}

std::vector<double> solve_spd(const SymMatrix& b, std::span<const double> rhs) {
    const Matrix c = cholesky(b);
    return solve_lower_transposed(c, solve_lower(c, rhs));
}

namespace {

GenEigDecomposition solve_reduced(const SymMatrix& a, const SymMatrix& b_shifted,
                                  double epsilon, std::size_t p, const EigOptions& opts) {
    const std::size_t n = a.dim();
    const Matrix c = cholesky(b_shifted);

    // D = C⁻¹ A C⁻ᵀ, assembled column by column through triangular solves.
    Matrix y(n, n);
    for (std::size_t j = 0; j < n; ++j) y.set_col(j, solve_lower(c, a.mat().col(j)));
    Matrix yt = y.transposed();
    Matrix w(n, n);
    for (std::size_t j = 0; j < n; ++j) w.set_col(j, solve_lower(c, yt.col(j)));
    const EigDecomposition reduced = sym_eig(SymMatrix(w.transposed()), opts);

    GenEigDecomposition result;
    result.epsilon = epsilon;
    result.values.assign(reduced.values.begin(),
                         reduced.values.begin() + static_cast<std::ptrdiff_t>(p));
    result.vectors = Matrix(n, p);
    for (std::size_t k = 0; k < p; ++k) {
        std::vector<double> v = solve_lower_transposed(c, reduced.vectors.col(k));
        // Back-transformed vectors satisfy vᵀ B' v = 1 in exact arithmetic;
        // renormalize to pin the invariant down to rounding error.
        const double quad = dot(v, b_shifted.mat() * std::span<const double>(v));
        if (quad > 0.0) scale(v, 1.0 / std::sqrt(quad));
        result.vectors.set_col(k, v);
    }
    sign_normalize_columns(result.vectors);
    return result;
}

}  // namespace

GenEigDecomposition gen_eig(const SymMatrix& a, const SymMatrix& b, std::size_t p,
                            const EigOptions& opts) {
    if (a.dim() != b.dim()) throw DimensionMismatch("gen_eig: A and B dimensions differ");
    if (p > a.dim()) throw DimensionMismatch("gen_eig: p exceeds dimension");

    try {
        return solve_reduced(a, b, 0.0, p, opts);
    } catch (const NotPositiveDefinite&) {
        // fall through to the regularization ladder
    }

    const double base = 1e-8 * b.trace() / static_cast<double>(b.dim());
    const double cap = 1e-2 * b.trace() / static_cast<double>(b.dim());
    for (double eps = base; eps > 0.0 && eps <= cap; eps *= 2.0) {
        try {
            return solve_reduced(a, b.shifted(eps), eps, p, opts);
        } catch (const NotPositiveDefinite&) {
            continue;
        }
    }
    throw IrreparablySingular("gen_eig: B not positive definite after regularization ladder");
}

double rayleigh(const SymMatrix& a, std::span<const double> x) {
    if (x.size() != a.dim()) throw DimensionMismatch("rayleigh: vector length mismatch");
    const double denom = dot(x, x);
    if (denom == 0.0) throw ZeroVector("rayleigh: zero vector");
    return dot(x, a.mat() * x) / denom;
}

double gen_rayleigh(const SymMatrix& a, const SymMatrix& b, std::span<const double> x) {
    if (x.size() != a.dim() || x.size() != b.dim())
        throw DimensionMismatch("gen_rayleigh: vector length mismatch");
    if (dot(x, x) == 0.0) throw ZeroVector("gen_rayleigh: zero vector");
    const double denom = dot(x, b.mat() * x);
    if (std::fabs(denom) < 1e-300)
        throw DegenerateDenominator("gen_rayleigh: xᵀBx vanishes");
    return dot(x, a.mat() * x) / denom;
}

}  // namespace fisherkit
