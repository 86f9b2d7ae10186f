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
#ifndef FISHERKIT_EIGEN_HPP
#define FISHERKIT_EIGEN_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "fisherkit/matrix.hpp"

namespace fisherkit {

/// Full eigendecomposition of a symmetric matrix. Eigenvalues are sorted
/// descending; column k of `vectors` pairs with `values[k]`. Vectors are
/// orthonormal and sign-normalized: the entry of largest absolute value in
/// each column is non-negative (ties resolved by lowest index).
struct EigDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

/// Top-p solution of A v = lambda B v. Vectors are B-normalized
/// (vᵀ(B + epsilon I)v = 1) and sign-normalized like EigDecomposition.
/// `epsilon` records the diagonal shift the solver actually applied to B
/// (0 when B was positive definite as given).
struct GenEigDecomposition {
    std::vector<double> values;
    Matrix vectors;
    double epsilon = 0.0;
};

/// Iteration controls for the Jacobi sweep. The defaults terminate when the
/// off-diagonal Frobenius mass drops below off_diag_rel_tol * ||A||_F, and
/// give up (NoConvergence) after max_sweeps_per_dim * dim sweeps.
struct EigOptions {
    double off_diag_rel_tol = 1e-14;
    std::size_t max_sweeps_per_dim = 64;
};

/// Lower-triangular C with B = C Cᵀ. Throws NotPositiveDefinite when a pivot
/// falls at or below dim * machine-eps * max-diagonal, signalling the caller
/// to regularize.
Matrix cholesky(const SymMatrix& b);

/// Cyclic Jacobi eigendecomposition of a symmetric matrix.
EigDecomposition sym_eig(const SymMatrix& a, const EigOptions& opts = {});

/// Symmetric-definite generalized eigensolver. When cholesky(B) succeeds the
/// problem is reduced to sym_eig(C⁻¹ A C⁻ᵀ) and back-transformed as
/// v = C⁻ᵀ w. Otherwise B is shifted by eps * I with
/// eps = 1e-8 * trace(B)/dim, doubling up to 1e-2 * trace(B)/dim before
/// giving up with IrreparablySingular.
GenEigDecomposition gen_eig(const SymMatrix& a, const SymMatrix& b, std::size_t p,
                            const EigOptions& opts = {});

/// xᵀAx / xᵀx.
double rayleigh(const SymMatrix& a, std::span<const double> x);

/// xᵀAx / xᵀBx.
double gen_rayleigh(const SymMatrix& a, const SymMatrix& b, std::span<const double> x);

// Triangular solves with the Cholesky factor, exposed for reuse.
std::vector<double> solve_lower(const Matrix& l, std::span<const double> b);
std::vector<double> solve_lower_transposed(const Matrix& l, std::span<const double> b);
/// Solve the SPD system B x = rhs through its Cholesky factorization.
std::vector<double> solve_spd(const SymMatrix& b, std::span<const double> rhs);

/// Flip column signs in place so the largest-|entry| component of each
/// column is non-negative (ties decided by the lowest index).
void sign_normalize_columns(Matrix& m);

}  // namespace fisherkit

#endif  // FISHERKIT_EIGEN_HPP
