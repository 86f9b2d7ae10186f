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
#ifndef FISHERKIT_FDA_HPP
#define FISHERKIT_FDA_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fisherkit/dataset.hpp"
#include "fisherkit/matrix.hpp"
#include "fisherkit/scatters.hpp"

namespace fisherkit {

enum class Method { FdaV1, FdaV2, RobustFda, Pca };

/// Which trace-ratio criterion a discriminant fit maximizes: V1 pairs the
/// between-scatter with the within-scatter, V2 the (unscaled) total scatter
/// with the within-scatter. For the same direction the V2 quotient exceeds
/// the V1 quotient by exactly 1 under the weighted/unscaled pairing.
enum class CriterionVariant { V1, V2 };

enum class ReconstructionMode { Paper, LeastSquares };

/// A fitted linear subspace. For discriminant methods the basis columns are
/// S_W-orthonormal generalized eigenvectors (uᵀ S_W u = 1), not unit
/// vectors; for PCA they are orthonormal. Projection subtracts train_mean
/// only for PCA; discriminant projections use the (standardized) inputs as
/// given, since scatters are translation invariant.
struct LinearSubspaceModel {
    Method method = Method::FdaV1;
    std::size_t input_dim = 0;     // d
    std::size_t subspace_dim = 0;  // p
    std::size_t class_count = 0;   // c (0 for PCA fit from a raw matrix)
    Matrix basis;                  // d x p
    std::vector<double> eigenvalues;  // length p, descending
    std::vector<double> train_mean;   // length d
    std::optional<StandardizationParams> standardization;
    double epsilon = 0.0;  // diagonal shift the solver applied to the B matrix
};

/// Fit outcome: the model plus the full generalized spectrum and whether the
/// requested dimension was clamped to c-1.
struct SubspaceFit {
    LinearSubspaceModel model;
    std::vector<double> spectrum;
    bool clamped = false;
};

/// Fit a Fisher subspace. Requested p above c-1 is clamped (the surplus
/// eigenvectors carry no class separation); p = 0 requests the full c-1.
SubspaceFit fit(const LabeledDataset& ds, CriterionVariant variant,
                BetweenVariant between_variant, std::size_t p);

/// d' cut and replacement value for the trailing within-scatter spectrum.
struct RobustFloor {
    std::size_t d_prime;
    double lambda_star;  // 0 when d_prime == d (nothing to floor)
};

/// The energy rule: d' is the smallest m whose leading eigenvalue mass
/// reaches `energy` of the total; lambda_star is the mean of the trailing
/// eigenvalues. A non-positive lambda_star is replaced by 1e-8 * lambda_1.
RobustFloor robust_floor(std::span<const double> eigenvalues_desc, double energy);

/// S_W with its trailing eigenvalues floored to lambda_star.
SymMatrix floored_within(const SymMatrix& within, double energy);

/// FDA on the floored within-scatter; cures (near-)singular S_W.
SubspaceFit robust_fit(const LabeledDataset& ds, double energy,
                       BetweenVariant between_variant, std::size_t p);

/// Uᵀ X (with the model's input conventions applied). X is d x m.
Matrix project(const LinearSubspaceModel& model, const Matrix& x);

/// Map back to input space: Paper applies U Uᵀ, LeastSquares the projector
/// U (UᵀU)⁻¹ Uᵀ. The two coincide for orthonormal bases (PCA); discriminant
/// bases are S_W-orthonormal, so LeastSquares is the faithful projector.
Matrix reconstruct(const LinearSubspaceModel& model, const Matrix& x,
                   ReconstructionMode mode);

/// Two-class discriminant direction (pooled_covariance)⁻¹ (mu_2 - mu_1),
/// collinear with the one-dimensional Fisher direction.
std::vector<double> lda_direction(const LabeledDataset& ds);

/// The subspace as a distance metric: A = U Uᵀ.
struct MetricView {
    SymMatrix metric;
};

MetricView metric_view(const LinearSubspaceModel& model);

/// (x_i - x_j)ᵀ U Uᵀ (x_i - x_j); equals the squared distance between the
/// two projections.
double metric_distance(const LinearSubspaceModel& model, std::span<const double> xi,
                       std::span<const double> xj);

const char* to_string(Method m);
Method method_from_string(const std::string& s);

}  // namespace fisherkit

#endif  // FISHERKIT_FDA_HPP
