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
#ifndef FISHERKIT_KERNEL_FDA_HPP
#define FISHERKIT_KERNEL_FDA_HPP

#include <optional>
#include <string>
#include <vector>

#include "fisherkit/dataset.hpp"
#include "fisherkit/fda.hpp"
#include "fisherkit/kernel.hpp"
#include "fisherkit/matrix.hpp"
#include "fisherkit/scatters.hpp"

namespace fisherkit {

/// Per-class kernel statistics. All blocks are selections of one fully
/// computed n-by-n Gram matrix, so identical sample pairs yield bit-identical
/// entries everywhere they appear.
///   class_means column j  the n-vector m_j of row means over class-j columns
///   grand_mean            m*, the row means over all columns
///   class_blocks[j]       K_j, the n-by-n_j Gram columns of class j
///   within                N = sum_j K_j H_j K_jᵀ with H_j = I - (1/n_j) 1 1ᵀ
struct KernelClassStats {
    Matrix gram;
    Matrix class_means;
    std::vector<double> grand_mean;
    std::vector<Matrix> class_blocks;
    SymMatrix within;
};

KernelClassStats class_kernel_stats(const LabeledDataset& ds, const KernelSpec& spec);

/// Kernel between-scatter M. Variants mirror the linear case: TwoClass is
/// (m_1 - m_2)(m_1 - m_2)ᵀ, the multi-class forms spread the m_j around m*.
SymMatrix kernel_between(const KernelClassStats& stats, const LabeledDataset& ds,
                         BetweenVariant variant);
SymMatrix kernel_between(const LabeledDataset& ds, const KernelSpec& spec,
                         BetweenVariant variant);

/// Kernel total-scatter G = sum_k (g_k - m*)(g_k - m*)ᵀ where g_k is column
/// k of the Gram matrix.
SymMatrix kernel_total(const KernelClassStats& stats);
SymMatrix kernel_total(const LabeledDataset& ds, const KernelSpec& spec);

/// A fitted kernel Fisher subspace. Directions live in coefficient space:
/// column k of theta combines the mapped training samples. The training
/// inputs are kept because projection needs kernel evaluations against them.
/// There is deliberately no reconstruction operation for kernel models: the
/// mapped data is never materialized, so no way back to input space exists.
struct KernelSubspaceModel {
    CriterionVariant variant = CriterionVariant::V1;
    BetweenVariant between = BetweenVariant::MultiWeighted;
    KernelSpec kernel;
    std::size_t input_dim = 0;     // d
    std::size_t train_count = 0;   // n
    std::size_t subspace_dim = 0;  // p
    std::size_t class_count = 0;   // c
    Matrix theta;                  // n x p
    std::vector<double> eigenvalues;
    Matrix train_data;             // d x n, exactly as fitted
    std::vector<int> train_labels;
    std::vector<std::string> class_names;
    std::optional<StandardizationParams> standardization;
    double epsilon = 0.0;
};

struct KernelFit {
    KernelSubspaceModel model;
    std::vector<double> spectrum;
    bool clamped = false;
};

/// Kernel FDA: generalized eigenproblem (M, N) for V1 or (G, N) for V2,
/// solved with the shared regularization ladder. p clamps to c-1.
KernelFit fit_kernel(const LabeledDataset& ds, const KernelSpec& spec,
                     CriterionVariant variant, BetweenVariant between_variant,
                     std::size_t p);

/// thetaᵀ K(train, X_new); columns are the p-dimensional projections.
Matrix project_kernel(const KernelSubspaceModel& model, const Matrix& x_new);

}  // namespace fisherkit

#endif  // FISHERKIT_KERNEL_FDA_HPP
