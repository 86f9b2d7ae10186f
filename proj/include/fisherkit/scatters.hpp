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
#ifndef FISHERKIT_SCATTERS_HPP
#define FISHERKIT_SCATTERS_HPP

#include <span>
#include <vector>

#include "fisherkit/dataset.hpp"
#include "fisherkit/matrix.hpp"

namespace fisherkit {

/// The four between-scatter constructions. TwoClass is the rank-1 outer
/// product of the mean difference; the multi-class forms spread the class
/// means around the grand mean, optionally weighted by class size.
/// TotalMinusWithin derives the between-scatter from the identity
/// S_T(unscaled) = S_W + S_B(weighted), which only holds for that pairing.
enum class BetweenVariant { TwoClass, MultiUnweighted, MultiWeighted, TotalMinusWithin };

struct ClassMeans {
    Matrix class_means;             // d x c, column j is the mean of class j
    std::vector<double> total_mean; // grand mean = (sum_j n_j mu_j) / n
};

ClassMeans class_means(const LabeledDataset& ds);

/// S_W = sum_j sum_i (x - mu_j)(x - mu_j)ᵀ, accumulated per class in
/// class-index order.
SymMatrix within_scatter(const LabeledDataset& ds);

SymMatrix between_scatter(const LabeledDataset& ds, BetweenVariant variant);

/// Scatter of all samples around the grand mean; scaled divides by n.
SymMatrix total_scatter(const LabeledDataset& ds, bool scaled);

/// Count of eigenvalues above rel_tol * max(values); 0 when all are <= 0.
/// Input must be sorted descending.
std::size_t effective_rank(std::span<const double> values, double rel_tol = 1e-8);

/// All scatter matrices of a dataset under one between-variant.
/// `total` is unscaled.
struct ScatterSet {
    SymMatrix within;
    SymMatrix between;
    SymMatrix total;
    Matrix class_means;
    std::vector<double> total_mean;
    BetweenVariant variant;
};

ScatterSet compute_scatters(const LabeledDataset& ds, BetweenVariant variant);

const char* to_string(BetweenVariant v);
BetweenVariant between_variant_from_string(const std::string& s);

}  // namespace fisherkit

#endif  // FISHERKIT_SCATTERS_HPP
