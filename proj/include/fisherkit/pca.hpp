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
#ifndef FISHERKIT_PCA_HPP
#define FISHERKIT_PCA_HPP

#include "fisherkit/fda.hpp"

namespace fisherkit {

/// PCA through the eigendecomposition of the (unscaled) total scatter.
/// The basis is orthonormal; eigenvalues are reported unscaled (sum of
/// squared centered projections). p = 0 keeps all d directions.
SubspaceFit fit_pca(const Matrix& data, std::size_t p);
SubspaceFit fit_pca(const LabeledDataset& ds, std::size_t p);

/// Pairwise angles in degrees between the basis columns of two models,
/// folded into [0, 90]. Entry (i, j) is the angle between column i of the
/// first basis and column j of the second.
Matrix compare_directions(const LinearSubspaceModel& a, const LinearSubspaceModel& b);

}  // namespace fisherkit

#endif  // FISHERKIT_PCA_HPP
