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
#include "fisherkit/pca.hpp"

#include <algorithm>
#include <cmath>

#include "fisherkit/eigen.hpp"

namespace fisherkit {

SubspaceFit fit_pca(const Matrix& data, std::size_t p) {
    const std::size_t d = data.rows();
    const std::size_t n = data.cols();
    if (n < 2) throw DataError("pca: need at least 2 samples");

    std::vector<double> mean(d, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        auto col = data.col(j);
        for (std::size_t i = 0; i < d; ++i) mean[i] += col[i];
    }
    for (double& m : mean) m /= static_cast<double>(n);

    Matrix scatter(d, d);
    for (std::size_t j = 0; j < n; ++j) add_outer(scatter, subtract(data.col(j), mean));
    const SymMatrix total(std::move(scatter));
    if (total.frobenius_norm() == 0.0)
        throw DegenerateData("pca: total scatter is zero (all samples identical)");

    const EigDecomposition eig = sym_eig(total);
    const std::size_t p_eff = p == 0 ? d : std::min(p, d);

    SubspaceFit fit;
    fit.spectrum = eig.values;
    fit.clamped = p > d;
    fit.model.method = Method::Pca;
    fit.model.input_dim = d;
    fit.model.subspace_dim = p_eff;
    fit.model.class_count = 0;
    fit.model.basis = eig.vectors.leading_cols(p_eff);
    fit.model.eigenvalues.assign(eig.values.begin(),
                                 eig.values.begin() + static_cast<std::ptrdiff_t>(p_eff));
    fit.model.train_mean = std::move(mean);
    return fit;
}

SubspaceFit fit_pca(const LabeledDataset& ds, std::size_t p) {
    SubspaceFit fit = fit_pca(ds.data, p);
    fit.model.class_count = ds.classes();
    return fit;
}

Matrix compare_directions(const LinearSubspaceModel& a, const LinearSubspaceModel& b) {
    if (a.input_dim != b.input_dim)
        throw DimensionMismatch("compare_directions: models live in different dimensions");
    Matrix angles(a.subspace_dim, b.subspace_dim);
    constexpr double kRadToDeg = 57.295779513082320877;
    for (std::size_t i = 0; i < a.subspace_dim; ++i)
        for (std::size_t j = 0; j < b.subspace_dim; ++j)
            angles(i, j) = std::acos(abs_cosine(a.basis.col(i), b.basis.col(j))) * kRadToDeg;
    return angles;
}

}  // namespace fisherkit
