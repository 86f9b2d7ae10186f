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
#include "fisherkit/kernel_fda.hpp"

#include <algorithm>

#include "fisherkit/eigen.hpp"

namespace fisherkit {

KernelClassStats class_kernel_stats(const LabeledDataset& ds, const KernelSpec& spec) {
    const std::size_t n = ds.size();
    const std::size_t c = ds.classes();

    KernelClassStats stats;
    stats.gram = gram(spec, ds.data, ds.data);
    stats.class_means = Matrix(n, c);
    stats.grand_mean.assign(n, 0.0);

    for (std::size_t j = 0; j < c; ++j) {
        const auto& cols = ds.class_index[j];
        Matrix block(n, cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
            block.set_col(k, stats.gram.col(cols[k]));

        auto mj = stats.class_means.col(j);
        for (std::size_t k = 0; k < cols.size(); ++k) {
            auto col = block.col(k);
            for (std::size_t i = 0; i < n; ++i) mj[i] += col[i];
        }
        const double nj = static_cast<double>(cols.size());
        for (std::size_t i = 0; i < n; ++i) mj[i] /= nj;
        stats.class_blocks.push_back(std::move(block));
    }

    for (std::size_t k = 0; k < n; ++k) {
        auto col = stats.gram.col(k);
        for (std::size_t i = 0; i < n; ++i) stats.grand_mean[i] += col[i];
    }
    for (double& v : stats.grand_mean) v /= static_cast<double>(n);

    // N = sum_j K_j H_j K_jᵀ. With C_j = K_j - m_j 1ᵀ and H_j idempotent,
    // each term is C_j C_jᵀ, which keeps the accumulation PSD.
    Matrix within(n, n);
    for (std::size_t j = 0; j < c; ++j) {
        const auto mj = stats.class_means.col(j);
        Matrix centered = stats.class_blocks[j];
        for (std::size_t k = 0; k < centered.cols(); ++k) {
            auto col = centered.col(k);
            for (std::size_t i = 0; i < n; ++i) col[i] -= mj[i];
        }
        within += centered * centered.transposed();
    }
    stats.within = SymMatrix(std::move(within));
    return stats;
}

SymMatrix kernel_between(const KernelClassStats& stats, const LabeledDataset& ds,
                         BetweenVariant variant) {
    const std::size_t n = ds.size();
    const std::size_t c = ds.classes();
    switch (variant) {
        case BetweenVariant::TwoClass: {
            if (c != 2)
                throw VariantClassMismatch(
                    "two-class kernel between-scatter needs exactly 2 classes, got " +
                    std::to_string(c));
            Matrix m(n, n);
            add_outer(m, subtract(stats.class_means.col(0), stats.class_means.col(1)));
            return SymMatrix(std::move(m));
        }
        case BetweenVariant::MultiUnweighted: {
            Matrix m(n, n);
            for (std::size_t j = 0; j < c; ++j)
                add_outer(m, subtract(stats.class_means.col(j), stats.grand_mean));
            return SymMatrix(std::move(m));
        }
        case BetweenVariant::MultiWeighted: {
            Matrix m(n, n);
            for (std::size_t j = 0; j < c; ++j)
                add_outer(m, subtract(stats.class_means.col(j), stats.grand_mean),
                          static_cast<double>(ds.class_size(j)));
            return SymMatrix(std::move(m));
        }
        case BetweenVariant::TotalMinusWithin:
            throw VariantClassMismatch(
                "total-minus-within has no kernel between-scatter; use the V2 criterion");
    }
    throw DataError("unknown between-scatter variant");
}

SymMatrix kernel_between(const LabeledDataset& ds, const KernelSpec& spec,
                         BetweenVariant variant) {
    return kernel_between(class_kernel_stats(ds, spec), ds, variant);
}

SymMatrix kernel_total(const KernelClassStats& stats) {
    const std::size_t n = stats.gram.rows();
    // G = (K - m* 1ᵀ)(K - m* 1ᵀ)ᵀ; g_k is column k of the Gram matrix.
    Matrix centered = stats.gram;
    for (std::size_t k = 0; k < n; ++k) {
        auto col = centered.col(k);
        for (std::size_t i = 0; i < n; ++i) col[i] -= stats.grand_mean[i];
    }
    return SymMatrix(centered * centered.transposed());
}

SymMatrix kernel_total(const LabeledDataset& ds, const KernelSpec& spec) {
    return kernel_total(class_kernel_stats(ds, spec));
}

KernelFit fit_kernel(const LabeledDataset& ds, const KernelSpec& spec,
                     CriterionVariant variant, BetweenVariant between_variant,
                     std::size_t p) {
    const std::size_t n = ds.size();
    const std::size_t c = ds.classes();
    if (c < 2) throw TooFewClasses("kernel fit needs at least 2 classes");
    spec.validate();

    const KernelClassStats stats = class_kernel_stats(ds, spec);
    const SymMatrix numerator = variant == CriterionVariant::V1
                                    ? kernel_between(stats, ds, between_variant)
                                    : kernel_total(stats);

    const std::size_t cap = std::min(c - 1, n);
    const bool clamped = p > cap;
    const std::size_t p_eff = p == 0 ? cap : std::min(p, cap);

    const GenEigDecomposition solved = gen_eig(numerator, stats.within, n);

    KernelFit fit;
    fit.spectrum = solved.values;
    fit.clamped = clamped;
    fit.model.variant = variant;
    fit.model.between = between_variant;
    fit.model.kernel = spec;
    fit.model.input_dim = ds.dim();
    fit.model.train_count = n;
    fit.model.subspace_dim = p_eff;
    fit.model.class_count = c;
    fit.model.theta = solved.vectors.leading_cols(p_eff);
    fit.model.eigenvalues.assign(solved.values.begin(),
                                 solved.values.begin() + static_cast<std::ptrdiff_t>(p_eff));
    fit.model.train_data = ds.data;
    fit.model.train_labels = ds.labels;
    fit.model.class_names = ds.class_names;
    fit.model.epsilon = solved.epsilon;
    return fit;
}

Matrix project_kernel(const KernelSubspaceModel& model, const Matrix& x_new) {
    if (x_new.rows() != model.input_dim)
        throw DimensionMismatch("project_kernel: model expects dimension " +
                                std::to_string(model.input_dim) + ", got " +
                                std::to_string(x_new.rows()));
    const Matrix z = model.standardization
                         ? apply_standardization(*model.standardization, x_new)
                         : x_new;
    return multiply_transposed(model.theta, gram(model.kernel, model.train_data, z));
}

}  // namespace fisherkit
