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
#include "fisherkit/fda.hpp"

#include <algorithm>
#include <cmath>

#include "fisherkit/eigen.hpp"

namespace fisherkit {

namespace {

std::vector<double> grand_mean(const Matrix& data) {
    std::vector<double> mean(data.rows(), 0.0);
    for (std::size_t j = 0; j < data.cols(); ++j) {
        auto col = data.col(j);
        for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += col[i];
    }
    for (double& m : mean) m /= static_cast<double>(data.cols());
    return mean;
}

SubspaceFit discriminant_fit(const LabeledDataset& ds, Method method, const SymMatrix& numerator,
                             const SymMatrix& within, std::size_t requested_p) {
    const std::size_t d = ds.dim();
    const std::size_t c = ds.classes();
    if (c < 2) throw TooFewClasses("discriminant fit needs at least 2 classes");

    const std::size_t cap = std::min(c - 1, d);
    const bool clamped = requested_p > cap;
    const std::size_t p = requested_p == 0 ? cap : std::min(requested_p, cap);

    const GenEigDecomposition solved = gen_eig(numerator, within, d);

    SubspaceFit fit;
    fit.spectrum = solved.values;
    fit.clamped = clamped;
    fit.model.method = method;
    fit.model.input_dim = d;
    fit.model.subspace_dim = p;
    fit.model.class_count = c;
    fit.model.basis = solved.vectors.leading_cols(p);
    fit.model.eigenvalues.assign(solved.values.begin(),
                                 solved.values.begin() + static_cast<std::ptrdiff_t>(p));
    fit.model.train_mean = grand_mean(ds.data);
    fit.model.epsilon = solved.epsilon;
    return fit;
}

// Input conventions shared by project/reconstruct/metric: standardize when
// the model carries parameters, center only for PCA.
Matrix to_model_space(const LinearSubspaceModel& model, const Matrix& x) {
    if (x.rows() != model.input_dim)
        throw DimensionMismatch("model expects dimension " + std::to_string(model.input_dim) +
                                ", got " + std::to_string(x.rows()));
    Matrix z = model.standardization ? apply_standardization(*model.standardization, x) : x;
    if (model.method == Method::Pca)
        for (std::size_t j = 0; j < z.cols(); ++j) {
            auto col = z.col(j);
            for (std::size_t i = 0; i < col.size(); ++i) col[i] -= model.train_mean[i];
        }
    return z;
}

Matrix from_model_space(const LinearSubspaceModel& model, Matrix z) {
    if (model.method == Method::Pca)
        for (std::size_t j = 0; j < z.cols(); ++j) {
            auto col = z.col(j);
            for (std::size_t i = 0; i < col.size(); ++i) col[i] += model.train_mean[i];
        }
    if (model.standardization)
        for (std::size_t j = 0; j < z.cols(); ++j) {
            auto col = z.col(j);
            for (std::size_t i = 0; i < col.size(); ++i)
                col[i] = col[i] * model.standardization->stddev[i] +
                         model.standardization->mean[i];
        }
    return z;
}

}  // namespace

SubspaceFit fit(const LabeledDataset& ds, CriterionVariant variant,
                BetweenVariant between_variant, std::size_t p) {
    const SymMatrix within = within_scatter(ds);
    if (variant == CriterionVariant::V1)
        return discriminant_fit(ds, Method::FdaV1, between_scatter(ds, between_variant),
                                within, p);
    return discriminant_fit(ds, Method::FdaV2, total_scatter(ds, /*scaled=*/false), within, p);
}

RobustFloor robust_floor(std::span<const double> eigenvalues_desc, double energy) {
    const std::size_t d = eigenvalues_desc.size();
    if (d == 0 || eigenvalues_desc.front() <= 0.0)
        throw DegenerateScatter("robust floor: leading eigenvalue is not positive");

    double total = 0.0;
    for (double v : eigenvalues_desc) total += v;

    RobustFloor floor{d, 0.0};
    double partial = 0.0;
    for (std::size_t m = 1; m <= d; ++m) {
        partial += eigenvalues_desc[m - 1];
        if (partial / total >= energy) {
            floor.d_prime = m;
            break;
        }
    }
    if (floor.d_prime == d) return floor;  // nothing to replace

    double tail = 0.0;
    for (std::size_t j = floor.d_prime; j < d; ++j) tail += eigenvalues_desc[j];
    floor.lambda_star = tail / static_cast<double>(d - floor.d_prime);
    // An exactly-zero tail shows up as rounding noise around zero; a mean at
    // that level would leave the floored matrix singular.
    if (floor.lambda_star <= 1e-12 * eigenvalues_desc.front())
        floor.lambda_star = 1e-8 * eigenvalues_desc.front();
    return floor;
}

SymMatrix floored_within(const SymMatrix& within, double energy) {
    const EigDecomposition eig = sym_eig(within);
    const RobustFloor floor = robust_floor(eig.values, energy);
    if (floor.d_prime == within.dim()) return within;

    Matrix rebuilt(within.dim(), within.dim());
    for (std::size_t k = 0; k < within.dim(); ++k) {
        const double value = k < floor.d_prime ? eig.values[k] : floor.lambda_star;
        add_outer(rebuilt, eig.vectors.col(k), value);
    }
    return SymMatrix(std::move(rebuilt));
}

SubspaceFit robust_fit(const LabeledDataset& ds, double energy,
                       BetweenVariant between_variant, std::size_t p) {
    const SymMatrix floored = floored_within(within_scatter(ds), energy);
    return discriminant_fit(ds, Method::RobustFda, between_scatter(ds, between_variant),
                            floored, p);
}

Matrix project(const LinearSubspaceModel& model, const Matrix& x) {
    return multiply_transposed(model.basis, to_model_space(model, x));
}

Matrix reconstruct(const LinearSubspaceModel& model, const Matrix& x,
                   ReconstructionMode mode) {
    const Matrix z = to_model_space(model, x);
    Matrix coeffs = multiply_transposed(model.basis, z);  // Uᵀ z
    if (mode == ReconstructionMode::LeastSquares) {
        SymMatrix gram(multiply_transposed(model.basis, model.basis));
        Matrix solved(coeffs.rows(), coeffs.cols());
        try {
            for (std::size_t j = 0; j < coeffs.cols(); ++j)
                solved.set_col(j, solve_spd(gram, coeffs.col(j)));
        } catch (const NotPositiveDefinite&) {
            throw RankDeficientBasis("reconstruct: UᵀU is singular");
        }
        coeffs = std::move(solved);
    }
    return from_model_space(model, model.basis * coeffs);
}

std::vector<double> lda_direction(const LabeledDataset& ds) {
    if (ds.classes() < 2) throw TooFewClasses("lda direction needs 2 classes");
    if (ds.classes() > 2)
        throw TooManyClasses("lda direction is a two-class construction, got " +
                             std::to_string(ds.classes()) + " classes");

    const ClassMeans means = class_means(ds);
    // Pooled covariance: per-class scatters normalized by class size.
    Matrix pooled(ds.dim(), ds.dim());
    for (std::size_t j = 0; j < 2; ++j) {
        Matrix sj(ds.dim(), ds.dim());
        for (std::size_t col : ds.class_index[j])
            add_outer(sj, subtract(ds.data.col(col), means.class_means.col(j)));
        sj *= 1.0 / static_cast<double>(ds.class_size(j));
        pooled += sj;
    }
    const SymMatrix sigma(std::move(pooled));
    const std::vector<double> diff =
        subtract(means.class_means.col(1), means.class_means.col(0));

    try {
        return solve_spd(sigma, diff);
    } catch (const NotPositiveDefinite&) {
        // Same regularization ladder as the generalized eigensolver.
        const double base = 1e-8 * sigma.trace() / static_cast<double>(sigma.dim());
        const double cap = 1e-2 * sigma.trace() / static_cast<double>(sigma.dim());
        for (double eps = base; eps > 0.0 && eps <= cap; eps *= 2.0) {
            try {
                return solve_spd(sigma.shifted(eps), diff);
            } catch (const NotPositiveDefinite&) {
                continue;
            }
        }
        throw IrreparablySingular("lda direction: pooled covariance cannot be factorized");
    }
}

MetricView metric_view(const LinearSubspaceModel& model) {
    return {SymMatrix(model.basis * model.basis.transposed())};
}

double metric_distance(const LinearSubspaceModel& model, std::span<const double> xi,
                       std::span<const double> xj) {
    if (xi.size() != model.input_dim || xj.size() != model.input_dim)
        throw DimensionMismatch("metric_distance: vector length mismatch");
    Matrix pair(model.input_dim, 2);
    pair.set_col(0, xi);
    pair.set_col(1, xj);
    const Matrix z = to_model_space(model, pair);
    const std::vector<double> delta = subtract(z.col(0), z.col(1));
    const MetricView view = metric_view(model);
    return dot(delta, view.metric.mat() * std::span<const double>(delta));
}

const char* to_string(Method m) {
    switch (m) {
        case Method::FdaV1: return "fda";
        case Method::FdaV2: return "fda2";
        case Method::RobustFda: return "rfda";
        case Method::Pca: return "pca";
    }
    return "?";
}

Method method_from_string(const std::string& s) {
    if (s == "fda") return Method::FdaV1;
    if (s == "fda2") return Method::FdaV2;
    if (s == "rfda") return Method::RobustFda;
    if (s == "pca") return Method::Pca;
    throw ConfigError("unknown method '" + s + "'");
}

}  // namespace fisherkit
