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
#include "fisherkit/scatters.hpp"

namespace fisherkit {

ClassMeans class_means(const LabeledDataset& ds) {
    const std::size_t d = ds.dim();
    const std::size_t c = ds.classes();
    ClassMeans out;
    out.class_means = Matrix(d, c);
    out.total_mean.assign(d, 0.0);

    for (std::size_t j = 0; j < c; ++j) {
        auto mean = out.class_means.col(j);
        for (std::size_t col : ds.class_index[j]) {
            auto x = ds.data.col(col);
            for (std::size_t i = 0; i < d; ++i) mean[i] += x[i];
        }
        const double nj = static_cast<double>(ds.class_size(j));
        for (std::size_t i = 0; i < d; ++i) mean[i] /= nj;
        // grand mean as the class-size weighted mean of class means
        for (std::size_t i = 0; i < d; ++i) out.total_mean[i] += nj * mean[i];
    }
    for (std::size_t i = 0; i < d; ++i)
        out.total_mean[i] /= static_cast<double>(ds.size());
    return out;
}

SymMatrix within_scatter(const LabeledDataset& ds) {
    const std::size_t d = ds.dim();
    const ClassMeans means = class_means(ds);
    Matrix s(d, d);
    for (std::size_t j = 0; j < ds.classes(); ++j) {
        const auto mean = means.class_means.col(j);
        for (std::size_t col : ds.class_index[j])
            add_outer(s, subtract(ds.data.col(col), mean));
    }
    return SymMatrix(std::move(s));
}

SymMatrix between_scatter(const LabeledDataset& ds, BetweenVariant variant) {
    const std::size_t d = ds.dim();
    const std::size_t c = ds.classes();
    const ClassMeans means = class_means(ds);

    switch (variant) {
        case BetweenVariant::TwoClass: {
            if (c != 2)
                throw VariantClassMismatch("two-class between-scatter needs exactly 2 classes, got " +
                                           std::to_string(c));
            Matrix s(d, d);
            add_outer(s, subtract(means.class_means.col(0), means.class_means.col(1)));
            return SymMatrix(std::move(s));
        }
        case BetweenVariant::MultiUnweighted: {
            Matrix s(d, d);
            for (std::size_t j = 0; j < c; ++j)
                add_outer(s, subtract(means.class_means.col(j), means.total_mean));
            return SymMatrix(std::move(s));
        }
        case BetweenVariant::MultiWeighted: {
            Matrix s(d, d);
            for (std::size_t j = 0; j < c; ++j)
                add_outer(s, subtract(means.class_means.col(j), means.total_mean),
                          static_cast<double>(ds.class_size(j)));
            return SymMatrix(std::move(s));
        }
        case BetweenVariant::TotalMinusWithin:
            return total_scatter(ds, /*scaled=*/false) - within_scatter(ds);
    }
    throw DataError("unknown between-scatter variant");
}

SymMatrix total_scatter(const LabeledDataset& ds, bool scaled) {
    const std::size_t d = ds.dim();
    const ClassMeans means = class_means(ds);
    Matrix s(d, d);
    for (std::size_t col = 0; col < ds.size(); ++col)
        add_outer(s, subtract(ds.data.col(col), means.total_mean));
    if (scaled) s *= 1.0 / static_cast<double>(ds.size());
    return SymMatrix(std::move(s));
}

std::size_t effective_rank(std::span<const double> values, double rel_tol) {
    if (values.empty()) return 0;
    const double max = values.front();
    if (max <= 0.0) return 0;
    std::size_t count = 0;
    for (double v : values)
        if (v > rel_tol * max) ++count;
    return count;
}

ScatterSet compute_scatters(const LabeledDataset& ds, BetweenVariant variant) {
    ClassMeans means = class_means(ds);
    ScatterSet set;
    set.within = within_scatter(ds);
    set.between = between_scatter(ds, variant);
    set.total = total_scatter(ds, /*scaled=*/false);
    set.class_means = std::move(means.class_means);
    set.total_mean = std::move(means.total_mean);
    set.variant = variant;
    return set;
}

const char* to_string(BetweenVariant v) {
    switch (v) {
        case BetweenVariant::TwoClass: return "two-class";
        case BetweenVariant::MultiUnweighted: return "unweighted";
        case BetweenVariant::MultiWeighted: return "weighted";
        case BetweenVariant::TotalMinusWithin: return "total-minus-within";
    }
    return "?";
}

BetweenVariant between_variant_from_string(const std::string& s) {
    if (s == "two-class") return BetweenVariant::TwoClass;
    if (s == "unweighted") return BetweenVariant::MultiUnweighted;
    if (s == "weighted") return BetweenVariant::MultiWeighted;
    if (s == "total-minus-within") return BetweenVariant::TotalMinusWithin;
    throw ConfigError("unknown between-scatter variant '" + s + "'");
}

}  // namespace fisherkit
