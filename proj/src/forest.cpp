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
#include "fisherkit/forest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fisherkit/scatters.hpp"

namespace fisherkit {

FeatureView make_feature_view(std::vector<std::size_t> features, std::size_t dim) {
    if (features.empty()) throw DataError("feature view must not be empty");
    std::sort(features.begin(), features.end());
    for (std::size_t k = 0; k + 1 < features.size(); ++k)
        if (features[k] == features[k + 1])
            throw DataError("feature view has a duplicate index " +
                            std::to_string(features[k]));
    if (features.back() >= dim)
        throw DataError("feature index " + std::to_string(features.back()) +
                        " out of range for dimension " + std::to_string(dim));
    return {std::move(features)};
}

std::vector<FeatureView> parse_views(const std::string& text, std::size_t dim) {
    std::vector<FeatureView> views;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        std::vector<std::size_t> indices;
        std::stringstream items(group);
        std::string item;
        while (std::getline(items, item, ',')) {
            if (item.empty()) continue;
            try {
                indices.push_back(std::stoul(item));
            } catch (const std::exception&) {
                throw ConfigError("bad feature index '" + item + "' in views");
            }
        }
        views.push_back(make_feature_view(std::move(indices), dim));
    }
    if (views.empty()) throw ConfigError("no views given");
    return views;
}

namespace {

LabeledDataset restrict_features(const LabeledDataset& ds, const FeatureView& view) {
    Matrix data(view.features.size(), ds.size());
    for (std::size_t j = 0; j < ds.size(); ++j)
        for (std::size_t k = 0; k < view.features.size(); ++k)
            data(k, j) = ds.data(view.features[k], j);
    return make_dataset(std::move(data), ds.labels, ds.class_names);
}

std::vector<double> restrict_vector(std::span<const double> x, const FeatureView& view) {
    std::vector<double> out(view.features.size());
    for (std::size_t k = 0; k < view.features.size(); ++k) out[k] = x[view.features[k]];
    return out;
}

}  // namespace

ForestModel fit_forest(const LabeledDataset& ds, const std::vector<FeatureView>& views,
                       std::size_t p_per_view) {
    if (views.empty()) throw DataError("fit_forest: need at least one view");
    if (ds.classes() < 2) throw TooFewClasses("fit_forest: need at least 2 classes");

    ForestModel model;
    model.input_dim = ds.dim();
    model.class_count = ds.classes();
    model.class_names = ds.class_names;

    for (std::size_t l = 0; l < views.size(); ++l) {
        const FeatureView view = make_feature_view(views[l].features, ds.dim());
        const LabeledDataset restricted = restrict_features(ds, view);
        SubspaceFit sub;
        try {
            // Section-8 style fits always weight the between-scatter by n_j.
            sub = fit(restricted, CriterionVariant::V1, BetweenVariant::MultiWeighted,
                      p_per_view);
        } catch (const NumericalError& e) {
            throw NumericalError("view " + std::to_string(l) + ": " + e.what());
        } catch (const DataError& e) {
            throw DataError("view " + std::to_string(l) + ": " + e.what());
        }
        const ClassMeans means = class_means(restricted);
        model.centroids.push_back(project(sub.model, means.class_means));
        model.submodels.push_back(std::move(sub.model));
        model.views.push_back(view);
    }
    return model;
}

Classification classify(const ForestModel& model, std::span<const double> x) {
    if (x.size() != model.input_dim)
        throw DimensionMismatch("classify: expected dimension " +
                                std::to_string(model.input_dim) + ", got " +
                                std::to_string(x.size()));

    std::vector<double> z(x.begin(), x.end());
    if (model.standardization) {
        Matrix one(x.size(), 1);
        one.set_col(0, x);
        z = apply_standardization(*model.standardization, one).col_copy(0);
    }

    const std::size_t c = model.class_count;
    Classification result;
    result.votes.assign(c, 0);

    for (std::size_t l = 0; l < model.views.size(); ++l) {
        Matrix sample(model.views[l].features.size(), 1);
        sample.set_col(0, restrict_vector(z, model.views[l]));
        const Matrix proj = project(model.submodels[l], sample);

        std::vector<double> dist(c);
        for (std::size_t j = 0; j < c; ++j)
            dist[j] = std::sqrt(squared_distance(proj.col(0), model.centroids[l].col(j)));

        // Rescale by the spread of the c distances; a positive scalar, so the
        // nearest centroid is unchanged, but the normalized values are what a
        // cross-subspace consumer would compare.
        double mean = 0.0;
        for (double v : dist) mean += v;
        mean /= static_cast<double>(c);
        double var = 0.0;
        for (double v : dist) var += (v - mean) * (v - mean);
        const double sd = std::sqrt(var / static_cast<double>(c));
        if (sd > 0.0)
            for (double& v : dist) v /= sd;

        std::size_t best = 0;
        for (std::size_t j = 1; j < c; ++j)
            if (dist[j] < dist[best]) best = j;
        ++result.votes[best];
    }

    int label = 0;
    for (std::size_t j = 1; j < c; ++j)
        if (result.votes[j] > result.votes[static_cast<std::size_t>(label)])
            label = static_cast<int>(j);
    result.label = label;
    return result;
}

}  // namespace fisherkit
