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
#ifndef FISHERKIT_FOREST_HPP
#define FISHERKIT_FOREST_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fisherkit/dataset.hpp"
#include "fisherkit/fda.hpp"

namespace fisherkit {

/// A feature subset defining one member subspace. Indices are sorted,
/// unique, non-empty; views of one forest may have different sizes.
struct FeatureView {
    std::vector<std::size_t> features;
};

FeatureView make_feature_view(std::vector<std::size_t> features, std::size_t dim);

/// Parse "0,1,4;2,3" into views, validated against the data dimension.
std::vector<FeatureView> parse_views(const std::string& text, std::size_t dim);

/// Ensemble of Fisher subspaces, one per feature view, combined by majority
/// vote over per-view nearest-centroid labels.
struct ForestModel {
    std::vector<FeatureView> views;
    std::vector<LinearSubspaceModel> submodels;
    std::vector<Matrix> centroids;  // per view: p_l x c projected class means
    std::size_t input_dim = 0;
    std::size_t class_count = 0;
    std::vector<std::string> class_names;
    std::optional<StandardizationParams> standardization;
};

/// Fit one Fisher subspace per view (weighted between-scatter) and store the
/// projected class centroids. Fit errors are re-thrown tagged with the view
/// index.
ForestModel fit_forest(const LabeledDataset& ds, const std::vector<FeatureView>& views,
                       std::size_t p_per_view);

struct Classification {
    int label = 0;
    std::vector<int> votes;  // length c, summing to the number of views
};

/// Per view: project the masked sample, pick the nearest projected centroid
/// (distances rescaled by their standard deviation across the centroids),
/// and vote. Ties go to the lowest class id.
Classification classify(const ForestModel& model, std::span<const double> x);

}  // namespace fisherkit

#endif  // FISHERKIT_FOREST_HPP
