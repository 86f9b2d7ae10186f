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
#ifndef FISHERKIT_DATASET_HPP
#define FISHERKIT_DATASET_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fisherkit/matrix.hpp"

namespace fisherkit {

/// Labeled samples, stored as columns of a d-by-n matrix. Class ids are
/// contiguous in [0, c); class_index lists the column indices of every class
/// in file order; class_names holds the original label text per class id.
struct LabeledDataset {
    Matrix data;
    std::vector<int> labels;
    std::vector<std::vector<std::size_t>> class_index;
    std::vector<std::string> class_names;

    std::size_t dim() const { return data.rows(); }
    std::size_t size() const { return data.cols(); }
    std::size_t classes() const { return class_index.size(); }
    std::size_t class_size(std::size_t j) const { return class_index[j].size(); }
};

/// Build a dataset from a data matrix and labels; derives class_index and
/// checks the invariants (ids contiguous from 0, every class non-empty).
LabeledDataset make_dataset(Matrix data, std::vector<int> labels,
                            std::vector<std::string> class_names = {});

/// Per-feature mean and population standard deviation. Features with zero
/// std map to output 0 under apply().
struct StandardizationParams {
    std::vector<double> mean;
    std::vector<double> stddev;
};

/// Load a labeled CSV: comma separator, '.' decimal, no quoting. Row i of
/// the file becomes column i of the data matrix. label_column is 0-based;
/// negative counts from the end (-1 = last column). Label cells map to
/// contiguous class ids by first appearance.
LabeledDataset load_csv(const std::string& path, int label_column, bool has_header);

/// load_csv plus a string tag column (excluded from the features), used by
/// the CLI to carry train/test markers through projection tables.
std::pair<LabeledDataset, std::vector<std::string>> load_csv_tagged(
    const std::string& path, int label_column, int tag_column, bool has_header);

/// Unlabeled CSV: every column is a feature.
Matrix load_csv_matrix(const std::string& path, bool has_header);

/// Per-feature z-scoring with population (1/n) standard deviation.
std::pair<LabeledDataset, StandardizationParams> standardize(const LabeledDataset& ds);

Matrix apply_standardization(const StandardizationParams& params, const Matrix& raw);

/// Deterministic split: the first `per_class_train_count` samples of every
/// class (in file order) become the training set, the rest the test set.
std::pair<LabeledDataset, LabeledDataset> split_first_k(const LabeledDataset& ds,
                                                        std::size_t per_class_train_count);

}  // namespace fisherkit

#endif  // FISHERKIT_DATASET_HPP
