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
#include <doctest.h>

#include <sstream>

#include "fisherkit/model_io.hpp"
#include "support/datagen.hpp"

using namespace fisherkit;
using testsupport::Rng;

namespace {

// Bitwise equality on every stored double.
void check_matrix_equal(const Matrix& a, const Matrix& b) {
    REQUIRE(a.rows() == b.rows());
    REQUIRE(a.cols() == b.cols());
    for (std::size_t j = 0; j < a.cols(); ++j)
        for (std::size_t i = 0; i < a.rows(); ++i) CHECK(a(i, j) == b(i, j));
}

void check_vector_equal(const std::vector<double>& a, const std::vector<double>& b) {
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

}  // namespace

TEST_CASE("linear model round-trips value-exact") {
    Rng rng(141);
    LabeledDataset ds = testsupport::random_dataset(rng, 4, 3, 8, 11);
    auto [standardized, params] = standardize(ds);
    SubspaceFit result =
        fit(standardized, CriterionVariant::V1, BetweenVariant::MultiWeighted, 2);
    result.model.standardization = params;

    std::stringstream stream;
    write_model(stream, result.model);
    const LinearSubspaceModel back = read_linear_model(stream);

    CHECK(back.method == result.model.method);
    CHECK(back.input_dim == result.model.input_dim);
    CHECK(back.subspace_dim == result.model.subspace_dim);
    CHECK(back.class_count == result.model.class_count);
    CHECK(back.epsilon == result.model.epsilon);
    check_matrix_equal(back.basis, result.model.basis);
    check_vector_equal(back.eigenvalues, result.model.eigenvalues);
    check_vector_equal(back.train_mean, result.model.train_mean);
    REQUIRE(back.standardization.has_value());
    check_vector_equal(back.standardization->mean, params.mean);
    check_vector_equal(back.standardization->stddev, params.stddev);
}

TEST_CASE("kernel model round-trips value-exact, training matrix included") {
    Rng rng(142);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 3, 5, 8);
    const KernelFit result = fit_kernel(ds, KernelSpec::gaussian(1.25), CriterionVariant::V1,
                                        BetweenVariant::MultiWeighted, 2);

    std::stringstream stream;
    write_model(stream, result.model);
    const KernelSubspaceModel back = read_kernel_model(stream);

    CHECK(back.variant == result.model.variant);
    CHECK(back.between == result.model.between);
    CHECK(back.kernel.kind == result.model.kernel.kind);
    CHECK(back.kernel.sigma == result.model.kernel.sigma);
    CHECK(back.epsilon == result.model.epsilon);
    CHECK(back.train_labels == result.model.train_labels);
    CHECK(back.class_names == result.model.class_names);
    check_matrix_equal(back.theta, result.model.theta);
    check_matrix_equal(back.train_data, result.model.train_data);
    check_vector_equal(back.eigenvalues, result.model.eigenvalues);

    // projections through the reloaded model are identical
    const Matrix before = project_kernel(result.model, ds.data);
    const Matrix after = project_kernel(back, ds.data);
    CHECK((before - after).max_abs() == 0.0);
}

TEST_CASE("forest model round-trips value-exact") {
    Rng rng(143);
    const LabeledDataset ds = testsupport::gaussian_blobs(
        rng, {{-3.0, 0.0, 1.0, 0.0}, {3.0, 0.0, -1.0, 0.5}}, 15, 0.6);
    ForestModel forest = fit_forest(ds, {{{0, 1}}, {{2, 3}}}, 0);

    std::stringstream stream;
    write_model(stream, forest);
    const ForestModel back = read_forest_model(stream);

    REQUIRE(back.views.size() == forest.views.size());
    CHECK(back.class_count == forest.class_count);
    for (std::size_t l = 0; l < back.views.size(); ++l) {
        CHECK(back.views[l].features == forest.views[l].features);
        check_matrix_equal(back.submodels[l].basis, forest.submodels[l].basis);
        check_matrix_equal(back.centroids[l], forest.centroids[l]);
    }

    for (std::size_t j = 0; j < ds.size(); ++j)
        CHECK(classify(back, ds.data.col(j)).label ==
              classify(forest, ds.data.col(j)).label);
}

TEST_CASE("unknown versions are rejected") {
    std::stringstream stream("fisherkit-model v999\nkind: linear\n");
    CHECK_THROWS_AS(read_linear_model(stream), PersistenceError);
}

TEST_CASE("mismatched kinds are rejected") {
    Rng rng(144);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 5, 7);
    const SubspaceFit result =
        fit(ds, CriterionVariant::V1, BetweenVariant::MultiWeighted, 1);
    std::stringstream stream;
    write_model(stream, result.model);
    CHECK_THROWS_AS(read_kernel_model(stream), PersistenceError);
}

TEST_CASE("format_double survives a parse round trip on awkward values") {
    for (const double v : {1.0 / 3.0, 1e-300, -0.0, 123456789.123456789, 2.2250738585072014e-308}) {
        const std::string text = format_double(v);
        CHECK(std::stod(text) == v);
    }
}
