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

#include <cmath>

#include "fisherkit/eigen.hpp"
#include "fisherkit/kernel_fda.hpp"
#include "support/datagen.hpp"

using namespace fisherkit;
using testsupport::Rng;

namespace {

double pearson(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size();
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= static_cast<double>(n);
    mb /= static_cast<double>(n);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cov += (a[i] - ma) * (b[i] - mb);
        va += (a[i] - ma) * (a[i] - ma);
        vb += (b[i] - mb) * (b[i] - mb);
    }
    return cov / std::sqrt(va * vb);
}

void check_psd(const SymMatrix& s, const char* what) {
    const EigDecomposition eig = sym_eig(s);
    const double max = std::max(eig.values.front(), 0.0);
    INFO(what);
    CHECK(eig.values.back() >= -1e-9 * (max > 0.0 ? max : 1.0));
}

}  // namespace

TEST_CASE("class_kernel_stats: singleton classes zero out the within-scatter") {
    Matrix data(2, 3);
    data(0, 0) = 1.0;
    data(0, 1) = -1.0;
    data(1, 2) = 2.0;
    const LabeledDataset ds = make_dataset(std::move(data), {0, 1, 2});
    const KernelClassStats stats = class_kernel_stats(ds, KernelSpec::gaussian(1.0));
    CHECK(stats.within.frobenius_norm() == 0.0);
}

TEST_CASE("class_kernel_stats: grand mean equals the Gram row means") {
    Rng rng(101);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 3, 4, 6);
    const KernelClassStats stats = class_kernel_stats(ds, KernelSpec::gaussian(1.5));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        double row_mean = 0.0;
        for (std::size_t k = 0; k < ds.size(); ++k) row_mean += stats.gram(i, k);
        row_mean /= static_cast<double>(ds.size());
        CHECK(stats.grand_mean[i] == doctest::Approx(row_mean).epsilon(1e-12));
    }
}

TEST_CASE("class_kernel_stats: weighted class means average to the grand mean") {
    Rng rng(102);
    const LabeledDataset ds = testsupport::random_dataset(rng, 4, 3, 3, 7);
    const KernelClassStats stats = class_kernel_stats(ds, KernelSpec::linear(0.3));
    for (std::size_t i = 0; i < ds.size(); ++i) {
        double weighted = 0.0;
        for (std::size_t j = 0; j < ds.classes(); ++j)
            weighted += static_cast<double>(ds.class_size(j)) * stats.class_means(i, j);
        CHECK(weighted ==
              doctest::Approx(static_cast<double>(ds.size()) * stats.grand_mean[i])
                  .epsilon(1e-10));
    }
}

TEST_CASE("class_kernel_stats: blocks select Gram columns bit for bit") {
    Rng rng(103);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 4, 6);
    const KernelClassStats stats = class_kernel_stats(ds, KernelSpec::gaussian(0.8));
    for (std::size_t j = 0; j < ds.classes(); ++j)
        for (std::size_t k = 0; k < ds.class_size(j); ++k) {
            const std::size_t col = ds.class_index[j][k];
            for (std::size_t i = 0; i < ds.size(); ++i)
                CHECK(stats.class_blocks[j](i, k) == stats.gram(i, col));
        }
}

TEST_CASE("kernel_between: identical class contents give a zero two-class scatter") {
    // Both classes hold exactly the points {a, b}, so m_1 == m_2.
    Matrix data(2, 4);
    data(0, 0) = 1.0;
    data(1, 1) = -1.0;
    data(0, 2) = 1.0;
    data(1, 3) = -1.0;
    const LabeledDataset ds = make_dataset(std::move(data), {0, 0, 1, 1});
    const SymMatrix m = kernel_between(ds, KernelSpec::gaussian(1.0), BetweenVariant::TwoClass);
    CHECK(m.frobenius_norm() == 0.0);
}

TEST_CASE("kernel_between: two-class scatter is rank one") {
    Rng rng(104);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 5, 8);
    const SymMatrix m = kernel_between(ds, KernelSpec::gaussian(1.0), BetweenVariant::TwoClass);
    const EigDecomposition eig = sym_eig(m);
    CHECK(eig.values[1] <= 1e-10 * eig.values[0]);
}

TEST_CASE("kernel_between: weighted two-class variant shares the dominant direction") {
    Rng rng(105);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 5, 9);
    const KernelSpec spec = KernelSpec::gaussian(1.2);
    const SymMatrix two = kernel_between(ds, spec, BetweenVariant::TwoClass);
    const SymMatrix weighted = kernel_between(ds, spec, BetweenVariant::MultiWeighted);
    const EigDecomposition e1 = sym_eig(two);
    const EigDecomposition e2 = sym_eig(weighted);
    CHECK(abs_cosine(e1.vectors.col(0), e2.vectors.col(0)) >= 0.999);
}

TEST_CASE("kernel_between: variant guards") {
    Rng rng(106);
    const LabeledDataset three = testsupport::random_dataset(rng, 2, 3, 3, 5);
    const KernelSpec spec = KernelSpec::linear();
    CHECK_THROWS_AS(kernel_between(three, spec, BetweenVariant::TwoClass),
                    VariantClassMismatch);
    CHECK_THROWS_AS(kernel_between(three, spec, BetweenVariant::TotalMinusWithin),
                    VariantClassMismatch);
}

TEST_CASE("kernel_total: single sample has no scatter") {
    Matrix data(2, 1);
    data(0, 0) = 3.0;
    const LabeledDataset ds = make_dataset(std::move(data), {0});
    CHECK(kernel_total(ds, KernelSpec::gaussian(1.0)).frobenius_norm() == 0.0);
}

TEST_CASE("kernel_total: identical points have no scatter") {
    Matrix data(2, 4, 1.5);
    const LabeledDataset ds = make_dataset(std::move(data), {0, 0, 1, 1});
    CHECK(kernel_total(ds, KernelSpec::gaussian(1.0)).frobenius_norm() <= 1e-14);
}

TEST_CASE("kernel_total: outer-sum form agrees with the matrix form") {
    Rng rng(107);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 4, 7);
    const KernelClassStats stats = class_kernel_stats(ds, KernelSpec::gaussian(1.1));
    const SymMatrix g = kernel_total(stats);

    Matrix direct(ds.size(), ds.size());
    for (std::size_t k = 0; k < ds.size(); ++k)
        add_outer(direct, subtract(stats.gram.col(k), stats.grand_mean));
    CHECK((g.mat() - direct).frobenius_norm() <= 1e-10 * (1.0 + direct.frobenius_norm()));
}

TEST_CASE("kernel scatters are symmetric PSD") {
    Rng rng(108);
    const LabeledDataset ds = testsupport::random_dataset(rng, 4, 3, 5, 8);
    const KernelSpec spec = KernelSpec::gaussian(1.3);
    const KernelClassStats stats = class_kernel_stats(ds, spec);
    check_psd(stats.within, "N");
    check_psd(kernel_between(stats, ds, BetweenVariant::MultiUnweighted), "M unweighted");
    check_psd(kernel_between(stats, ds, BetweenVariant::MultiWeighted), "M weighted");
    check_psd(kernel_total(stats), "G");
}

TEST_CASE("fit_kernel: linear kernel reproduces linear FDA projections") {
    Rng rng(109);
    const LabeledDataset ds = testsupport::gaussian_blobs(
        rng, {{0.0, 0.0, 0.0}, {4.0, 0.0, 1.0}}, 15, 0.9);

    const SubspaceFit linear_fit =
        fit(ds, CriterionVariant::V1, BetweenVariant::MultiWeighted, 1);
    const KernelFit kernel_fit_result =
        fit_kernel(ds, KernelSpec::linear(), CriterionVariant::V1,
                   BetweenVariant::MultiWeighted, 1);

    const Matrix p_linear = project(linear_fit.model, ds.data);
    const Matrix p_kernel = project_kernel(kernel_fit_result.model, ds.data);
    CHECK(std::fabs(pearson(p_linear.transposed().col(0), p_kernel.transposed().col(0))) >=
          0.999);
}

TEST_CASE("fit_kernel: dimension clamps to c-1") {
    Rng rng(110);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 4, 4, 6);
    const KernelFit result = fit_kernel(ds, KernelSpec::gaussian(1.0), CriterionVariant::V1,
                                        BetweenVariant::MultiWeighted, 10);
    CHECK(result.model.subspace_dim == 3);
    CHECK(result.clamped);
}

TEST_CASE("fit_kernel: generalized residuals and N-orthonormality") {
    Rng rng(111);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 3, 5, 7);
    const KernelSpec spec = KernelSpec::gaussian(1.4);
    const KernelFit result = fit_kernel(ds, spec, CriterionVariant::V1,
                                        BetweenVariant::MultiWeighted, 0);

    const KernelClassStats stats = class_kernel_stats(ds, spec);
    const SymMatrix m = kernel_between(stats, ds, BetweenVariant::MultiWeighted);
    const SymMatrix n_reg = stats.within.shifted(result.model.epsilon);

    for (std::size_t k = 0; k < result.model.subspace_dim; ++k) {
        const auto theta = result.model.theta.col(k);
        const double lambda = result.model.eigenvalues[k];
        const std::vector<double> lhs = m.mat() * theta;
        const std::vector<double> rhs = n_reg.mat() * theta;
        double res = 0.0;
        for (std::size_t i = 0; i < lhs.size(); ++i) {
            const double r = lhs[i] - lambda * rhs[i];
            res += r * r;
        }
        CHECK(std::sqrt(res) <=
              1e-7 * (m.frobenius_norm() + std::fabs(lambda) * n_reg.frobenius_norm()));
    }

    const Matrix gram_theta =
        multiply_transposed(result.model.theta, n_reg.mat() * result.model.theta);
    CHECK((gram_theta - Matrix::identity(gram_theta.rows())).max_abs() <= 1e-7);
}

TEST_CASE("fit_kernel: V2 solves the (G, N) problem") {
    Rng rng(112);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 3, 5, 7);
    const KernelSpec spec = KernelSpec::gaussian(1.0);
    const KernelFit result = fit_kernel(ds, spec, CriterionVariant::V2,
                                        BetweenVariant::MultiWeighted, 2);
    const KernelClassStats stats = class_kernel_stats(ds, spec);
    const SymMatrix g = kernel_total(stats);
    const SymMatrix n_reg = stats.within.shifted(result.model.epsilon);
    const auto theta = result.model.theta.col(0);
    CHECK(gen_rayleigh(g, n_reg, theta) ==
          doctest::Approx(result.model.eigenvalues[0]).epsilon(1e-7));
}

TEST_CASE("project_kernel: training data reproduces the stored formula") {
    Rng rng(113);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 5, 7);
    const KernelSpec spec = KernelSpec::gaussian(1.0);
    const KernelFit result =
        fit_kernel(ds, spec, CriterionVariant::V1, BetweenVariant::MultiWeighted, 1);

    const Matrix train_proj = project_kernel(result.model, ds.data);
    const Matrix expected =
        multiply_transposed(result.model.theta, gram(spec, ds.data, ds.data));
    CHECK((train_proj - expected).max_abs() == 0.0);

    // an out-of-sample duplicate of a training column projects identically
    Matrix probe(3, 1);
    probe.set_col(0, ds.data.col(2));
    const Matrix probe_proj = project_kernel(result.model, probe);
    CHECK(probe_proj(0, 0) == train_proj(0, 2));
}

TEST_CASE("project_kernel: scalar-loop oracle for a single point") {
    Rng rng(114);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 4, 6);
    const KernelSpec spec = KernelSpec::gaussian(0.9);
    const KernelFit result =
        fit_kernel(ds, spec, CriterionVariant::V1, BetweenVariant::MultiWeighted, 1);

    const std::vector<double> xt = rng.uniform_vector(3, -2.0, 2.0);
    Matrix probe(3, 1);
    probe.set_col(0, xt);
    const Matrix proj = project_kernel(result.model, probe);

    double by_loop = 0.0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        by_loop += result.model.theta(i, 0) * kernel_eval(spec, ds.data.col(i), xt);
    CHECK(proj(0, 0) == doctest::Approx(by_loop).epsilon(1e-12));
}

TEST_CASE("project_kernel: dimension mismatch rejected") {
    Rng rng(115);
    const LabeledDataset ds = testsupport::random_dataset(rng, 3, 2, 4, 6);
    const KernelFit result = fit_kernel(ds, KernelSpec::linear(), CriterionVariant::V1,
                                        BetweenVariant::MultiWeighted, 1);
    const Matrix wrong(4, 2);
    CHECK_THROWS_AS(project_kernel(result.model, wrong), DimensionMismatch);
}
