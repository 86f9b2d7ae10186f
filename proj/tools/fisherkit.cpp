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
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fisherkit/dataset.hpp"
#include "fisherkit/fda.hpp"
#include "fisherkit/forest.hpp"
#include "fisherkit/kernel_fda.hpp"
#include "fisherkit/model_io.hpp"
#include "fisherkit/pca.hpp"

namespace {

using namespace fisherkit;

struct RunConfig {
    std::string input;
    int label_column = -1;
    bool has_header = false;
    std::string method;
    std::size_t p = 0;
    std::string between = "weighted";
    double energy = 0.98;
    std::string kernel;
    double c1 = 0.0, c2 = 0.0, c3 = 0.0, sigma = 0.0;
    bool c1_set = false, c2_set = false, c3_set = false, sigma_set = false;
    std::string views;
    bool do_standardize = false;
    std::string model_out;
    bool print_basis = false;
    bool unit_norm = false;

    std::string model_path;
    int tag_column = 0;
    bool tag_set = false;
    std::string mode = "least-squares";
    std::string output;
    std::string model_a, model_b;
    bool unlabeled = false;
};

bool is_kernel_method(const std::string& m) { return m == "kfda" || m == "kfda2"; }

KernelSpec build_kernel_spec(const RunConfig& cfg) {
    const KernelKind kind = kernel_kind_from_string(cfg.kernel);
    KernelSpec spec;
    spec.kind = kind;
    // Per-kind defaults for constants the user left unset.
    switch (kind) {
        case KernelKind::Linear:
            spec.c1 = cfg.c1_set ? cfg.c1 : 0.0;
            break;
        case KernelKind::Polynomial:
            spec.c1 = cfg.c1_set ? cfg.c1 : 1.0;
            spec.c2 = cfg.c2_set ? cfg.c2 : 1.0;
            spec.c3 = cfg.c3_set ? cfg.c3 : 2.0;
            break;
        case KernelKind::Gaussian:
            spec.sigma = cfg.sigma_set ? cfg.sigma : 1.0;
            break;
        case KernelKind::Sigmoid:
            spec.c1 = cfg.c1_set ? cfg.c1 : 1.0;
            spec.c2 = cfg.c2_set ? cfg.c2 : 0.0;
            break;
        case KernelKind::Cosine:
            break;
    }
    spec.validate();
    return spec;
}

void validate_fit_flags(const RunConfig& cfg, bool energy_set, bool kernel_set,
                        bool views_set, bool between_set) {
    const bool kernel_method = is_kernel_method(cfg.method);
    if (kernel_set && !kernel_method)
        throw ConfigError("--kernel is only valid with --method kfda or kfda2");
    if ((cfg.c1_set || cfg.c2_set || cfg.c3_set || cfg.sigma_set) && !kernel_method)
        throw ConfigError("kernel constants are only valid with --method kfda or kfda2");
    if (kernel_method && !kernel_set)
        throw ConfigError("--method " + cfg.method + " needs --kernel");
    if (energy_set && cfg.method != "rfda")
        throw ConfigError("--energy is only valid with --method rfda");
    if (cfg.method == "rfda" && (cfg.energy <= 0.0 || cfg.energy > 1.0))
        throw ConfigError("--energy must lie in (0, 1]");
    if (views_set && cfg.method != "forest")
        throw ConfigError("--views is only valid with --method forest");
    if (cfg.method == "forest" && !views_set)
        throw ConfigError("--method forest needs --views");
    if (between_set && (cfg.method == "pca" || cfg.method == "forest"))
        throw ConfigError("--between does not apply to " + cfg.method +
                          (cfg.method == "forest" ? " (forest always weights by class size)"
                                                  : " (pca has no between-scatter)"));
}

void print_spectrum(const std::string& method, std::size_t p,
                    std::span<const double> spectrum) {
    std::cout << "method\t" << method << '\n';
    std::cout << "p\t" << p << '\n';
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        std::cout << "eigenvalue\t" << i << '\t' << format_double(spectrum[i]) << '\n';
}

void print_basis(const Matrix& basis, bool unit_norm) {
    const Matrix shown = unit_norm ? unit_columns(basis) : basis;
    for (std::size_t i = 0; i < shown.rows(); ++i) {
        std::cout << "basis\t" << i;
        for (std::size_t j = 0; j < shown.cols(); ++j)
            std::cout << '\t' << format_double(shown(i, j));
        std::cout << '\n';
    }
}

int run_fit(const RunConfig& cfg) {
    LabeledDataset ds = load_csv(cfg.input, cfg.label_column, cfg.has_header);
    std::optional<StandardizationParams> params;
    if (cfg.do_standardize) {
        auto [standardized, p] = standardize(ds);
        ds = std::move(standardized);
        params = std::move(p);
    }

    auto warn_clamp = [&](bool clamped, std::size_t retained) {
        if (clamped)
            std::cerr << "warning: requested p=" << cfg.p << " clamped to " << retained
                      << " (a discriminant subspace has at most c-1 useful directions)\n";
    };

    if (cfg.method == "fda" || cfg.method == "fda2" || cfg.method == "rfda") {
        const BetweenVariant between = between_variant_from_string(cfg.between);
        SubspaceFit result =
            cfg.method == "rfda"
                ? robust_fit(ds, cfg.energy, between, cfg.p)
                : fit(ds,
                      cfg.method == "fda" ? CriterionVariant::V1 : CriterionVariant::V2,
                      between, cfg.p);
        result.model.standardization = params;
        warn_clamp(result.clamped, result.model.subspace_dim);
        save_model(cfg.model_out, result.model);
        print_spectrum(cfg.method, result.model.subspace_dim, result.spectrum);
        if (cfg.print_basis) print_basis(result.model.basis, cfg.unit_norm);
        return 0;
    }
    if (cfg.method == "pca") {
        SubspaceFit result = fit_pca(ds, cfg.p);
        result.model.standardization = params;
        save_model(cfg.model_out, result.model);
        print_spectrum(cfg.method, result.model.subspace_dim, result.spectrum);
        if (cfg.print_basis) print_basis(result.model.basis, cfg.unit_norm);
        return 0;
    }
    if (is_kernel_method(cfg.method)) {
        const KernelSpec spec = build_kernel_spec(cfg);
        const BetweenVariant between = between_variant_from_string(cfg.between);
        KernelFit result = fit_kernel(
            ds, spec, cfg.method == "kfda" ? CriterionVariant::V1 : CriterionVariant::V2,
            between, cfg.p);
        result.model.standardization = params;
        warn_clamp(result.clamped, result.model.subspace_dim);
        save_model(cfg.model_out, result.model);
        print_spectrum(cfg.method, result.model.subspace_dim, result.spectrum);
        return 0;
    }
    if (cfg.method == "forest") {
        const std::vector<FeatureView> views = parse_views(cfg.views, ds.dim());
        ForestModel model = fit_forest(ds, views, cfg.p);
        model.standardization = params;
        save_model(cfg.model_out, model);
        std::cout << "method\tforest\n";
        std::cout << "views\t" << model.views.size() << '\n';
        for (std::size_t l = 0; l < model.views.size(); ++l)
            std::cout << "view_p\t" << l << '\t' << model.submodels[l].subspace_dim << '\n';
        return 0;
    }
    throw ConfigError("unknown method '" + cfg.method + "'");
}

int run_project(const RunConfig& cfg) {
    const AnyModel model = load_model(cfg.model_path);
    if (std::holds_alternative<ForestModel>(model))
        throw ConfigError("forest models are classified, not projected; use classify");

    LabeledDataset ds;
    std::vector<std::string> tags;
    if (cfg.tag_set) {
        auto [loaded, t] =
            load_csv_tagged(cfg.input, cfg.label_column, cfg.tag_column, cfg.has_header);
        ds = std::move(loaded);
        tags = std::move(t);
    } else {
        ds = load_csv(cfg.input, cfg.label_column, cfg.has_header);
    }

    // Raw inputs go in; the model applies its own stored standardization.
    const Matrix projected =
        std::holds_alternative<LinearSubspaceModel>(model)
            ? project(std::get<LinearSubspaceModel>(model), ds.data)
            : project_kernel(std::get<KernelSubspaceModel>(model), ds.data);

    std::cout << "label";
    if (cfg.tag_set) std::cout << "\ttag";
    for (std::size_t k = 0; k < projected.rows(); ++k) std::cout << "\tdim" << (k + 1);
    std::cout << '\n';
    for (std::size_t j = 0; j < projected.cols(); ++j) {
        std::cout << ds.class_names[static_cast<std::size_t>(ds.labels[j])];
        if (cfg.tag_set) std::cout << '\t' << tags[j];
        for (std::size_t k = 0; k < projected.rows(); ++k)
            std::cout << '\t' << format_double(projected(k, j));
        std::cout << '\n';
    }
    return 0;
}

int run_reconstruct(const RunConfig& cfg) {
    const AnyModel any = load_model(cfg.model_path);
    if (std::holds_alternative<KernelSubspaceModel>(any))
        throw ConfigError(
            "reconstruction cannot be done for kernel subspaces: the mapped data is "
            "never materialized, so there is no way back to input space");
    if (std::holds_alternative<ForestModel>(any))
        throw ConfigError("reconstruction is not defined for forest models");
    const auto& model = std::get<LinearSubspaceModel>(any);

    ReconstructionMode mode;
    if (cfg.mode == "paper")
        mode = ReconstructionMode::Paper;
    else if (cfg.mode == "least-squares" || cfg.mode == "least_squares")
        mode = ReconstructionMode::LeastSquares;
    else
        throw ConfigError("--mode must be paper or least_squares");

    const LabeledDataset ds = load_csv(cfg.input, cfg.label_column, cfg.has_header);
    const Matrix rebuilt = reconstruct(model, ds.data, mode);

    std::ofstream out(cfg.output);
    if (!out) throw DataError("cannot write '" + cfg.output + "'");
    for (std::size_t j = 0; j < rebuilt.cols(); ++j) {
        for (std::size_t i = 0; i < rebuilt.rows(); ++i)
            out << format_double(rebuilt(i, j)) << ',';
        out << ds.class_names[static_cast<std::size_t>(ds.labels[j])] << '\n';
    }

    if (mode == ReconstructionMode::LeastSquares) {
        // With the least-squares projector the residual is orthogonal to the
        // basis; report how far that holds numerically.
        const Matrix p_in = project(model, ds.data);
        const Matrix p_out = project(model, rebuilt);
        std::cout << "max_abs_basis_residual\t" << format_double((p_in - p_out).max_abs())
                  << '\n';
    }
    std::cout << "reconstructed\t" << rebuilt.cols() << '\n';
    return 0;
}

int run_compare(const RunConfig& cfg) {
    const AnyModel any_a = load_model(cfg.model_a);
    const AnyModel any_b = load_model(cfg.model_b);
    if (!std::holds_alternative<LinearSubspaceModel>(any_a) ||
        !std::holds_alternative<LinearSubspaceModel>(any_b))
        throw ConfigError("compare needs two linear model files");
    const auto& a = std::get<LinearSubspaceModel>(any_a);
    const auto& b = std::get<LinearSubspaceModel>(any_b);

    const Matrix angles = compare_directions(a, b);
    std::cout << "angle_deg";
    for (std::size_t j = 0; j < angles.cols(); ++j) std::cout << "\tb" << j;
    std::cout << '\n';
    for (std::size_t i = 0; i < angles.rows(); ++i) {
        std::cout << 'a' << i;
        for (std::size_t j = 0; j < angles.cols(); ++j)
            std::cout << '\t' << format_double(angles(i, j));
        std::cout << '\n';
    }
    return 0;
}

int run_classify(const RunConfig& cfg) {
    const AnyModel any = load_model(cfg.model_path);
    if (!std::holds_alternative<ForestModel>(any))
        throw ConfigError("classify needs a forest model");
    const auto& model = std::get<ForestModel>(any);

    Matrix data;
    std::vector<int> truth;  // training-model class ids, -1 when unknown
    if (cfg.unlabeled) {
        data = load_csv_matrix(cfg.input, cfg.has_header);
    } else {
        const LabeledDataset ds = load_csv(cfg.input, cfg.label_column, cfg.has_header);
        data = ds.data;
        for (int label : ds.labels) {
            const std::string& name = ds.class_names[static_cast<std::size_t>(label)];
            int id = -1;
            for (std::size_t j = 0; j < model.class_names.size(); ++j)
                if (model.class_names[j] == name) id = static_cast<int>(j);
            truth.push_back(id);
        }
    }

    std::cout << "row\tlabel";
    for (std::size_t j = 0; j < model.class_count; ++j) std::cout << "\tvotes_" << j;
    std::cout << '\n';

    std::size_t correct = 0, known = 0;
    for (std::size_t j = 0; j < data.cols(); ++j) {
        const Classification result = classify(model, data.col(j));
        std::cout << j << '\t'
                  << model.class_names[static_cast<std::size_t>(result.label)];
        for (int v : result.votes) std::cout << '\t' << v;
        std::cout << '\n';
        if (!truth.empty() && truth[j] >= 0) {
            ++known;
            if (truth[j] == result.label) ++correct;
        }
    }
    if (known > 0)
        std::cout << "accuracy\t"
                  << format_double(static_cast<double>(correct) / static_cast<double>(known))
                  << '\n';
    return 0;
}

int run_spectrum(const RunConfig& cfg) {
    const AnyModel any = load_model(cfg.model_path);
    if (std::holds_alternative<LinearSubspaceModel>(any)) {
        const auto& m = std::get<LinearSubspaceModel>(any);
        print_spectrum(to_string(m.method), m.subspace_dim, m.eigenvalues);
    } else if (std::holds_alternative<KernelSubspaceModel>(any)) {
        const auto& m = std::get<KernelSubspaceModel>(any);
        print_spectrum(m.variant == CriterionVariant::V1 ? "kfda" : "kfda2",
                       m.subspace_dim, m.eigenvalues);
    } else {
        const auto& m = std::get<ForestModel>(any);
        std::cout << "method\tforest\n";
        for (std::size_t l = 0; l < m.submodels.size(); ++l)
            for (std::size_t k = 0; k < m.submodels[l].eigenvalues.size(); ++k)
                std::cout << "eigenvalue\t" << l << '\t' << k << '\t'
                          << format_double(m.submodels[l].eigenvalues[k]) << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"fisherkit: supervised subspace learning (FDA, robust FDA, kernel FDA, "
                 "Fisher forest, PCA)"};
    app.require_subcommand(1);

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", cfg.input, "input CSV file")->required();
        cmd->add_option("--label-column", cfg.label_column,
                        "0-based label column; negative counts from the end (default -1)");
        cmd->add_flag("--header", cfg.has_header, "skip the first line as a header");
    };

    CLI::App* fit_cmd = app.add_subcommand("fit", "fit a subspace model and print its spectrum");
    add_input_flags(fit_cmd);
    fit_cmd->add_option("--method", cfg.method, "fda|fda2|rfda|kfda|kfda2|pca|forest")
        ->required();
    fit_cmd->add_option("--p", cfg.p, "subspace dimension (default: c-1, or d for pca)");
    auto* between_opt = fit_cmd->add_option(
        "--between", cfg.between,
        "between-scatter: two-class|unweighted|weighted|total-minus-within");
    auto* energy_opt = fit_cmd->add_option("--energy", cfg.energy,
                                           "robust-fit spectral energy cutoff (rfda only)");
    auto* kernel_opt =
        fit_cmd->add_option("--kernel", cfg.kernel,
                            "linear|polynomial|gaussian|sigmoid|cosine (kfda/kfda2 only)");
    fit_cmd->add_option("--c1", cfg.c1, "kernel constant c1");
    fit_cmd->add_option("--c2", cfg.c2, "kernel constant c2");
    fit_cmd->add_option("--c3", cfg.c3, "polynomial degree c3");
    fit_cmd->add_option("--sigma", cfg.sigma, "gaussian kernel width");
    auto* views_opt = fit_cmd->add_option(
        "--views", cfg.views, "forest feature views, e.g. \"0,1,4;2,3\" (forest only)");
    fit_cmd->add_flag("--standardize", cfg.do_standardize,
                      "z-score features before fitting; stored in the model");
    fit_cmd->add_option("--model-out", cfg.model_out, "output model file")->required();
    fit_cmd->add_flag("--print-basis", cfg.print_basis, "also print the basis rows");
    fit_cmd->add_flag("--unit-norm", cfg.unit_norm,
                      "display the printed basis with unit-length columns");

    CLI::App* project_cmd =
        app.add_subcommand("project", "project samples onto a fitted subspace");
    project_cmd->add_option("--model", cfg.model_path, "model file")->required();
    add_input_flags(project_cmd);
    auto* tag_opt = project_cmd->add_option(
        "--tag-column", cfg.tag_column,
        "column carrying a train/test tag, echoed in the output");

    CLI::App* reconstruct_cmd =
        app.add_subcommand("reconstruct", "map samples through the subspace and back");
    reconstruct_cmd->add_option("--model", cfg.model_path, "model file")->required();
    add_input_flags(reconstruct_cmd);
    reconstruct_cmd->add_option("--mode", cfg.mode,
                                "paper (plain U Uᵀ) or least_squares (default)");
    reconstruct_cmd->add_option("--output", cfg.output, "output CSV file")->required();

    CLI::App* compare_cmd =
        app.add_subcommand("compare", "pairwise angles between two fitted bases");
    compare_cmd->add_option("--model-a", cfg.model_a, "first model file")->required();
    compare_cmd->add_option("--model-b", cfg.model_b, "second model file")->required();

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "majority-vote classification with a forest model");
    classify_cmd->add_option("--model", cfg.model_path, "forest model file")->required();
    add_input_flags(classify_cmd);
    classify_cmd->add_flag("--unlabeled", cfg.unlabeled,
                           "input has no label column; all columns are features");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "print the eigenvalues stored in a model file");
    spectrum_cmd->add_option("--model", cfg.model_path, "model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fit_cmd->parsed()) {
            validate_fit_flags(cfg, energy_opt->count() > 0, kernel_opt->count() > 0,
                               views_opt->count() > 0, between_opt->count() > 0);
            cfg.c1_set = fit_cmd->count("--c1") > 0;
            cfg.c2_set = fit_cmd->count("--c2") > 0;
            cfg.c3_set = fit_cmd->count("--c3") > 0;
            cfg.sigma_set = fit_cmd->count("--sigma") > 0;
            return run_fit(cfg);
        }
        if (project_cmd->parsed()) {
            cfg.tag_set = tag_opt->count() > 0;
            return run_project(cfg);
        }
        if (reconstruct_cmd->parsed()) return run_reconstruct(cfg);
        if (compare_cmd->parsed()) return run_compare(cfg);
        if (classify_cmd->parsed()) return run_classify(cfg);
        if (spectrum_cmd->parsed()) return run_spectrum(cfg);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}
