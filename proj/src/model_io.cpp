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
#include "fisherkit/model_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace fisherkit {

namespace {

constexpr const char* kVersionLine = "fisherkit-model v1";

void write_vector(std::ostream& out, const std::string& name,
                  std::span<const double> values) {
    out << "vector " << name << ' ' << values.size() << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ' ';
        out << format_double(values[i]);
    }
    out << '\n';
}

// Row-major rows, one line per row.
void write_matrix(std::ostream& out, const std::string& name, const Matrix& m) {
    out << "matrix " << name << ' ' << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) out << ' ';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

void write_ints(std::ostream& out, const std::string& name, std::span<const int> values) {
    out << "ints " << name << ' ' << values.size() << '\n';
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out << ' ';
        out << values[i];
    }
    out << '\n';
}

void write_names(std::ostream& out, const std::vector<std::string>& names) {
    out << "names " << names.size() << '\n';
    for (const auto& n : names) out << n << '\n';
}

void write_standardization(std::ostream& out,
                           const std::optional<StandardizationParams>& params) {
    out << "standardized: " << (params ? "yes" : "no") << '\n';
    if (params) {
        write_vector(out, "standardize_mean", params->mean);
        write_vector(out, "standardize_std", params->stddev);
    }
}

// Strict line-oriented reader. Every helper names the token it expects so
// malformed files fail with a usable message.
class Reader {
public:
    explicit Reader(std::istream& in) : in_(in) {}

    std::string line() {
        std::string l;
        if (!std::getline(in_, l))
            throw PersistenceError("model file ended unexpectedly");
        if (!l.empty() && l.back() == '\r') l.pop_back();
        return l;
    }

    std::string value(const std::string& key) {
        const std::string l = line();
        const std::string prefix = key + ": ";
        if (l.rfind(prefix, 0) != 0)
            throw PersistenceError("expected '" + key + ":', got '" + l + "'");
        return l.substr(prefix.size());
    }

    double number(const std::string& key) { return parse_double(value(key), key); }

    std::size_t count(const std::string& key) {
        return static_cast<std::size_t>(std::stoull(value(key)));
    }

    std::vector<double> vector(const std::string& name) {
        std::istringstream head(line());
        std::string tag, got;
        std::size_t len = 0;
        head >> tag >> got >> len;
        if (tag != "vector" || got != name)
            throw PersistenceError("expected vector '" + name + "'");
        return doubles_line(len, name);
    }

    Matrix matrix(const std::string& name) {
        std::istringstream head(line());
        std::string tag, got;
        std::size_t rows = 0, cols = 0;
        head >> tag >> got >> rows >> cols;
        if (tag != "matrix" || got != name)
            throw PersistenceError("expected matrix '" + name + "'");
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            const std::vector<double> row = doubles_line(cols, name);
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = row[j];
        }
        return m;
    }

    std::vector<int> ints(const std::string& name) {
        std::istringstream head(line());
        std::string tag, got;
        std::size_t len = 0;
        head >> tag >> got >> len;
        if (tag != "ints" || got != name)
            throw PersistenceError("expected ints '" + name + "'");
        std::istringstream body(line());
        std::vector<int> values(len);
        for (auto& v : values)
            if (!(body >> v)) throw PersistenceError("short ints line for '" + name + "'");
        return values;
    }

    std::vector<std::string> names() {
        std::istringstream head(line());
        std::string tag;
        std::size_t len = 0;
        head >> tag >> len;
        if (tag != "names") throw PersistenceError("expected names block");
        std::vector<std::string> out(len);
        for (auto& n : out) n = line();
        return out;
    }

    std::optional<StandardizationParams> standardization() {
        const std::string flag = value("standardized");
        if (flag == "no") return std::nullopt;
        if (flag != "yes") throw PersistenceError("bad standardized flag '" + flag + "'");
        StandardizationParams p;
        p.mean = vector("standardize_mean");
        p.stddev = vector("standardize_std");
        return p;
    }

private:
    static double parse_double(const std::string& text, const std::string& what) {
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str())
            throw PersistenceError("bad number '" + text + "' for " + what);
        return v;
    }

    std::vector<double> doubles_line(std::size_t len, const std::string& what) {
        const std::string l = line();
        std::vector<double> values(len);
        const char* cursor = l.c_str();
        for (std::size_t i = 0; i < len; ++i) {
            char* end = nullptr;
            values[i] = std::strtod(cursor, &end);
            if (end == cursor)
                throw PersistenceError("short numeric line in '" + what + "'");
            cursor = end;
        }
        return values;
    }

    std::istream& in_;
};

void write_linear_payload(std::ostream& out, const LinearSubspaceModel& model) {
    out << "method: " << to_string(model.method) << '\n';
    out << "d: " << model.input_dim << '\n';
    out << "p: " << model.subspace_dim << '\n';
    out << "c: " << model.class_count << '\n';
    out << "epsilon: " << format_double(model.epsilon) << '\n';
    write_standardization(out, model.standardization);
    write_vector(out, "train_mean", model.train_mean);
    write_vector(out, "eigenvalues", model.eigenvalues);
    write_matrix(out, "basis", model.basis);
}

LinearSubspaceModel read_linear_payload(Reader& reader) {
    LinearSubspaceModel model;
    model.method = method_from_string(reader.value("method"));
    model.input_dim = reader.count("d");
    model.subspace_dim = reader.count("p");
    model.class_count = reader.count("c");
    model.epsilon = reader.number("epsilon");
    model.standardization = reader.standardization();
    model.train_mean = reader.vector("train_mean");
    model.eigenvalues = reader.vector("eigenvalues");
    model.basis = reader.matrix("basis");
    if (model.basis.rows() != model.input_dim || model.basis.cols() != model.subspace_dim)
        throw PersistenceError("basis shape disagrees with header");
    return model;
}

std::string read_header(Reader& reader) {
    const std::string version = reader.line();
    if (version != kVersionLine)
        throw PersistenceError("unsupported model version '" + version + "'");
    return reader.value("kind");
}

}  // namespace

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

void write_model(std::ostream& out, const LinearSubspaceModel& model) {
    out << kVersionLine << '\n' << "kind: linear\n";
    write_linear_payload(out, model);
}

void write_model(std::ostream& out, const KernelSubspaceModel& model) {
    out << kVersionLine << '\n' << "kind: kernel\n";
    out << "method: " << (model.variant == CriterionVariant::V1 ? "kfda" : "kfda2") << '\n';
    out << "between: " << to_string(model.between) << '\n';
    out << "kernel: " << to_string(model.kernel.kind) << '\n';
    out << "c1: " << format_double(model.kernel.c1) << '\n';
    out << "c2: " << format_double(model.kernel.c2) << '\n';
    out << "c3: " << format_double(model.kernel.c3) << '\n';
    out << "sigma: " << format_double(model.kernel.sigma) << '\n';
    out << "d: " << model.input_dim << '\n';
    out << "n: " << model.train_count << '\n';
    out << "p: " << model.subspace_dim << '\n';
    out << "c: " << model.class_count << '\n';
    out << "epsilon: " << format_double(model.epsilon) << '\n';
    write_standardization(out, model.standardization);
    write_names(out, model.class_names);
    write_ints(out, "labels", model.train_labels);
    write_vector(out, "eigenvalues", model.eigenvalues);
    write_matrix(out, "theta", model.theta);
    write_matrix(out, "train_data", model.train_data);
}

void write_model(std::ostream& out, const ForestModel& model) {
    out << kVersionLine << '\n' << "kind: forest\n";
    out << "views: " << model.views.size() << '\n';
    out << "d: " << model.input_dim << '\n';
    out << "c: " << model.class_count << '\n';
    write_standardization(out, model.standardization);
    write_names(out, model.class_names);
    for (std::size_t l = 0; l < model.views.size(); ++l) {
        out << "view: " << l << '\n';
        std::vector<int> mask(model.views[l].features.begin(),
                              model.views[l].features.end());
        write_ints(out, "mask", mask);
        write_linear_payload(out, model.submodels[l]);
        write_matrix(out, "centroids", model.centroids[l]);
    }
}

LinearSubspaceModel read_linear_model(std::istream& in) {
    Reader reader(in);
    if (read_header(reader) != "linear")
        throw PersistenceError("expected a linear model file");
    return read_linear_payload(reader);
}

KernelSubspaceModel read_kernel_model(std::istream& in) {
    Reader reader(in);
    if (read_header(reader) != "kernel")
        throw PersistenceError("expected a kernel model file");

    KernelSubspaceModel model;
    const std::string method = reader.value("method");
    if (method == "kfda")
        model.variant = CriterionVariant::V1;
    else if (method == "kfda2")
        model.variant = CriterionVariant::V2;
    else
        throw PersistenceError("bad kernel method '" + method + "'");
    model.between = between_variant_from_string(reader.value("between"));
    model.kernel.kind = kernel_kind_from_string(reader.value("kernel"));
    model.kernel.c1 = reader.number("c1");
    model.kernel.c2 = reader.number("c2");
    model.kernel.c3 = reader.number("c3");
    model.kernel.sigma = reader.number("sigma");
    model.input_dim = reader.count("d");
    model.train_count = reader.count("n");
    model.subspace_dim = reader.count("p");
    model.class_count = reader.count("c");
    model.epsilon = reader.number("epsilon");
    model.standardization = reader.standardization();
    model.class_names = reader.names();
    model.train_labels = reader.ints("labels");
    model.eigenvalues = reader.vector("eigenvalues");
    model.theta = reader.matrix("theta");
    model.train_data = reader.matrix("train_data");
    if (model.theta.rows() != model.train_count ||
        model.theta.cols() != model.subspace_dim ||
        model.train_data.rows() != model.input_dim ||
        model.train_data.cols() != model.train_count)
        throw PersistenceError("kernel model shapes disagree with header");
    return model;
}

ForestModel read_forest_model(std::istream& in) {
    Reader reader(in);
    if (read_header(reader) != "forest")
        throw PersistenceError("expected a forest model file");

    ForestModel model;
    const std::size_t views = reader.count("views");
    model.input_dim = reader.count("d");
    model.class_count = reader.count("c");
    model.standardization = reader.standardization();
    model.class_names = reader.names();
    for (std::size_t l = 0; l < views; ++l) {
        if (reader.count("view") != l) throw PersistenceError("view blocks out of order");
        const std::vector<int> mask = reader.ints("mask");
        FeatureView view;
        for (int m : mask) view.features.push_back(static_cast<std::size_t>(m));
        model.views.push_back(make_feature_view(view.features, model.input_dim));
        model.submodels.push_back(read_linear_payload(reader));
        model.centroids.push_back(reader.matrix("centroids"));
    }
    return model;
}

void save_model(const std::string& path, const LinearSubspaceModel& model) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_model(out, model);
}

void save_model(const std::string& path, const KernelSubspaceModel& model) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_model(out, model);
}

void save_model(const std::string& path, const ForestModel& model) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    write_model(out, model);
}

AnyModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open model file '" + path + "'");
    Reader probe(in);
    const std::string kind = read_header(probe);
    in.clear();
    in.seekg(0);
    if (kind == "linear") return read_linear_model(in);
    if (kind == "kernel") return read_kernel_model(in);
    if (kind == "forest") return read_forest_model(in);
    throw PersistenceError("unknown model kind '" + kind + "'");
}

}  // namespace fisherkit
