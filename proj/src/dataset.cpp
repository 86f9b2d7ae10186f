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
#include "fisherkit/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace fisherkit {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.push_back("");
    return cells;
}

double parse_number(const std::string& cell, std::size_t row, std::size_t col) {
    double value = 0.0;
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    if (begin != end && *begin == '+') ++begin;  // from_chars rejects a leading plus
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (begin == end || ec != std::errc{} || ptr != end)
        throw ParseError(row, col, "expected a number, got '" + cell + "'");
    return value;
}

struct RawCsv {
    std::vector<std::vector<std::string>> rows;  // data rows only
    std::size_t first_data_line = 1;             // 1-based line of the first data row
};

RawCsv read_csv(const std::string& path, bool has_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path + "'");
    RawCsv csv;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (has_header && line_no == 1) continue;
        if (trim(line).empty()) continue;
        if (csv.rows.empty()) csv.first_data_line = line_no;
        auto cells = split_cells(line);
        if (!csv.rows.empty() && cells.size() != csv.rows.front().size())
            throw RaggedRows("row " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(csv.rows.front().size()));
        csv.rows.push_back(std::move(cells));
    }
    if (csv.rows.empty()) throw EmptyDataset("no data rows in '" + path + "'");
    return csv;
}

std::size_t resolve_column(int col, std::size_t width, const char* what) {
    const long index = col < 0 ? static_cast<long>(width) + col : col;
    if (index < 0 || index >= static_cast<long>(width))
        throw DataError(std::string(what) + " column out of range");
    return static_cast<std::size_t>(index);
}

}  // namespace

LabeledDataset make_dataset(Matrix data, std::vector<int> labels,
                            std::vector<std::string> class_names) {
    if (data.cols() != labels.size())
        throw DimensionMismatch("make_dataset: label count differs from sample count");
    if (data.rows() == 0 || data.cols() == 0) throw EmptyDataset("make_dataset: empty data");

    int max_label = -1;
    for (int l : labels) {
        if (l < 0) throw DataError("make_dataset: negative class id");
        max_label = std::max(max_label, l);
    }
    LabeledDataset ds;
    ds.class_index.resize(static_cast<std::size_t>(max_label) + 1);
    for (std::size_t i = 0; i < labels.size(); ++i)
        ds.class_index[static_cast<std::size_t>(labels[i])].push_back(i);
    for (std::size_t j = 0; j < ds.class_index.size(); ++j)
        if (ds.class_index[j].empty())
            throw DataError("make_dataset: class id " + std::to_string(j) + " has no samples");

    if (class_names.empty())
        for (std::size_t j = 0; j < ds.class_index.size(); ++j)
            class_names.push_back(std::to_string(j));
    if (class_names.size() != ds.class_index.size())
        throw DataError("make_dataset: class name count mismatch");

    ds.data = std::move(data);
    ds.labels = std::move(labels);
    ds.class_names = std::move(class_names);
    return ds;
}

namespace {

std::pair<LabeledDataset, std::vector<std::string>> load_impl(const std::string& path,
                                                              int label_column,
                                                              std::optional<int> tag_column,
                                                              bool has_header) {
    const RawCsv csv = read_csv(path, has_header);
    const std::size_t width = csv.rows.front().size();
    const std::size_t label_col = resolve_column(label_column, width, "label");
    std::optional<std::size_t> tag_col;
    if (tag_column) {
        tag_col = resolve_column(*tag_column, width, "tag");
        if (*tag_col == label_col) throw DataError("tag column equals label column");
    }
    const std::size_t d = width - 1 - (tag_col ? 1 : 0);
    if (d == 0) throw DataError("no feature columns in '" + path + "'");

    const std::size_t n = csv.rows.size();
    Matrix data(d, n);
    std::vector<int> labels(n);
    std::vector<std::string> names;
    std::map<std::string, int> name_to_id;
    std::vector<std::string> tags;

    for (std::size_t r = 0; r < n; ++r) {
        const auto& cells = csv.rows[r];
        const std::size_t line_no = csv.first_data_line + r;
        std::size_t feature = 0;
        for (std::size_t c = 0; c < width; ++c) {
            if (c == label_col) continue;
            if (tag_col && c == *tag_col) continue;
            data(feature++, r) = parse_number(cells[c], line_no, c + 1);
        }
        const std::string& label_text = cells[label_col];
        auto [it, inserted] =
            name_to_id.emplace(label_text, static_cast<int>(names.size()));
        if (inserted) names.push_back(label_text);
        labels[r] = it->second;
        if (tag_col) tags.push_back(cells[*tag_col]);
    }
    return {make_dataset(std::move(data), std::move(labels), std::move(names)),
            std::move(tags)};
}

}  // namespace

LabeledDataset load_csv(const std::string& path, int label_column, bool has_header) {
    return load_impl(path, label_column, std::nullopt, has_header).first;
}

std::pair<LabeledDataset, std::vector<std::string>> load_csv_tagged(
    const std::string& path, int label_column, int tag_column, bool has_header) {
    return load_impl(path, label_column, tag_column, has_header);
}

Matrix load_csv_matrix(const std::string& path, bool has_header) {
    const RawCsv csv = read_csv(path, has_header);
    const std::size_t width = csv.rows.front().size();
    Matrix data(width, csv.rows.size());
    for (std::size_t r = 0; r < csv.rows.size(); ++r)
        for (std::size_t c = 0; c < width; ++c)
            data(c, r) = parse_number(csv.rows[r][c], csv.first_data_line + r, c + 1);
    return data;
}

std::pair<LabeledDataset, StandardizationParams> standardize(const LabeledDataset& ds) {
    const std::size_t d = ds.dim();
    const std::size_t n = ds.size();
    if (n < 2) throw DataError("standardize: need at least 2 samples");

    StandardizationParams params;
    params.mean.resize(d);
    params.stddev.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        double sum = 0.0;
        for (std::size_t j = 0; j < n; ++j) sum += ds.data(i, j);
        const double mean = sum / static_cast<double>(n);
        double sq = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double dlt = ds.data(i, j) - mean;
            sq += dlt * dlt;
        }
        params.mean[i] = mean;
        params.stddev[i] = std::sqrt(sq / static_cast<double>(n));
    }

    LabeledDataset out = ds;
    out.data = apply_standardization(params, ds.data);
    return {std::move(out), std::move(params)};
}

Matrix apply_standardization(const StandardizationParams& params, const Matrix& raw) {
    if (raw.rows() != params.mean.size())
        throw DimensionMismatch("apply_standardization: feature count mismatch");
    Matrix out(raw.rows(), raw.cols());
    for (std::size_t j = 0; j < raw.cols(); ++j)
        for (std::size_t i = 0; i < raw.rows(); ++i)
            out(i, j) = params.stddev[i] > 0.0
                            ? (raw(i, j) - params.mean[i]) / params.stddev[i]
                            : 0.0;
    return out;
}

std::pair<LabeledDataset, LabeledDataset> split_first_k(const LabeledDataset& ds,
                                                        std::size_t per_class_train_count) {
    std::size_t min_class = ds.size();
    for (std::size_t j = 0; j < ds.classes(); ++j)
        min_class = std::min(min_class, ds.class_size(j));
    if (per_class_train_count == 0 || per_class_train_count >= min_class)
        throw CountTooLarge("split: per-class train count " +
                            std::to_string(per_class_train_count) +
                            " not in [1, " + std::to_string(min_class) + ")");

    // Position of each sample within its own class, in file order.
    std::vector<std::size_t> within_class_pos(ds.size());
    for (std::size_t j = 0; j < ds.classes(); ++j)
        for (std::size_t k = 0; k < ds.class_index[j].size(); ++k)
            within_class_pos[ds.class_index[j][k]] = k;

    std::vector<std::size_t> train_cols, test_cols;
    for (std::size_t i = 0; i < ds.size(); ++i)
        (within_class_pos[i] < per_class_train_count ? train_cols : test_cols).push_back(i);

    auto take = [&](const std::vector<std::size_t>& cols) {
        Matrix data(ds.dim(), cols.size());
        std::vector<int> labels(cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k) {
            data.set_col(k, ds.data.col(cols[k]));
            labels[k] = ds.labels[cols[k]];
        }
        return make_dataset(std::move(data), std::move(labels), ds.class_names);
    };
    return {take(train_cols), take(test_cols)};
}

}  // namespace fisherkit
