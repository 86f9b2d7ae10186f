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
#ifndef FISHERKIT_MODEL_IO_HPP
#define FISHERKIT_MODEL_IO_HPP

#include <iosfwd>
#include <string>
#include <variant>

#include "fisherkit/fda.hpp"
#include "fisherkit/forest.hpp"
#include "fisherkit/kernel_fda.hpp"

namespace fisherkit {

/// Self-describing text container for fitted models. The first line carries
/// the format version and is rejected when unknown; floats are printed with
/// 17 significant digits so that parse(print(m)) reproduces every value
/// bit for bit.
void write_model(std::ostream& out, const LinearSubspaceModel& model);
void write_model(std::ostream& out, const KernelSubspaceModel& model);
void write_model(std::ostream& out, const ForestModel& model);

void save_model(const std::string& path, const LinearSubspaceModel& model);
void save_model(const std::string& path, const KernelSubspaceModel& model);
void save_model(const std::string& path, const ForestModel& model);

LinearSubspaceModel read_linear_model(std::istream& in);
KernelSubspaceModel read_kernel_model(std::istream& in);
ForestModel read_forest_model(std::istream& in);

using AnyModel = std::variant<LinearSubspaceModel, KernelSubspaceModel, ForestModel>;

AnyModel load_model(const std::string& path);

/// Shortest decimal form that round-trips the exact double (%.17g).
std::string format_double(double value);

}  // namespace fisherkit

#endif  // FISHERKIT_MODEL_IO_HPP
