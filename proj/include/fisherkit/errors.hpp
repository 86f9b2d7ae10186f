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
#ifndef FISHERKIT_ERRORS_HPP
#define FISHERKIT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fisherkit {

// Root of all toolkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Problems with user-supplied data or files (CLI exit code 3).
class DataError : public Error {
public:
    using Error::Error;
};

// Numerical failures inside solvers or fits (CLI exit code 4).
class NumericalError : public Error {
public:
    using Error::Error;
};

// Invalid option combinations or unusable requests (CLI exit code 2).
class ConfigError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public DataError {
public:
    using DataError::DataError;
};

class NotPositiveDefinite : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class NoConvergence : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class IrreparablySingular : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ZeroVector : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateDenominator : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateScatter : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class DegenerateData : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class RankDeficientBasis : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class VariantClassMismatch : public DataError {
public:
    using DataError::DataError;
};

class TooFewClasses : public DataError {
public:
    using DataError::DataError;
};

class TooManyClasses : public DataError {
public:
    using DataError::DataError;
};

class EmptyDataset : public DataError {
public:
    using DataError::DataError;
};

class RaggedRows : public DataError {
public:
    using DataError::DataError;
};

class CountTooLarge : public DataError {
public:
    using DataError::DataError;
};

// 1-based row/column position of the offending CSV cell.
class ParseError : public DataError {
public:
    ParseError(std::size_t row, std::size_t col, const std::string& what)
        : DataError("parse error at row " + std::to_string(row) + ", column " +
                    std::to_string(col) + ": " + what),
          row_(row),
          col_(col) {}
    std::size_t row() const { return row_; }
    std::size_t col() const { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// Malformed or unsupported model files.
class PersistenceError : public DataError {
public:
    using DataError::DataError;
};

}  // namespace fisherkit

#endif  // FISHERKIT_ERRORS_HPP
