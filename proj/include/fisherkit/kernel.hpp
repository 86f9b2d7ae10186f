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
#ifndef FISHERKIT_KERNEL_HPP
#define FISHERKIT_KERNEL_HPP

#include <span>
#include <string>

#include "fisherkit/matrix.hpp"

namespace fisherkit {

enum class KernelKind { Linear, Polynomial, Gaussian, Sigmoid, Cosine };

/// Kernel function selector plus its scalar constants.
///   Linear      x1ᵀx2 + c1
///   Polynomial  (c1 x1ᵀx2 + c2)^c3
///   Gaussian    exp(-|x1 - x2|² / 2 sigma²)
///   Sigmoid     tanh(c1 x1ᵀx2 + c2)
///   Cosine      x1ᵀx2 / (|x1| |x2|), 0 when either argument is zero
struct KernelSpec {
    KernelKind kind = KernelKind::Linear;
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 1.0;
    double sigma = 1.0;

    static KernelSpec linear(double c1 = 0.0);
    static KernelSpec polynomial(double c1, double c2, double c3);
    static KernelSpec gaussian(double sigma);
    static KernelSpec sigmoid(double c1, double c2);
    static KernelSpec cosine();

    /// Checks the per-kind parameter constraints (sigma > 0, degree >= 1).
    void validate() const;
};

double kernel_eval(const KernelSpec& spec, std::span<const double> x1,
                   std::span<const double> x2);

/// Gram matrix: entry (a, b) = k(column a of X1, column b of X2).
Matrix gram(const KernelSpec& spec, const Matrix& x1, const Matrix& x2);

const char* to_string(KernelKind k);
KernelKind kernel_kind_from_string(const std::string& s);

}  // namespace fisherkit

#endif  // FISHERKIT_KERNEL_HPP
