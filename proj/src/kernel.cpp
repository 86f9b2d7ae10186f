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
#include "fisherkit/kernel.hpp"

#include <cmath>

namespace fisherkit {

KernelSpec KernelSpec::linear(double c1) { return {KernelKind::Linear, c1, 0.0, 1.0, 1.0}; }

KernelSpec KernelSpec::polynomial(double c1, double c2, double c3) {
    KernelSpec spec{KernelKind::Polynomial, c1, c2, c3, 1.0};
    spec.validate();
    return spec;
}

KernelSpec KernelSpec::gaussian(double sigma) {
    KernelSpec spec{KernelKind::Gaussian, 0.0, 0.0, 1.0, sigma};
    spec.validate();
    return spec;
}

KernelSpec KernelSpec::sigmoid(double c1, double c2) {
    return {KernelKind::Sigmoid, c1, c2, 1.0, 1.0};
}

KernelSpec KernelSpec::cosine() { return {KernelKind::Cosine, 0.0, 0.0, 1.0, 1.0}; }

void KernelSpec::validate() const {
    if (kind == KernelKind::Gaussian && sigma <= 0.0)
        throw ConfigError("gaussian kernel needs sigma > 0");
    if (kind == KernelKind::Polynomial && c3 < 1.0)
        throw ConfigError("polynomial kernel needs degree >= 1");
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x1,
                   std::span<const double> x2) {
    if (x1.size() != x2.size()) throw DimensionMismatch("kernel_eval: length mismatch");
    switch (spec.kind) {
        case KernelKind::Linear:
            return dot(x1, x2) + spec.c1;
        case KernelKind::Polynomial:
            return std::pow(spec.c1 * dot(x1, x2) + spec.c2, spec.c3);
        case KernelKind::Gaussian:
            return std::exp(-squared_distance(x1, x2) / (2.0 * spec.sigma * spec.sigma));
        case KernelKind::Sigmoid:
            return std::tanh(spec.c1 * dot(x1, x2) + spec.c2);
        case KernelKind::Cosine: {
            const double n1 = norm2(x1);
            const double n2 = norm2(x2);
            if (n1 == 0.0 || n2 == 0.0) return 0.0;
            return dot(x1, x2) / (n1 * n2);
        }
    }
    throw DataError("unknown kernel kind");
}

Matrix gram(const KernelSpec& spec, const Matrix& x1, const Matrix& x2) {
    if (x1.rows() != x2.rows()) throw DimensionMismatch("gram: sample dimensions differ");
    spec.validate();
    Matrix k(x1.cols(), x2.cols());
    for (std::size_t b = 0; b < x2.cols(); ++b)
        for (std::size_t a = 0; a < x1.cols(); ++a)
            k(a, b) = kernel_eval(spec, x1.col(a), x2.col(b));
    return k;
}

const char* to_string(KernelKind k) {
    switch (k) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Polynomial: return "polynomial";
        case KernelKind::Gaussian: return "gaussian";
        case KernelKind::Sigmoid: return "sigmoid";
        case KernelKind::Cosine: return "cosine";
    }
    return "?";
}

KernelKind kernel_kind_from_string(const std::string& s) {
    if (s == "linear") return KernelKind::Linear;
    if (s == "polynomial") return KernelKind::Polynomial;
    if (s == "gaussian" || s == "rbf") return KernelKind::Gaussian;
    if (s == "sigmoid") return KernelKind::Sigmoid;
    if (s == "cosine") return KernelKind::Cosine;
    throw ConfigError("unknown kernel '" + s + "'");
}

}  // namespace fisherkit
