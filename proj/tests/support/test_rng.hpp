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
#ifndef FISHERKIT_TESTS_SUPPORT_TEST_RNG_HPP
#define FISHERKIT_TESTS_SUPPORT_TEST_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fisherkit/matrix.hpp"

namespace fisherkit::testsupport {

// Deterministic generator for test data. Uniform and gaussian draws are
// built directly on the mt19937_64 bit stream instead of the standard
// distributions, so the numbers are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian() {
        // Box-Muller; one value per call keeps the stream simple.
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    std::vector<double> gaussian_vector(std::size_t n) {
        std::vector<double> v(n);
        for (double& x : v) x = gaussian();
        return v;
    }

    std::vector<double> uniform_vector(std::size_t n, double lo, double hi) {
        std::vector<double> v(n);
        for (double& x : v) x = uniform(lo, hi);
        return v;
    }

    Matrix uniform_matrix(std::size_t rows, std::size_t cols, double lo, double hi) {
        Matrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = uniform(lo, hi);
        return m;
    }

    Matrix gaussian_matrix(std::size_t rows, std::size_t cols) {
        Matrix m(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = gaussian();
        return m;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

private:
    std::mt19937_64 engine_;
};

inline SymMatrix random_symmetric(Rng& rng, std::size_t n) {
    return SymMatrix(rng.uniform_matrix(n, n, -1.0, 1.0));
}

// A Aᵀ + I is comfortably positive definite.
inline SymMatrix random_spd(Rng& rng, std::size_t n) {
    const Matrix a = rng.uniform_matrix(n, n, -1.0, 1.0);
    Matrix s = a * a.transposed();
    for (std::size_t i = 0; i < n; ++i) s(i, i) += 1.0;
    return SymMatrix(std::move(s));
}

inline std::vector<double> random_unit_vector(Rng& rng, std::size_t n) {
    std::vector<double> v = rng.gaussian_vector(n);
    double norm = norm2(v);
    while (norm == 0.0) {
        v = rng.gaussian_vector(n);
        norm = norm2(v);
    }
    scale(v, 1.0 / norm);
    return v;
}

}  // namespace fisherkit::testsupport

#endif  // FISHERKIT_TESTS_SUPPORT_TEST_RNG_HPP
