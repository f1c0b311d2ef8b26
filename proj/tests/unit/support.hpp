// Copyright 2026 The QDM Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Shared helpers for the unit tests: hand-rolled generators driven by
// CounterRng and entry-wise comparisons.

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "qdm/machine.hpp"
#include "qdm/oracle.hpp"
#include "qdm/rng.hpp"

namespace qdm::test {

inline constexpr double kPi = std::numbers::pi;
inline const Complex kI{0.0, 1.0};
inline const double kH = 1.0 / std::sqrt(2.0);

inline double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        return INFINITY;
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

inline double max_diff(const Matrix &a, const Matrix &b) {
    return a.dim() == b.dim() ? max_abs_diff(a, b) : INFINITY;
}

inline std::vector<Complex> random_state(CounterRng &rng, std::size_t dim) {
    std::vector<Complex> v(dim);
    double n2 = 0.0;
    for (Complex &z : v) {
        // Box-Muller gives an isotropic complex Gaussian vector.
        const double r = std::sqrt(-2.0 * std::log(1.0 - rng.uniform()));
        const double t = 2.0 * kPi * rng.uniform();
        z = std::polar(r, t);
        n2 += std::norm(z);
    }
    for (Complex &z : v) {
        z /= std::sqrt(n2);
    }
    return v;
}

inline Matrix random_matrix(CounterRng &rng, std::size_t dim) {
    Matrix m(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m(r, c) = {2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0};
        }
    }
    return m;
}

inline GateSpec random_gate(CounterRng &rng) { return GateSpec::raw(oracle::random_unitary(rng)); }

/// |a><b| for two vectors of equal length.
inline Matrix outer(std::span<const Complex> a, std::span<const Complex> b) {
    Matrix m(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < b.size(); ++c) {
            m(r, c) = a[r] * std::conj(b[c]);
        }
    }
    return m;
}

} // namespace qdm::test
