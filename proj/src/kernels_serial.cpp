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
#include <string>

#include "kernel_detail.hpp"
#include "qdm/errors.hpp"

namespace qdm::kernels {

using detail::apply_pair;
using detail::insert_zero;

Mat2 to_mat2(const Matrix &m) {
    if (m.dim() != 2) {
        throw ShapeError("expected a 2x2 gate, got dim " + std::to_string(m.dim()));
    }
    return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
}

namespace serial {

void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g) {
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t half = psi.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, target);
        apply_pair(psi[i0], psi[i0 | tmask], g);
    }
}

void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    const std::size_t quarter = psi.size() / 4;
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_zero(insert_zero(i, lo), hi);
        apply_pair(psi[base], psi[base | tmask], g0);
        apply_pair(psi[base | cmask], psi[base | cmask | tmask], g1);
    }
}

void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    const std::size_t quarter = psi.size() / 4;
    for (std::size_t i = 0; i < quarter; ++i) {
        const std::size_t base = insert_zero(insert_zero(i, lo), hi) | cmask;
        std::swap(psi[base], psi[base | tmask]);
    }
}

double norm_squared(std::span<const Complex> psi) {
    double acc = 0.0;
    for (const Complex &z : psi) {
        acc += std::norm(z);
    }
    return acc;
}

double probability_one(std::span<const Complex> psi, std::size_t bit) {
    const std::size_t mask = std::size_t{1} << bit;
    const std::size_t half = psi.size() / 2;
    double acc = 0.0;
    for (std::size_t i = 0; i < half; ++i) {
        acc += std::norm(psi[insert_zero(i, bit) | mask]);
    }
    return acc;
}

void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale) {
    const std::size_t mask = std::size_t{1} << bit;
    const std::size_t half = psi.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(i, bit);
        Complex &keep = value ? psi[i0 | mask] : psi[i0];
        Complex &drop = value ? psi[i0] : psi[i0 | mask];
        keep *= scale;
        drop = Complex{};
    }
}

} // namespace serial

void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g) {
    if (psi.size() >= kParallelThreshold) {
        parallel::apply_1q(psi, target, g);
    } else {
        serial::apply_1q(psi, target, g);
    }
}

void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1) {
    if (psi.size() >= kParallelThreshold) {
        parallel::apply_controlled_1q(psi, control, target, g0, g1);
    } else {
        serial::apply_controlled_1q(psi, control, target, g0, g1);
    }
}

void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target) {
    if (psi.size() >= kParallelThreshold) {
        parallel::apply_cnot(psi, control, target);
    } else {
        serial::apply_cnot(psi, control, target);
    }
}

double norm_squared(std::span<const Complex> psi) {
    return psi.size() >= kParallelThreshold ? parallel::norm_squared(psi)
                                            : serial::norm_squared(psi);
}

double probability_one(std::span<const Complex> psi, std::size_t bit) {
    return psi.size() >= kParallelThreshold ? parallel::probability_one(psi, bit)
                                            : serial::probability_one(psi, bit);
}

void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale) {
    if (psi.size() >= kParallelThreshold) {
        parallel::project_bit(psi, bit, value, scale);
    } else {
        serial::project_bit(psi, bit, value, scale);
    }
}

} // namespace qdm::kernels
