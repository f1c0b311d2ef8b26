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
#include <cstdint>

#include "kernel_detail.hpp"

#if defined(_OPENMP)
#include <omp.h>
#define QDM_OMP_FOR _Pragma("omp parallel for schedule(static)")
// Reductions always accumulate into a local named `acc`.
#define QDM_OMP_REDUCE_ACC _Pragma("omp parallel for schedule(static) reduction(+ : acc)")
#else
#define QDM_OMP_FOR
#define QDM_OMP_REDUCE_ACC
#endif

namespace qdm::kernels::parallel {

using detail::apply_pair;
using detail::insert_zero;

// OpenMP wants a signed induction variable.
using Index = std::int64_t;

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g) {
    const std::size_t tmask = std::size_t{1} << target;
    const auto half = static_cast<Index>(psi.size() / 2);
    Complex *data = psi.data();
    QDM_OMP_FOR
    for (Index i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(static_cast<std::size_t>(i), target);
        apply_pair(data[i0], data[i0 | tmask], g);
    }
}

void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    const auto quarter = static_cast<Index>(psi.size() / 4);
    Complex *data = psi.data();
    QDM_OMP_FOR
    for (Index i = 0; i < quarter; ++i) {
        const std::size_t base =
            insert_zero(insert_zero(static_cast<std::size_t>(i), lo), hi);
        apply_pair(data[base], data[base | tmask], g0);
        apply_pair(data[base | cmask], data[base | cmask | tmask], g1);
    }
}

void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    const auto quarter = static_cast<Index>(psi.size() / 4);
    Complex *data = psi.data();
    QDM_OMP_FOR
    for (Index i = 0; i < quarter; ++i) {
        const std::size_t base =
            insert_zero(insert_zero(static_cast<std::size_t>(i), lo), hi) | cmask;
        std::swap(data[base], data[base | tmask]);
    }
}

double norm_squared(std::span<const Complex> psi) {
    const auto n = static_cast<Index>(psi.size());
    const Complex *data = psi.data();
    double acc = 0.0;
    QDM_OMP_REDUCE_ACC
    for (Index i = 0; i < n; ++i) {
        acc += std::norm(data[i]);
    }
    return acc;
}

double probability_one(std::span<const Complex> psi, std::size_t bit) {
    const std::size_t mask = std::size_t{1} << bit;
    const auto half = static_cast<Index>(psi.size() / 2);
    const Complex *data = psi.data();
    double acc = 0.0;
    QDM_OMP_REDUCE_ACC
    for (Index i = 0; i < half; ++i) {
        acc += std::norm(data[insert_zero(static_cast<std::size_t>(i), bit) | mask]);
    }
    return acc;
}

void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale) {
    const std::size_t mask = std::size_t{1} << bit;
    const auto half = static_cast<Index>(psi.size() / 2);
    Complex *data = psi.data();
    QDM_OMP_FOR
    for (Index i = 0; i < half; ++i) {
        const std::size_t i0 = insert_zero(static_cast<std::size_t>(i), bit);
        Complex &keep = value ? data[i0 | mask] : data[i0];
        Complex &drop = value ? data[i0] : data[i0 | mask];
        keep *= scale;
        drop = Complex{};
    }
}

} // namespace qdm::kernels::parallel
