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

/**
 * @file kernels.hpp
 *
 * In-place strided amplitude kernels. Each gate touches amplitude pairs that
 * differ only in the target bit, selected through bit masks, so the 2^N
 * global operator is never formed.
 *
 * Two implementations share one signature set:
 *  - `serial`   : plain loops, the reference the tests compare against;
 *  - `parallel` : the same loops distributed with OpenMP.
 * The unqualified functions pick `parallel` once the vector is large enough
 * to amortize thread start-up. Gate kernels update disjoint pairs, so both
 * variants produce bit-identical amplitudes; only the reductions may differ
 * in the last ulps.
 */

#include <array>
#include <cstddef>
#include <span>

#include "qdm/tensor.hpp"

namespace qdm::kernels {

/// Row-major 2x2 gate: {g00, g01, g10, g11}.
using Mat2 = std::array<Complex, 4>;

/// ShapeError unless `m` is 2x2.
[[nodiscard]] Mat2 to_mat2(const Matrix &m);

namespace serial {
void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g);
void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1);
void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target);
[[nodiscard]] double norm_squared(std::span<const Complex> psi);
/// Total weight on basis states with `bit` set.
[[nodiscard]] double probability_one(std::span<const Complex> psi,
                                     std::size_t bit);
/// Zeroes amplitudes whose `bit` differs from `value`, multiplies the rest
/// by `scale`.
void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale);
} // namespace serial

namespace parallel {
void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g);
void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1);
void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target);
[[nodiscard]] double norm_squared(std::span<const Complex> psi);
[[nodiscard]] double probability_one(std::span<const Complex> psi,
                                     std::size_t bit);
void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale);
/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
[[nodiscard]] int max_threads();
} // namespace parallel

/// Vectors at least this long go to the parallel kernels.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 14;

void apply_1q(std::span<Complex> psi, std::size_t target, const Mat2 &g);
void apply_controlled_1q(std::span<Complex> psi, std::size_t control,
                         std::size_t target, const Mat2 &g0, const Mat2 &g1);
void apply_cnot(std::span<Complex> psi, std::size_t control, std::size_t target);
[[nodiscard]] double norm_squared(std::span<const Complex> psi);
[[nodiscard]] double probability_one(std::span<const Complex> psi,
                                     std::size_t bit);
void project_bit(std::span<Complex> psi, std::size_t bit, int value,
                 double scale);

} // namespace qdm::kernels
