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
 * @file oracle.hpp
 *
 * Reference evolution built from explicit Kronecker products of 2x2 blocks.
 * It shares no code with the strided kernels or with RegisterLayout's bit
 * arithmetic and exists to cross-check them; it is slow by design.
 */

#include <cstdint>
#include <vector>

#include "qdm/rng.hpp"
#include "qdm/scenario.hpp"

namespace qdm::oracle {

/// Kron position of each register in a run with n memory slots:
/// C = 0, Mk = k, S = n + 1, P = n + 2.
[[nodiscard]] std::size_t position(RegisterId reg, std::size_t n_slots);

/// |0><0|_control (x) g0 + |1><1|_control (x) g1 on `target`, identity
/// elsewhere, as a full 2^(n+3) matrix.
[[nodiscard]] Matrix global_controlled(std::size_t n_slots, RegisterId control,
                                       RegisterId target, const Matrix &g0,
                                       const Matrix &g1);

/// Global unitary of iteration k (1-based), including the reflective map
/// when `spec` carries one.
[[nodiscard]] Matrix iteration_unitary(std::size_t n_slots, std::size_t k,
                                       const IterationSpec &spec);

/// Product-state preparation followed by the C -> P copy when requested.
[[nodiscard]] std::vector<Complex> initial_state(const InitSpec &init,
                                                 std::size_t n_slots);

/// initial_state, then every iteration_unitary applied by dense mat_vec.
[[nodiscard]] std::vector<Complex> evolve(const Scenario &scenario);

/// e^{i a} rz(b) ry(c) rz(d) with the four angles drawn uniformly.
[[nodiscard]] Matrix random_unitary(CounterRng &rng);

/// Normalized random pair (z0, z1); both moduli are at least `floor`.
[[nodiscard]] std::pair<Complex, Complex> random_amplitudes(CounterRng &rng,
                                                            double floor = 0.05);

/// Canonical scenario with random raw gates and random init amplitudes.
[[nodiscard]] Scenario random_canonical_scenario(CounterRng &rng,
                                                 std::size_t iterations);

} // namespace qdm::oracle
