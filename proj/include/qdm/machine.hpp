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
 * @file machine.hpp
 *
 * The deliberating machine: a control qubit C, one fresh memory qubit per
 * iteration, a system qubit S and a policy qubit P, evolved by controlled
 * single-qubit gates. One canonical iteration k applies, in order,
 *
 *   1. controlled-U   C -> S   (u0 / u1)
 *   2. CNOT           C -> Mk  (memory write)
 *   3. controlled-F   P -> S   (f0 / f1, feedback from the current policy)
 *   4. controlled-V   Mk -> P  (v0 / v1, policy update)
 *
 * The extended iteration appends
 *
 *   5. controlled-R   P -> C   (r0 / r1, steering of the control)
 *
 * Feedback always precedes the policy update.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qdm/gates.hpp"
#include "qdm/layout.hpp"
#include "qdm/tensor.hpp"
#include "qdm/tolerances.hpp"

namespace qdm {

struct Scenario;

/// Basis index of a ket written as a bit string, most significant first.
/// Spaces, commas and semicolons are ignored: "1 000 0 1" == "100001".
[[nodiscard]] std::size_t ket_index(std::string_view bits);

/// Normalized global pure state over a RegisterLayout.
class StateVector {
  public:
    /// ShapeError on a length mismatch; ValidationError when the amplitudes
    /// are non-finite or not normalized within `tol.norm`.
    StateVector(RegisterLayout layout, std::vector<Complex> amplitudes,
                const Tolerances &tol = {});

    static StateVector basis(RegisterLayout layout, std::size_t index);

    [[nodiscard]] const RegisterLayout &layout() const noexcept { return layout_; }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Complex operator[](std::size_t index) const { return amps_[index]; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] double norm() const;

    /// Whether memory slot k has been consumed by an iteration.
    [[nodiscard]] bool slot_consumed(std::size_t k) const;

    /// Mutable access for kernels. Callers keep the state normalized.
    [[nodiscard]] std::span<Complex> data() noexcept { return amps_; }
    void mark_consumed(std::size_t k);

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    RegisterLayout layout_;
    std::vector<Complex> amps_;
    std::vector<bool> consumed_;
};

enum class InitMode { uncorrelated, correlated_c_to_p, copy_c_to_p_from_zero };

[[nodiscard]] std::string_view to_string(InitMode mode);
[[nodiscard]] std::optional<InitMode> parse_init_mode(std::string_view name);

/// Control amplitudes (alpha, beta), policy amplitudes (gamma, delta), how C
/// and P start out correlated, and the gate preparing S from |0>.
struct InitSpec {
    Complex alpha{1.0, 0.0};
    Complex beta{0.0, 0.0};
    Complex gamma{1.0, 0.0};
    Complex delta{0.0, 0.0};
    InitMode mode = InitMode::uncorrelated;
    GateSpec system_init;

    /// ValidationError on unnormalized amplitudes, a copy mode with P not
    /// starting in |0>, or a non-unitary system_init.
    void validate(const Tolerances &tol = {}) const;

    friend bool operator==(const InitSpec &, const InitSpec &) = default;
};

struct ReflectPair {
    GateSpec r0;
    GateSpec r1;
    friend bool operator==(const ReflectPair &, const ReflectPair &) = default;
};

/// Gate choices for one iteration. `reflect` present selects extended mode.
struct IterationSpec {
    GateSpec u0, u1;
    GateSpec f0, f1;
    GateSpec v0, v1;
    std::optional<ReflectPair> reflect;

    [[nodiscard]] bool extended() const noexcept { return reflect.has_value(); }
    /// ValidationError naming the first non-unitary gate.
    void validate(const Tolerances &tol = {}) const;

    friend bool operator==(const IterationSpec &, const IterationSpec &) = default;
};

/// Builds the initial global state. ValidationError if `spec` is invalid.
[[nodiscard]] StateVector initialize(const InitSpec &spec,
                                     const RegisterLayout &layout);

/// |0><0|_control (x) g0 + |1><1|_control (x) g1 acting on `target`.
/// LayoutError when control == target or either is not in the layout.
[[nodiscard]] StateVector apply_controlled(StateVector state, RegisterId control,
                                           RegisterId target, const GateSpec &g0,
                                           const GateSpec &g1);

/// CNOT C -> Mk. Marks slot k consumed. LayoutError when k is out of range.
[[nodiscard]] StateVector write_memory(StateVector state, std::size_t k);

/// One canonical iteration into slot k. ModeError if `spec` carries a
/// reflect pair; LayoutError if slot k is out of range or already consumed.
[[nodiscard]] StateVector iterate(StateVector state, std::size_t k,
                                  const IterationSpec &spec);

/// Canonical iteration followed by the policy-controlled rotation of C.
/// ModeError if `spec` has no reflect pair.
[[nodiscard]] StateVector iterate_extended(StateVector state, std::size_t k,
                                           const IterationSpec &spec);

/// Initializes and folds every iteration of `scenario`, returning the final
/// global state over a layout with one memory slot per iteration.
[[nodiscard]] StateVector run(const Scenario &scenario);

struct MeasurementResult {
    int outcome = 0;
    StateVector collapsed;
    double probability = 0.0; ///< Born weight of `outcome` before collapse.
};

/// Samples C in the computational basis with a generator keyed on `seed`.
[[nodiscard]] MeasurementResult measure_control(const StateVector &state,
                                                std::uint64_t seed);

/// Forces outcome `outcome` on C. ProjectionError if its weight is below
/// kPruneThreshold.
[[nodiscard]] MeasurementResult project_control(const StateVector &state,
                                                int outcome);

/**
 * |0><0|_C (x) u0 + |1><1|_C (x) u1 on C (x) S (x) E, where S is a qubit and
 * E the product of `env_dims`. ShapeError unless both blocks have dimension
 * 2 * prod(env_dims); ValidationError if a block is not unitary.
 */
[[nodiscard]] Matrix build_controlled_dilation(const Matrix &u0, const Matrix &u1,
                                               std::span<const std::size_t> env_dims);

} // namespace qdm
