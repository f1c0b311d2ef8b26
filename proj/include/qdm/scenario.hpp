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
 * @file scenario.hpp
 *
 * Declarative scenario documents (JSON) and the built-in worked examples.
 *
 * A scenario document looks like
 *
 *     {
 *       "name": "pauli-flips",
 *       "init": {"alpha": 0.7071067811865476, "beta": [0.7071067811865476, 0],
 *                "gamma": 1, "delta": 0, "mode": "uncorrelated",
 *                "system_init": {"named": "identity"}},
 *       "iterations": [
 *         {"u0": {"named": "identity"}, "u1": {"named": "pauli_x"},
 *          "f1": {"named": "pauli_z"}, "v1": {"named": "pauli_x"},
 *          "r1": {"named": "real_rotation", "angle": "pi/4"}, "r0": ...}
 *       ],
 *       "analyses": ["branches", {"marginal": "M1"}, {"outcome": "S"},
 *                    {"separability": "S"}, {"witness": ["C", "M1"]}],
 *       "measure": {"seed": 7}
 *     }
 *
 * Amplitudes are a number or an [re, im] pair. Gates are
 * {"named": kind, "angle": radians-or-"M*pi/N"} or {"raw": [[z, z], [z, z]]}
 * with each z an [re, im] pair. Omitted f/v gates are the identity; an
 * iteration with an r0/r1 pair runs in extended mode.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdm/machine.hpp"

namespace qdm {

enum class AnalysisKind { branches, marginal, outcome, separability, witness };

[[nodiscard]] std::string_view to_string(AnalysisKind kind);

struct AnalysisRequest {
    AnalysisKind kind = AnalysisKind::branches;
    std::vector<RegisterId> registers; ///< empty, one, or two (witness)

    friend bool operator==(const AnalysisRequest &,
                           const AnalysisRequest &) = default;
};

struct MeasureRequest {
    std::uint64_t seed = 0;
    friend bool operator==(const MeasureRequest &, const MeasureRequest &) = default;
};

enum class RunMode { canonical, extended };

struct Scenario {
    std::string name;
    InitSpec init;
    std::vector<IterationSpec> iterations;
    std::vector<AnalysisRequest> analyses;
    std::optional<MeasureRequest> measure;

    /// Extended iff some iteration carries a reflect pair.
    [[nodiscard]] RunMode mode() const noexcept;

    /// ValidationError on any broken invariant: bad init, non-unitary gate,
    /// too many iterations, analysis of a register the run will not have.
    void validate(const Tolerances &tol = {}) const;

    friend bool operator==(const Scenario &, const Scenario &) = default;
};

/// Parses and validates a scenario document. ParseError (with a field path)
/// for malformed structure, ValidationError for well-formed but invalid values.
[[nodiscard]] Scenario parse_scenario(std::string_view text);

/// Canonical document for `scenario`; parse_scenario inverts it exactly.
[[nodiscard]] std::string serialize_scenario(const Scenario &scenario);

struct BuiltinScenario {
    std::string name;
    std::string description;
    Scenario scenario;
};

/// pauli-flips, rotations-nofeedback, rotations-feedback, reinforce-two-step.
[[nodiscard]] std::vector<BuiltinScenario> builtin_scenarios();

[[nodiscard]] std::optional<Scenario> find_builtin(std::string_view name);

/// Three iterations; C branches flip S with X, P feeds back Z, memory flips P.
[[nodiscard]] Scenario pauli_flips();

/// Three iterations of rx(+theta)/rx(-theta) on S with theta = pi/3, P copied
/// from C; `with_feedback` adds the policy-controlled rx(+-pi/12) push.
[[nodiscard]] Scenario rotations(bool with_feedback);

/// Two iterations with trivial system dynamics; the first flips P on the
/// C = 1 branch and then rotates C by real_rotation(theta) where P = 1.
[[nodiscard]] Scenario reinforce_two_step(Complex alpha, Complex beta,
                                          Angle theta);

} // namespace qdm
