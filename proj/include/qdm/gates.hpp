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

#include <optional>
#include <string>
#include <string_view>

#include "qdm/tensor.hpp"

namespace qdm {

enum class GateKind {
    identity,
    pauli_x,
    pauli_y,
    pauli_z,
    hadamard,
    rx,
    ry,
    rz,
    real_rotation,
    raw,
};

[[nodiscard]] std::string_view to_string(GateKind kind);
[[nodiscard]] std::optional<GateKind> parse_gate_kind(std::string_view name);
[[nodiscard]] bool takes_angle(GateKind kind);

/// An angle in radians. `text` keeps the symbolic form it was written in
/// ("pi/3", "-5*pi/4"), so documents re-emit what the author typed.
/// Equality looks at the value only.
struct Angle {
    double radians = 0.0;
    std::string text;

    static Angle of(double radians) { return {radians, {}}; }
    /// Parses "pi", "-pi/3", "5*pi/4", "0.25". Throws ValidationError.
    static Angle parse(std::string_view expr);

    friend bool operator==(const Angle &a, const Angle &b) {
        return a.radians == b.radians;
    }
};

/**
 * A single-qubit gate by name, or a raw 2x2 matrix.
 *
 *   rx(phi)            = cos(phi/2) I - i sin(phi/2) X
 *   ry(phi)            = cos(phi/2) I - i sin(phi/2) Y
 *   rz(phi)            = diag(e^{-i phi/2}, e^{i phi/2})
 *   real_rotation(phi) = ((cos phi, -sin phi), (sin phi, cos phi))
 */
struct GateSpec {
    GateKind kind = GateKind::identity;
    Angle angle;
    std::optional<Matrix> raw_matrix;

    static GateSpec identity() { return {}; }
    static GateSpec pauli_x() { return {GateKind::pauli_x, {}, {}}; }
    static GateSpec pauli_y() { return {GateKind::pauli_y, {}, {}}; }
    static GateSpec pauli_z() { return {GateKind::pauli_z, {}, {}}; }
    static GateSpec hadamard() { return {GateKind::hadamard, {}, {}}; }
    static GateSpec rx(Angle a) { return {GateKind::rx, std::move(a), {}}; }
    static GateSpec ry(Angle a) { return {GateKind::ry, std::move(a), {}}; }
    static GateSpec rz(Angle a) { return {GateKind::rz, std::move(a), {}}; }
    static GateSpec real_rotation(Angle a) {
        return {GateKind::real_rotation, std::move(a), {}};
    }
    static GateSpec rx(double phi) { return rx(Angle::of(phi)); }
    static GateSpec ry(double phi) { return ry(Angle::of(phi)); }
    static GateSpec rz(double phi) { return rz(Angle::of(phi)); }
    static GateSpec real_rotation(double phi) {
        return real_rotation(Angle::of(phi));
    }
    static GateSpec raw(Matrix m) { return {GateKind::raw, {}, std::move(m)}; }

    /// The 2x2 matrix, unchecked. ShapeError for a raw gate that is not 2x2.
    [[nodiscard]] Matrix matrix() const;

    friend bool operator==(const GateSpec &, const GateSpec &) = default;
};

/// "rx(-pi/3)", "pauli_x", "raw".
[[nodiscard]] std::string describe(const GateSpec &gate);

/// The matrix of `gate`, or ValidationError naming `label` and the measured
/// deviation when it is not unitary within `tol`.
[[nodiscard]] Matrix resolve(const GateSpec &gate, double tol = 1e-9,
                             std::string_view label = "gate");

} // namespace qdm
