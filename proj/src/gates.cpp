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
#include "qdm/gates.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qdm/errors.hpp"

namespace qdm {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 10> kNames{{
    {GateKind::identity, "identity"},
    {GateKind::pauli_x, "pauli_x"},
    {GateKind::pauli_y, "pauli_y"},
    {GateKind::pauli_z, "pauli_z"},
    {GateKind::hadamard, "hadamard"},
    {GateKind::rx, "rx"},
    {GateKind::ry, "ry"},
    {GateKind::rz, "rz"},
    {GateKind::real_rotation, "real_rotation"},
    {GateKind::raw, "raw"},
}};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double v = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || end != s.data() + s.size() ||
        !std::isfinite(v)) {
        return std::nullopt;
    }
    return v;
}

} // namespace

std::string_view to_string(GateKind kind) {
    for (const auto &[k, name] : kNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

std::optional<GateKind> parse_gate_kind(std::string_view name) {
    for (const auto &[k, n] : kNames) {
        if (n == name) {
            return k;
        }
    }
    return std::nullopt;
}

bool takes_angle(GateKind kind) {
    return kind == GateKind::rx || kind == GateKind::ry ||
           kind == GateKind::rz || kind == GateKind::real_rotation;
}

Angle Angle::parse(std::string_view expr) {
    const std::string original(trim(expr));
    std::string_view s = original;
    const auto fail = [&]() -> Angle {
        throw ValidationError("cannot parse angle '" + original +
                              "' (expected a number, 'pi', 'pi/N' or 'M*pi/N')");
    };
    if (const auto v = parse_number(s)) {
        return {*v, original};
    }
    double sign = 1.0;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        sign = s.front() == '-' ? -1.0 : 1.0;
        s = trim(s.substr(1));
    }
    const auto pi_at = s.find("pi");
    if (pi_at == std::string_view::npos) {
        return fail();
    }
    double numerator = 1.0;
    if (pi_at > 0) {
        std::string_view head = trim(s.substr(0, pi_at));
        if (head.empty() || head.back() != '*') {
            return fail();
        }
        head.remove_suffix(1);
        const auto m = parse_number(head);
        if (!m) {
            return fail();
        }
        numerator = *m;
    }
    double denominator = 1.0;
    std::string_view tail = trim(s.substr(pi_at + 2));
    if (!tail.empty()) {
        if (tail.front() != '/') {
            return fail();
        }
        const auto n = parse_number(tail.substr(1));
        if (!n || *n == 0.0) {
            return fail();
        }
        denominator = *n;
    }
    return {sign * numerator * std::numbers::pi / denominator, original};
}

Matrix GateSpec::matrix() const {
    using namespace std::complex_literals;
    const double phi = angle.radians;
    switch (kind) {
    case GateKind::identity:
        return Matrix::identity(2);
    case GateKind::pauli_x:
        return Matrix{{0.0, 1.0}, {1.0, 0.0}};
    case GateKind::pauli_y:
        return Matrix{{0.0, -1i}, {1i, 0.0}};
    case GateKind::pauli_z:
        return Matrix{{1.0, 0.0}, {0.0, -1.0}};
    case GateKind::hadamard: {
        const double h = std::numbers::sqrt2 / 2.0;
        return Matrix{{h, h}, {h, -h}};
    }
    case GateKind::rx: {
        const double c = std::cos(phi / 2.0);
        const double s = std::sin(phi / 2.0);
        return Matrix{{c, -1i * s}, {-1i * s, c}};
    }
    case GateKind::ry: {
        const double c = std::cos(phi / 2.0);
        const double s = std::sin(phi / 2.0);
        return Matrix{{c, -s}, {s, c}};
    }
    case GateKind::rz:
        return Matrix{{std::polar(1.0, -phi / 2.0), 0.0},
                      {0.0, std::polar(1.0, phi / 2.0)}};
    case GateKind::real_rotation: {
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        return Matrix{{c, -s}, {s, c}};
    }
    case GateKind::raw:
        if (!raw_matrix || raw_matrix->dim() != 2) {
            throw ShapeError("raw gate must carry a 2x2 matrix");
        }
        return *raw_matrix;
    }
    return Matrix::identity(2);
}

std::string describe(const GateSpec &gate) {
    std::string out(to_string(gate.kind));
    if (takes_angle(gate.kind)) {
        if (!gate.angle.text.empty()) {
            out += "(" + gate.angle.text + ")";
        } else {
            std::ostringstream os;
            os.precision(17);
            os << gate.angle.radians;
            out += "(" + os.str() + ")";
        }
    }
    return out;
}

Matrix resolve(const GateSpec &gate, double tol, std::string_view label) {
    Matrix m = gate.matrix();
    if (!m.is_finite()) {
        throw ValidationError(std::string(label) + " " + describe(gate) +
                              " has non-finite entries");
    }
    if (const double dev = unitarity_deviation(m); dev > tol) {
        std::ostringstream os;
        os << label << " " << describe(gate)
           << " is not unitary: max |U^dagger U - I| = " << dev;
        throw ValidationError(os.str());
    }
    return m;
}

} // namespace qdm
