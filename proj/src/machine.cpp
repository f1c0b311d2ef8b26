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
#include "qdm/machine.hpp"

#include <cmath>
#include <sstream>

#include "qdm/errors.hpp"
#include "qdm/kernels.hpp"
#include "qdm/rng.hpp"
#include "qdm/scenario.hpp"

namespace qdm {

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

void require_normalized(Complex a, Complex b, const char *what, double tol) {
    const double n = std::norm(a) + std::norm(b);
    if (!std::isfinite(n) || std::abs(n - 1.0) > tol) {
        throw ValidationError(std::string(what) + " amplitudes have squared norm " +
                              fmt(n) + ", expected 1 within " + fmt(tol));
    }
}

void require_distinct(RegisterId a, RegisterId b) {
    if (a == b) {
        throw LayoutError("control and target are the same register (" +
                          to_string(a) + ")");
    }
}

StateVector apply_canonical(StateVector state, std::size_t k,
                            const IterationSpec &spec) {
    const RegisterLayout &layout = state.layout();
    const std::size_t mem_bit = layout.memory_bit(k);
    if (state.slot_consumed(k)) {
        throw LayoutError("memory slot " + std::to_string(k) +
                          " was already written; every iteration needs a fresh slot");
    }
    const Tolerances tol;
    spec.validate(tol);

    const auto psi = state.data();
    kernels::apply_controlled_1q(psi, layout.control_bit(), layout.system_bit(),
                                 kernels::to_mat2(spec.u0.matrix()),
                                 kernels::to_mat2(spec.u1.matrix()));
    kernels::apply_cnot(psi, layout.control_bit(), mem_bit);
    kernels::apply_controlled_1q(psi, layout.policy_bit(), layout.system_bit(),
                                 kernels::to_mat2(spec.f0.matrix()),
                                 kernels::to_mat2(spec.f1.matrix()));
    kernels::apply_controlled_1q(psi, mem_bit, layout.policy_bit(),
                                 kernels::to_mat2(spec.v0.matrix()),
                                 kernels::to_mat2(spec.v1.matrix()));
    state.mark_consumed(k);
    return state;
}

} // namespace

std::size_t ket_index(std::string_view bits) {
    std::size_t index = 0;
    std::size_t count = 0;
    for (const char ch : bits) {
        if (ch == ' ' || ch == ',' || ch == ';') {
            continue;
        }
        if (ch != '0' && ch != '1') {
            throw ValidationError("ket '" + std::string(bits) +
                                  "' contains a non-binary character");
        }
        index = (index << 1) | static_cast<std::size_t>(ch - '0');
        ++count;
    }
    if (count == 0 || count > kMaxQubits) {
        throw ValidationError("ket '" + std::string(bits) +
                              "' must have between 1 and 20 bits");
    }
    return index;
}

StateVector::StateVector(RegisterLayout layout, std::vector<Complex> amplitudes,
                         const Tolerances &tol)
    : layout_(std::move(layout)), amps_(std::move(amplitudes)),
      consumed_(layout_.memory_slots(), false) {
    if (amps_.size() != layout_.dimension()) {
        throw ShapeError("state over " + std::to_string(layout_.total_qubits()) +
                         " qubits needs " + std::to_string(layout_.dimension()) +
                         " amplitudes, got " + std::to_string(amps_.size()));
    }
    for (const Complex &z : amps_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("state has non-finite amplitudes");
        }
    }
    if (const double dev = std::abs(kernels::norm_squared(amps_) - 1.0);
        dev > tol.norm) {
        throw ValidationError("state is not normalized (|norm^2 - 1| = " +
                              fmt(dev) + ")");
    }
}

StateVector StateVector::basis(RegisterLayout layout, std::size_t index) {
    if (index >= layout.dimension()) {
        throw ShapeError("basis index " + std::to_string(index) + " out of range");
    }
    std::vector<Complex> amps(layout.dimension());
    amps[index] = 1.0;
    return {std::move(layout), std::move(amps)};
}

double StateVector::norm() const { return std::sqrt(kernels::norm_squared(amps_)); }

bool StateVector::slot_consumed(std::size_t k) const {
    (void)layout_.memory_bit(k);
    return consumed_[k - 1];
}

void StateVector::mark_consumed(std::size_t k) {
    (void)layout_.memory_bit(k);
    consumed_[k - 1] = true;
}

std::string_view to_string(InitMode mode) {
    switch (mode) {
    case InitMode::uncorrelated:
        return "uncorrelated";
    case InitMode::correlated_c_to_p:
        return "correlated_c_to_p";
    case InitMode::copy_c_to_p_from_zero:
        return "copy_c_to_p_from_zero";
    }
    return "?";
}

std::optional<InitMode> parse_init_mode(std::string_view name) {
    for (const InitMode m : {InitMode::uncorrelated, InitMode::correlated_c_to_p,
                             InitMode::copy_c_to_p_from_zero}) {
        if (to_string(m) == name) {
            return m;
        }
    }
    return std::nullopt;
}

void InitSpec::validate(const Tolerances &tol) const {
    require_normalized(alpha, beta, "control (alpha, beta)", tol.norm);
    require_normalized(gamma, delta, "policy (gamma, delta)", tol.norm);
    if (mode == InitMode::copy_c_to_p_from_zero &&
        (std::abs(gamma - 1.0) > tol.norm || std::abs(delta) > tol.norm)) {
        throw ValidationError(
            "copy_c_to_p_from_zero requires the policy to start in |0> "
            "(gamma = 1, delta = 0)");
    }
    (void)resolve(system_init, tol.unitarity, "system_init");
}

void IterationSpec::validate(const Tolerances &tol) const {
    (void)resolve(u0, tol.unitarity, "u0");
    (void)resolve(u1, tol.unitarity, "u1");
    (void)resolve(f0, tol.unitarity, "f0");
    (void)resolve(f1, tol.unitarity, "f1");
    (void)resolve(v0, tol.unitarity, "v0");
    (void)resolve(v1, tol.unitarity, "v1");
    if (reflect) {
        (void)resolve(reflect->r0, tol.unitarity, "r0");
        (void)resolve(reflect->r1, tol.unitarity, "r1");
    }
}

StateVector initialize(const InitSpec &spec, const RegisterLayout &layout) {
    spec.validate();
    const Matrix sys = spec.system_init.matrix();
    const Complex control[2] = {spec.alpha, spec.beta};
    const Complex system[2] = {sys(0, 0), sys(1, 0)};
    const Complex policy[2] = {spec.gamma, spec.delta};

    std::vector<Complex> amps(layout.dimension());
    for (std::size_t c = 0; c < 2; ++c) {
        for (std::size_t s = 0; s < 2; ++s) {
            for (std::size_t p = 0; p < 2; ++p) {
                const std::size_t index = (c << layout.control_bit()) |
                                          (s << layout.system_bit()) |
                                          (p << layout.policy_bit());
                amps[index] = control[c] * system[s] * policy[p];
            }
        }
    }
    if (spec.mode != InitMode::uncorrelated) {
        kernels::apply_cnot(amps, layout.control_bit(), layout.policy_bit());
    }
    return {layout, std::move(amps)};
}

StateVector apply_controlled(StateVector state, RegisterId control,
                             RegisterId target, const GateSpec &g0,
                             const GateSpec &g1) {
    require_distinct(control, target);
    const std::size_t cbit = state.layout().bit(control);
    const std::size_t tbit = state.layout().bit(target);
    const Matrix m0 = resolve(g0, Tolerances{}.unitarity, "g0");
    const Matrix m1 = resolve(g1, Tolerances{}.unitarity, "g1");
    kernels::apply_controlled_1q(state.data(), cbit, tbit, kernels::to_mat2(m0),
                                 kernels::to_mat2(m1));
    return state;
}

StateVector write_memory(StateVector state, std::size_t k) {
    const std::size_t mem_bit = state.layout().memory_bit(k);
    kernels::apply_cnot(state.data(), state.layout().control_bit(), mem_bit);
    state.mark_consumed(k);
    return state;
}

StateVector iterate(StateVector state, std::size_t k, const IterationSpec &spec) {
    if (spec.extended()) {
        throw ModeError("iteration spec carries a reflect pair; use iterate_extended");
    }
    return apply_canonical(std::move(state), k, spec);
}

StateVector iterate_extended(StateVector state, std::size_t k,
                             const IterationSpec &spec) {
    if (!spec.extended()) {
        throw ModeError("iterate_extended needs a reflect pair (r0, r1)");
    }
    state = apply_canonical(std::move(state), k, spec);
    const RegisterLayout &layout = state.layout();
    kernels::apply_controlled_1q(state.data(), layout.policy_bit(),
                                 layout.control_bit(),
                                 kernels::to_mat2(spec.reflect->r0.matrix()),
                                 kernels::to_mat2(spec.reflect->r1.matrix()));
    return state;
}

StateVector run(const Scenario &scenario) {
    scenario.validate();
    const auto layout = RegisterLayout::with_slots(scenario.iterations.size());
    StateVector state = initialize(scenario.init, layout);
    for (std::size_t k = 1; k <= scenario.iterations.size(); ++k) {
        const IterationSpec &spec = scenario.iterations[k - 1];
        state = spec.extended() ? iterate_extended(std::move(state), k, spec)
                                : iterate(std::move(state), k, spec);
    }
    if (const double dev = std::abs(state.norm() - 1.0); dev > Tolerances{}.norm) {
        throw ValidationError("run lost normalization (|norm - 1| = " + fmt(dev) +
                              ")");
    }
    return state;
}

MeasurementResult project_control(const StateVector &state, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw ProjectionError("outcome must be 0 or 1");
    }
    const std::size_t bit = state.layout().control_bit();
    const double p1 = kernels::probability_one(state.amplitudes(), bit);
    const double p = outcome == 1 ? p1 : kernels::norm_squared(state.amplitudes()) - p1;
    if (!(p >= kPruneThreshold)) {
        throw ProjectionError("outcome " + std::to_string(outcome) +
                              " of C has zero probability");
    }
    StateVector collapsed = state;
    kernels::project_bit(collapsed.data(), bit, outcome, 1.0 / std::sqrt(p));
    return {outcome, std::move(collapsed), p};
}

MeasurementResult measure_control(const StateVector &state, std::uint64_t seed) {
    const double p1 =
        kernels::probability_one(state.amplitudes(), state.layout().control_bit());
    const double p0 = kernels::norm_squared(state.amplitudes()) - p1;
    CounterRng rng(seed);
    const int outcome = rng.uniform() < p0 ? 0 : 1;
    return project_control(state, outcome);
}

Matrix build_controlled_dilation(const Matrix &u0, const Matrix &u1,
                                 std::span<const std::size_t> env_dims) {
    std::size_t env = 1;
    for (const std::size_t d : env_dims) {
        if (d == 0) {
            throw ShapeError("environment dimensions must be positive");
        }
        if (env > (std::size_t{1} << kMaxQubits) / d) {
            throw CapacityError("environment dimension exceeds the global cap");
        }
        env *= d;
    }
    const std::size_t block = 2 * env;
    if (u0.dim() != block || u1.dim() != block) {
        throw ShapeError("dilation blocks must have dimension 2 * prod(env_dims) = " +
                         std::to_string(block) + ", got " + std::to_string(u0.dim()) +
                         " and " + std::to_string(u1.dim()));
    }
    const Tolerances tol;
    if (!check_unitary(u0, tol.unitarity) || !check_unitary(u1, tol.unitarity)) {
        throw ValidationError("dilation blocks must be unitary");
    }
    Matrix out(2 * block);
    for (std::size_t r = 0; r < block; ++r) {
        for (std::size_t c = 0; c < block; ++c) {
            out(r, c) = u0(r, c);
            out(block + r, block + c) = u1(r, c);
        }
    }
    return out;
}

} // namespace qdm
