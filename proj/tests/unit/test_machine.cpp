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
#include <catch_amalgamated.hpp>

#include <tuple>

#include "qdm/analysis.hpp"
#include "qdm/errors.hpp"
#include "qdm/machine.hpp"
#include "qdm/scenario.hpp"
#include "support.hpp"

using namespace qdm;
using namespace qdm::test;

namespace {

std::vector<Complex> ket(std::size_t dim, std::initializer_list<std::pair<const char *, Complex>> terms) {
    std::vector<Complex> v(dim);
    for (const auto &[bits, z] : terms) {
        v[ket_index(bits)] += z;
    }
    return v;
}

InitSpec halves(InitMode mode = InitMode::uncorrelated) {
    InitSpec init;
    init.alpha = kH;
    init.beta = kH;
    init.mode = mode;
    return init;
}

IterationSpec pauli_spec() {
    IterationSpec it;
    it.u1 = GateSpec::pauli_x();
    it.f1 = GateSpec::pauli_z();
    it.v1 = GateSpec::pauli_x();
    return it;
}

} // namespace

TEST_CASE("ket_index", "[machine]") {
    CHECK(ket_index("1 000 0 1") == 0b100001);
    CHECK(ket_index("1,0;1") == 0b101);
    CHECK_THROWS_AS(ket_index("12"), ValidationError);
    CHECK_THROWS_AS(ket_index(""), ValidationError);
}

TEST_CASE("StateVector validates its amplitudes", "[machine]") {
    const RegisterLayout layout = build_layout(1);
    CHECK_THROWS_AS(StateVector(layout, std::vector<Complex>(8)), ShapeError);
    CHECK_THROWS_AS(StateVector(layout, std::vector<Complex>(16)), ValidationError);
    std::vector<Complex> nan(16);
    nan[0] = 1.0;
    nan[1] = NAN;
    CHECK_THROWS_AS(StateVector(layout, nan), ValidationError);
    CHECK(StateVector::basis(layout, 3)[3] == Complex(1.0));
}

TEST_CASE("initialize: copy mode puts P in C's basis state", "[machine]") {
    const StateVector psi = initialize(halves(InitMode::copy_c_to_p_from_zero), build_layout(3));
    const auto expected = ket(64, {{"0 000 0 0", kH}, {"1 000 0 1", kH}});
    CHECK(max_diff(psi.amplitudes(), expected) < 1e-16);
}

TEST_CASE("initialize: alpha = 1 gives the all-zero basis state", "[machine]") {
    const StateVector psi = initialize(InitSpec{}, build_layout(2));
    CHECK(psi[0] == Complex(1.0));
    CHECK(psi.norm() == 1.0);
}

TEST_CASE("initialize: correlated mode amplitudes", "[machine][property]") {
    CounterRng rng(41);
    for (int t = 0; t < 20; ++t) {
        InitSpec init;
        std::tie(init.alpha, init.beta) = oracle::random_amplitudes(rng);
        std::tie(init.gamma, init.delta) = oracle::random_amplitudes(rng);
        init.mode = InitMode::correlated_c_to_p;
        const StateVector psi = initialize(init, build_layout(1));
        const auto expected = ket(16, {{"0 0 0 0", init.alpha * init.gamma},
                                       {"0 0 0 1", init.alpha * init.delta},
                                       {"1 0 0 0", init.beta * init.delta},
                                       {"1 0 0 1", init.beta * init.gamma}});
        CHECK(max_diff(psi.amplitudes(), expected) < 1e-15);
    }
}

TEST_CASE("initialize: system_init prepares S", "[machine]") {
    InitSpec init;
    init.system_init = GateSpec::hadamard();
    const StateVector psi = initialize(init, build_layout(1));
    CHECK(max_diff(psi.amplitudes(), ket(16, {{"0 0 0 0", kH}, {"0 0 1 0", kH}})) < 1e-15);
}

TEST_CASE("initialize rejects invalid specs", "[machine]") {
    InitSpec bad;
    bad.alpha = std::sqrt(0.5);
    bad.beta = std::sqrt(0.4);
    CHECK_THROWS_AS(initialize(bad, build_layout(1)), ValidationError);

    InitSpec copy = halves(InitMode::copy_c_to_p_from_zero);
    copy.gamma = kH;
    copy.delta = kH;
    CHECK_THROWS_AS(initialize(copy, build_layout(1)), ValidationError);

    InitSpec raw = halves();
    raw.system_init = GateSpec::raw(Matrix{{1.0, 0.0}, {0.0, 2.0}});
    CHECK_THROWS_AS(initialize(raw, build_layout(1)), ValidationError);
}

TEST_CASE("apply_controlled acts as a switch", "[machine]") {
    const StateVector psi0 = initialize(halves(), build_layout(1));
    const StateVector psi = apply_controlled(psi0, RegisterId::control(), RegisterId::system(),
                                             GateSpec::identity(), GateSpec::pauli_x());
    CHECK(max_diff(psi.amplitudes(), ket(16, {{"0 0 0 0", kH}, {"1 0 1 0", kH}})) < 1e-16);

    const StateVector same = apply_controlled(psi0, RegisterId::control(), RegisterId::system(),
                                              GateSpec::identity(), GateSpec::identity());
    CHECK(same.amplitudes()[0] == psi0.amplitudes()[0]);
    CHECK(max_diff(same.amplitudes(), psi0.amplitudes()) == 0.0);

    InitSpec one;
    one.alpha = 0.0;
    one.beta = 1.0;
    const StateVector flipped =
        apply_controlled(initialize(one, build_layout(1)), RegisterId::control(),
                         RegisterId::system(), GateSpec::identity(), GateSpec::rx(kPi));
    CHECK(std::abs(flipped[ket_index("1 0 1 0")] - (-kI)) < 1e-15);

    CHECK_THROWS_AS(apply_controlled(psi0, RegisterId::system(), RegisterId::system(),
                                     GateSpec::identity(), GateSpec::pauli_x()),
                    LayoutError);
    CHECK_THROWS_AS(apply_controlled(psi0, RegisterId::memory(2), RegisterId::system(),
                                     GateSpec::identity(), GateSpec::pauli_x()),
                    LayoutError);
}

TEST_CASE("write_memory copies the control label", "[machine]") {
    InitSpec init;
    init.alpha = 0.6;
    init.beta = Complex(0.0, 0.8);
    const StateVector psi = write_memory(initialize(init, build_layout(1)), 1);
    CHECK(max_diff(psi.amplitudes(),
                   ket(16, {{"0 0 0 0", 0.6}, {"1 1 0 0", Complex(0.0, 0.8)}})) < 1e-16);
    CHECK(psi.slot_consumed(1));

    const StateVector zero = write_memory(initialize(InitSpec{}, build_layout(1)), 1);
    CHECK(zero[0] == Complex(1.0));

    const StateVector twice = write_memory(psi, 1);
    CHECK(max_diff(twice.amplitudes(), initialize(init, build_layout(1)).amplitudes()) == 0.0);

    CHECK_THROWS_AS(write_memory(psi, 2), LayoutError);
    CHECK_THROWS_AS(write_memory(psi, 0), LayoutError);
}

TEST_CASE("iterate: first Pauli-flip iteration", "[machine]") {
    const StateVector psi = iterate(initialize(halves(), build_layout(3)), 1, pauli_spec());
    CHECK(max_diff(psi.amplitudes(), ket(64, {{"0 000 0 0", kH}, {"1 100 1 1", kH}})) < 1e-16);
}

TEST_CASE("iterate: identity gates leave only the memory write", "[machine][property]") {
    CounterRng rng(42);
    for (int t = 0; t < 10; ++t) {
        InitSpec init;
        std::tie(init.alpha, init.beta) = oracle::random_amplitudes(rng);
        std::tie(init.gamma, init.delta) = oracle::random_amplitudes(rng);
        init.system_init = random_gate(rng);
        const StateVector start = initialize(init, build_layout(2));
        CHECK(max_diff(iterate(start, 2, IterationSpec{}).amplitudes(),
                       write_memory(start, 2).amplitudes()) == 0.0);
    }
}

TEST_CASE("iterate: rotations with feedback compose per branch", "[machine]") {
    IterationSpec it;
    it.u0 = GateSpec::rx(kPi / 3);
    it.u1 = GateSpec::rx(-kPi / 3);
    it.f0 = GateSpec::rx(kPi / 12);
    it.f1 = GateSpec::rx(-kPi / 12);
    const StateVector psi =
        iterate(initialize(halves(InitMode::copy_c_to_p_from_zero), build_layout(1)), 1, it);
    const double c = std::cos(5 * kPi / 24), s = std::sin(5 * kPi / 24);
    const auto expected = ket(16, {{"0 0 0 0", kH * c},
                                   {"0 0 1 0", -kI * kH * s},
                                   {"1 1 0 1", kH * c},
                                   {"1 1 1 1", kI * kH * s}});
    CHECK(max_diff(psi.amplitudes(), expected) < 1e-15);
}

TEST_CASE("iterate enforces mode and fresh slots", "[machine]") {
    const StateVector start = initialize(halves(), build_layout(2));
    IterationSpec ext = pauli_spec();
    ext.reflect = ReflectPair{};
    CHECK_THROWS_AS(iterate(start, 1, ext), ModeError);
    CHECK_THROWS_AS(iterate_extended(start, 1, pauli_spec()), ModeError);
    const StateVector once = iterate(start, 1, pauli_spec());
    CHECK_THROWS_AS(iterate(once, 1, pauli_spec()), LayoutError);
    CHECK_THROWS_AS(iterate(start, 3, pauli_spec()), LayoutError);
    IterationSpec bad;
    bad.f0 = GateSpec::raw(Matrix{{1.0, 1.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(iterate(start, 1, bad), ValidationError);
}

TEST_CASE("iterate_extended rotates C on the flipped branch", "[machine][property]") {
    CounterRng rng(43);
    for (int t = 0; t < 20; ++t) {
        InitSpec init;
        std::tie(init.alpha, init.beta) = oracle::random_amplitudes(rng);
        const double theta = 2 * kPi * rng.uniform();
        IterationSpec it;
        it.v1 = GateSpec::pauli_x();
        it.reflect = ReflectPair{GateSpec::identity(), GateSpec::real_rotation(theta)};
        const StateVector psi = iterate_extended(initialize(init, build_layout(2)), 1, it);
        const auto expected = ket(32, {{"0 00 0 0", init.alpha},
                                       {"0 10 0 1", -init.beta * std::sin(theta)},
                                       {"1 10 0 1", init.beta * std::cos(theta)}});
        CHECK(max_diff(psi.amplitudes(), expected) < 1e-15);
    }
}

TEST_CASE("iterate_extended with identity reflections equals iterate", "[machine]") {
    IterationSpec it = pauli_spec();
    const StateVector start = initialize(halves(), build_layout(1));
    const StateVector plain = iterate(start, 1, it);
    it.reflect = ReflectPair{};
    CHECK(max_diff(iterate_extended(start, 1, it).amplitudes(), plain.amplitudes()) == 0.0);
}

TEST_CASE("iterate_extended at theta = pi/2 moves the flipped branch to C = 0", "[machine]") {
    InitSpec init;
    init.alpha = 0.0;
    init.beta = 1.0;
    IterationSpec it;
    it.v1 = GateSpec::pauli_x();
    it.reflect = ReflectPair{GateSpec::identity(), GateSpec::real_rotation(kPi / 2)};
    const StateVector psi = iterate_extended(initialize(init, build_layout(1)), 1, it);
    CHECK(outcome_probability(psi, RegisterId::control(), 0) == Catch::Approx(1.0));
    CHECK(std::abs(psi[ket_index("0 1 0 1")] - (-1.0)) < 1e-15);
}

TEST_CASE("run: Pauli flips end in a GHZ-type state", "[machine]") {
    const StateVector psi = run(pauli_flips());
    CHECK(max_diff(psi.amplitudes(), ket(64, {{"0 000 0 0", kH}, {"1 111 1 1", kH}})) < 1e-15);
}

TEST_CASE("run: zero iterations returns the initialized state", "[machine]") {
    Scenario s;
    s.init = halves(InitMode::correlated_c_to_p);
    const StateVector psi = run(s);
    CHECK(psi.layout().memory_slots() == 0);
    CHECK(max_diff(psi.amplitudes(), initialize(s.init, psi.layout()).amplitudes()) == 0.0);
}

TEST_CASE("run: rotations without feedback factor S out as |1>", "[machine]") {
    const StateVector psi = run(rotations(false));
    CHECK(max_diff(psi.amplitudes(), ket(64, {{"0 000 1 0", -kI * kH}, {"1 111 1 1", kI * kH}})) <
          1e-15);
}

TEST_CASE("measure_control on the GHZ-type state", "[machine]") {
    const StateVector ghz = run(pauli_flips());
    for (int outcome = 0; outcome < 2; ++outcome) {
        const MeasurementResult m = project_control(ghz, outcome);
        CHECK(m.probability == Catch::Approx(0.5).margin(1e-15));
        const char *bits = outcome ? "1 111 1 1" : "0 000 0 0";
        CHECK(std::abs(m.collapsed[ket_index(bits)] - 1.0) < 1e-15);
    }
    const MeasurementResult a = measure_control(ghz, 99);
    const MeasurementResult b = measure_control(ghz, 99);
    CHECK(a.outcome == b.outcome);
    CHECK(max_diff(a.collapsed.amplitudes(), b.collapsed.amplitudes()) == 0.0);
}

TEST_CASE("measure_control with alpha = 1", "[machine]") {
    const StateVector psi = initialize(InitSpec{}, build_layout(1));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MeasurementResult m = measure_control(psi, seed);
        CHECK(m.outcome == 0);
        CHECK(m.probability == 1.0);
    }
    CHECK_THROWS_AS(project_control(psi, 1), ProjectionError);
    CHECK_THROWS_AS(project_control(psi, 2), ProjectionError);
}

TEST_CASE("measure_control after the reflective step", "[machine]") {
    const double theta = 0.4;
    const Complex alpha = 0.6, beta = Complex(0.0, 0.8);
    IterationSpec it;
    it.v1 = GateSpec::pauli_x();
    it.reflect = ReflectPair{GateSpec::identity(), GateSpec::real_rotation(theta)};
    InitSpec init;
    init.alpha = alpha;
    init.beta = beta;
    const StateVector psi = iterate_extended(initialize(init, build_layout(2)), 1, it);
    const MeasurementResult m = project_control(psi, 0);
    const double w = std::norm(alpha) + std::norm(beta) * std::pow(std::sin(theta), 2);
    CHECK(m.probability == Catch::Approx(w).epsilon(1e-14));
    const auto expected = ket(32, {{"0 00 0 0", alpha / std::sqrt(w)},
                                   {"0 10 0 1", -beta * std::sin(theta) / std::sqrt(w)}});
    CHECK(max_diff(m.collapsed.amplitudes(), expected) < 1e-15);
}

TEST_CASE("measure_control frequencies follow the Born rule", "[machine][property]") {
    InitSpec init;
    init.alpha = std::sqrt(0.3);
    init.beta = std::sqrt(0.7);
    const StateVector psi = initialize(init, build_layout(1));
    int ones = 0;
    const int trials = 4000;
    for (int s = 0; s < trials; ++s) {
        ones += measure_control(psi, static_cast<std::uint64_t>(s)).outcome;
    }
    // Binomial sd is about 0.0072; allow five of them.
    CHECK(std::abs(ones / double(trials) - 0.7) < 0.036);
}

TEST_CASE("controlled dilation", "[machine]") {
    const std::size_t env[] = {2};
    CHECK(build_controlled_dilation(Matrix::identity(4), Matrix::identity(4), env) ==
          Matrix::identity(8));

    const Matrix cnot{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
    const Matrix toffoli = build_controlled_dilation(Matrix::identity(4), cnot, env);
    for (std::size_t in = 0; in < 8; ++in) {
        const std::size_t out = in >= 6 ? in ^ 1 : in;
        for (std::size_t r = 0; r < 8; ++r) {
            CHECK(toffoli(r, in) == Complex(r == out ? 1.0 : 0.0));
        }
    }
    CHECK(check_unitary(toffoli, 1e-12));

    CounterRng rng(44);
    const Matrix u0 = kron(oracle::random_unitary(rng), oracle::random_unitary(rng));
    const Matrix u1 = kron(oracle::random_unitary(rng), oracle::random_unitary(rng));
    const auto [a, b] = oracle::random_amplitudes(rng);
    const auto psi = random_state(rng, 2);
    const std::vector<Complex> se{psi[0], 0.0, psi[1], 0.0};
    std::vector<Complex> input;
    for (const Complex c : {a, b}) {
        for (const Complex z : se) {
            input.push_back(c * z);
        }
    }
    const auto out = mat_vec(build_controlled_dilation(u0, u1, env), input);
    const auto b0 = mat_vec(u0, se), b1 = mat_vec(u1, se);
    std::vector<Complex> expected;
    for (const Complex z : b0) {
        expected.push_back(a * z);
    }
    for (const Complex z : b1) {
        expected.push_back(b * z);
    }
    CHECK(max_diff(out, expected) < 1e-15);

    CHECK_THROWS_AS(build_controlled_dilation(Matrix::identity(2), Matrix::identity(4), env),
                    ShapeError);
    CHECK_THROWS_AS(build_controlled_dilation(Complex(2.0) * Matrix::identity(4),
                                              Matrix::identity(4), env),
                    ValidationError);
}
