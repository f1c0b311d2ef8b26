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
#include "qdm/oracle.hpp"

#include <cmath>
#include <numbers>
#include <tuple>

#include "qdm/errors.hpp"

namespace qdm::oracle {

namespace {

const Matrix kProj0{{1.0, 0.0}, {0.0, 0.0}};
const Matrix kProj1{{0.0, 0.0}, {0.0, 1.0}};
const Matrix kNot{{0.0, 1.0}, {1.0, 0.0}};

Matrix kron_chain(const std::vector<Matrix> &factors) {
    Matrix out = Matrix::identity(1);
    for (const Matrix &f : factors) {
        out = kron(out, f);
    }
    return out;
}

std::vector<Complex> kron_vec(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    std::vector<Complex> out;
    out.reserve(a.size() * b.size());
    for (const Complex x : a) {
        for (const Complex y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

} // namespace

std::size_t position(RegisterId reg, std::size_t n_slots) {
    switch (reg.kind) {
    case RegisterKind::control:
        return 0;
    case RegisterKind::memory:
        if (reg.slot < 1 || reg.slot > n_slots) {
            throw LayoutError("oracle: no memory slot " + std::to_string(reg.slot));
        }
        return reg.slot;
    case RegisterKind::system:
        return n_slots + 1;
    case RegisterKind::policy:
        return n_slots + 2;
    }
    throw LayoutError("oracle: unknown register");
}

Matrix global_controlled(std::size_t n_slots, RegisterId control, RegisterId target,
                         const Matrix &g0, const Matrix &g1) {
    const std::size_t c = position(control, n_slots);
    const std::size_t t = position(target, n_slots);
    if (c == t) {
        throw LayoutError("oracle: control and target coincide");
    }
    const std::size_t total = n_slots + 3;
    std::vector<Matrix> branch0(total, Matrix::identity(2));
    std::vector<Matrix> branch1(total, Matrix::identity(2));
    branch0[c] = kProj0;
    branch0[t] = g0;
    branch1[c] = kProj1;
    branch1[t] = g1;
    return kron_chain(branch0) + kron_chain(branch1);
}

Matrix iteration_unitary(std::size_t n_slots, std::size_t k, const IterationSpec &spec) {
    const RegisterId C = RegisterId::control();
    const RegisterId S = RegisterId::system();
    const RegisterId P = RegisterId::policy();
    const RegisterId M = RegisterId::memory(k);
    const Matrix I = Matrix::identity(2);

    Matrix w = global_controlled(n_slots, C, S, spec.u0.matrix(), spec.u1.matrix());
    w = mat_mul(global_controlled(n_slots, C, M, I, kNot), w);
    w = mat_mul(global_controlled(n_slots, P, S, spec.f0.matrix(), spec.f1.matrix()), w);
    w = mat_mul(global_controlled(n_slots, M, P, spec.v0.matrix(), spec.v1.matrix()), w);
    if (spec.reflect) {
        w = mat_mul(global_controlled(n_slots, P, C, spec.reflect->r0.matrix(),
                                      spec.reflect->r1.matrix()),
                    w);
    }
    return w;
}

std::vector<Complex> initial_state(const InitSpec &init, std::size_t n_slots) {
    const Matrix sys = init.system_init.matrix();
    std::vector<Complex> psi{init.alpha, init.beta};
    for (std::size_t k = 0; k < n_slots; ++k) {
        psi = kron_vec(psi, {1.0, 0.0});
    }
    psi = kron_vec(psi, {sys(0, 0), sys(1, 0)});
    psi = kron_vec(psi, {init.gamma, init.delta});
    if (init.mode != InitMode::uncorrelated) {
        const Matrix copy = global_controlled(n_slots, RegisterId::control(),
                                              RegisterId::policy(),
                                              Matrix::identity(2), kNot);
        psi = mat_vec(copy, psi);
    }
    return psi;
}

std::vector<Complex> evolve(const Scenario &scenario) {
    const std::size_t n = scenario.iterations.size();
    std::vector<Complex> psi = initial_state(scenario.init, n);
    for (std::size_t k = 1; k <= n; ++k) {
        psi = mat_vec(iteration_unitary(n, k, scenario.iterations[k - 1]), psi);
    }
    return psi;
}

Matrix random_unitary(CounterRng &rng) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double a = two_pi * rng.uniform();
    const double b = two_pi * rng.uniform();
    const double c = two_pi * rng.uniform();
    const double d = two_pi * rng.uniform();
    const Matrix u = mat_mul(GateSpec::rz(b).matrix(),
                             mat_mul(GateSpec::ry(c).matrix(), GateSpec::rz(d).matrix()));
    return std::polar(1.0, a) * u;
}

std::pair<Complex, Complex> random_amplitudes(CounterRng &rng, double floor) {
    const double two_pi = 2.0 * std::numbers::pi;
    const double lo = std::asin(floor);
    const double hi = std::acos(floor);
    const double t = lo + (hi - lo) * rng.uniform();
    const Complex z0 = std::polar(std::cos(t), two_pi * rng.uniform());
    const Complex z1 = std::polar(std::sin(t), two_pi * rng.uniform());
    return {z0, z1};
}

Scenario random_canonical_scenario(CounterRng &rng, std::size_t iterations) {
    Scenario s;
    s.name = "random-canonical";
    std::tie(s.init.alpha, s.init.beta) = random_amplitudes(rng);
    std::tie(s.init.gamma, s.init.delta) = random_amplitudes(rng);
    s.init.mode = rng.uniform() < 0.5 ? InitMode::uncorrelated : InitMode::correlated_c_to_p;
    s.init.system_init = GateSpec::raw(random_unitary(rng));
    for (std::size_t k = 0; k < iterations; ++k) {
        IterationSpec it;
        it.u0 = GateSpec::raw(random_unitary(rng));
        it.u1 = GateSpec::raw(random_unitary(rng));
        it.f0 = GateSpec::raw(random_unitary(rng));
        it.f1 = GateSpec::raw(random_unitary(rng));
        it.v0 = GateSpec::raw(random_unitary(rng));
        it.v1 = GateSpec::raw(random_unitary(rng));
        s.iterations.push_back(std::move(it));
    }
    return s;
}

} // namespace qdm::oracle
