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
#include "qdm/verify.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "qdm/analysis.hpp"
#include "qdm/errors.hpp"
#include "qdm/oracle.hpp"
#include "qdm/scenario.hpp"

namespace qdm {

namespace {

using Checks = std::vector<CheckOutcome>;

void add(Checks &out, std::string name, double deviation, double tolerance) {
    out.push_back({std::move(name), deviation <= tolerance, deviation, tolerance});
}

double max_diff(std::span<const Complex> a, std::span<const Complex> b) {
    if (a.size() != b.size()) {
        return std::numeric_limits<double>::infinity();
    }
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

std::vector<Complex> two_term(std::size_t dim, std::string_view ket0, Complex z0,
                              std::string_view ket1, Complex z1) {
    std::vector<Complex> v(dim);
    v[ket_index(ket0)] = z0;
    v[ket_index(ket1)] = z1;
    return v;
}

void golden_suite(const Tolerances &tol, Checks &out) {
    const double h = 1.0 / std::sqrt(2.0);
    const Complex I{0.0, 1.0};

    {
        const StateVector psi = run(pauli_flips());
        const auto ghz = two_term(psi.size(), "0 000 0 0", h, "1 111 1 1", h);
        Complex overlap = 0.0;
        for (std::size_t i = 0; i < psi.size(); ++i) {
            overlap += std::conj(ghz[i]) * psi[i];
        }
        add(out, "golden.pauli-flips.ghz_fidelity", 1.0 - std::norm(overlap), tol.norm);
        double offdiag = 0.0;
        double weights = 0.0;
        for (std::size_t k = 1; k <= 3; ++k) {
            const MarginalReport m = memory_marginal(psi, k);
            offdiag = std::max(offdiag, m.max_offdiag);
            weights = std::max({weights, std::abs(m.diagonal_probs[0] - 0.5),
                                std::abs(m.diagonal_probs[1] - 0.5)});
        }
        add(out, "golden.pauli-flips.memory_diagonal", offdiag, tol.diagonality);
        add(out, "golden.pauli-flips.memory_weights", weights, tol.norm);
        add(out, "golden.pauli-flips.norm", std::abs(psi.norm() - 1.0), tol.norm);
    }
    {
        const StateVector psi = run(rotations(false));
        const auto expected =
            two_term(psi.size(), "0 000 1 0", -I * h, "1 111 1 1", I * h);
        add(out, "golden.rotations-nofeedback.amplitudes",
            max_diff(psi.amplitudes(), expected), tol.norm);
        add(out, "golden.rotations-nofeedback.prob_S1",
            std::abs(outcome_probability(psi, RegisterId::system(), 1) - 1.0), tol.norm);
        add(out, "golden.rotations-nofeedback.purity_S",
            std::abs(separability_check(psi, RegisterId::system(), tol).purity - 1.0),
            tol.purity);
        add(out, "golden.rotations-nofeedback.norm", std::abs(psi.norm() - 1.0), tol.norm);
    }
    {
        const StateVector psi = run(rotations(true));
        const double c = std::cos(5.0 * std::numbers::pi / 8.0);
        const double s = std::sin(5.0 * std::numbers::pi / 8.0);
        std::vector<Complex> expected(psi.size());
        expected[ket_index("0 000 0 0")] = h * c;
        expected[ket_index("0 000 1 0")] = -I * h * s;
        expected[ket_index("1 111 0 1")] = h * c;
        expected[ket_index("1 111 1 1")] = I * h * s;
        add(out, "golden.rotations-feedback.amplitudes",
            max_diff(psi.amplitudes(), expected), tol.norm);
        add(out, "golden.rotations-feedback.prob_S1",
            std::abs(outcome_probability(psi, RegisterId::system(), 1) -
                     (2.0 + std::sqrt(2.0)) / 4.0),
            tol.purity);
        // 1/2 + |<s0|s1>|^2 / 2 with <s0|s1> = cos^2 - sin^2.
        const double overlap = c * c - s * s;
        add(out, "golden.rotations-feedback.purity_S",
            std::abs(separability_check(psi, RegisterId::system(), tol).purity -
                     (0.5 + 0.5 * overlap * overlap)),
            tol.purity);
        add(out, "golden.rotations-feedback.norm", std::abs(psi.norm() - 1.0), tol.norm);
    }
    {
        const Scenario scenario =
            reinforce_two_step(h, h, Angle::parse("pi/4"));
        const StateVector psi = run(scenario);
        const BranchTable table = branch_decompose(psi);
        const std::map<std::string, double> expected{{"00", 0.5}, {"10", 0.25}, {"11", 0.25}};
        double dev = table.entries.size() == expected.size()
                         ? 0.0
                         : std::numeric_limits<double>::infinity();
        for (const auto &[key, p] : expected) {
            const auto it = table.entries.find(key);
            dev = std::max(dev, it == table.entries.end()
                                    ? std::numeric_limits<double>::infinity()
                                    : std::abs(it->second.probability - p));
        }
        add(out, "golden.reinforce-two-step.branches", dev, tol.norm);
        add(out, "golden.reinforce-two-step.norm", std::abs(psi.norm() - 1.0), tol.norm);
    }
}

void oracle_suite(const Tolerances &tol, std::uint64_t seed, Checks &out) {
    CounterRng root(seed);
    // n memory slots -> n + 3 qubits; 7 slots reaches the 10-qubit bound.
    for (std::size_t n = 1; n <= 7; ++n) {
        CounterRng rng = root.split(n);
        double dev = 0.0;
        const int trials = n <= 4 ? 8 : 2;
        for (int t = 0; t < trials; ++t) {
            const Scenario s = oracle::random_canonical_scenario(rng, n);
            dev = std::max(dev, max_diff(run(s).amplitudes(), oracle::evolve(s)));
        }
        const std::string qubits = std::to_string(n + 3);
        add(out, "oracle.qubits_" + std::string(2 - qubits.size(), '0') + qubits, dev,
            tol.norm);
    }
}

void marginals_suite(const Tolerances &tol, std::uint64_t seed, Checks &out) {
    CounterRng rng = CounterRng(seed).split(101);
    double offdiag = 0.0;
    double weights = 0.0;
    double phase = 0.0;
    double witness = 0.0;
    for (int t = 0; t < 20; ++t) {
        Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 4);
        const StateVector psi = run(s);
        const double a2 = std::norm(s.init.alpha);
        const double b2 = std::norm(s.init.beta);
        s.init.beta *= std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
        const StateVector shifted = run(s);
        for (std::size_t k = 1; k <= s.iterations.size(); ++k) {
            const MarginalReport m = memory_marginal(psi, k);
            offdiag = std::max(offdiag, m.max_offdiag);
            weights = std::max({weights, std::abs(m.diagonal_probs[0] - a2),
                                std::abs(m.diagonal_probs[1] - b2)});
            phase = std::max(phase, max_abs_diff(m.matrix.matrix(),
                                                 memory_marginal(shifted, k).matrix.matrix()));
        }
        const WitnessResult w =
            no_cloning_witness(psi, RegisterId::control(), RegisterId::memory(1), tol);
        witness = std::max(witness, w.entangled ? 0.0 : 1.0);
    }
    add(out, "marginals.offdiagonal", offdiag, tol.diagonality);
    add(out, "marginals.weights", weights, tol.norm);
    add(out, "marginals.phase_insensitive", phase, tol.diagonality);
    add(out, "marginals.witness_entangled", witness, 0.0);
}

void branches_suite(const Tolerances &tol, std::uint64_t seed, Checks &out) {
    CounterRng rng = CounterRng(seed).split(202);
    double sum = 0.0;
    double rebuild = 0.0;
    double reinforce = 0.0;
    for (int t = 0; t < 20; ++t) {
        const Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 4);
        const StateVector psi = run(s);
        const BranchTable table = branch_decompose(psi);
        sum = std::max(sum, std::abs(table.total_probability() - 1.0));
        rebuild = std::max(rebuild,
                           max_diff(reassemble(table, psi.layout()), psi.amplitudes()));

        const auto [alpha, beta] = oracle::random_amplitudes(rng);
        const double theta = 2.0 * std::numbers::pi * rng.uniform();
        const BranchTable r =
            branch_decompose(run(reinforce_two_step(alpha, beta, Angle::of(theta))));
        const double a2 = std::norm(alpha);
        const double b2 = std::norm(beta);
        const std::map<std::string, double> expected{
            {"00", a2},
            {"10", b2 * std::pow(std::sin(theta), 2)},
            {"11", b2 * std::pow(std::cos(theta), 2)}};
        for (const auto &[key, p] : expected) {
            const auto it = r.entries.find(key);
            reinforce = std::max(reinforce,
                                 std::abs((it == r.entries.end() ? 0.0 : it->second.probability) - p));
        }
    }
    add(out, "branches.probability_sum", sum, tol.norm);
    add(out, "branches.reassembly", rebuild, tol.norm);
    add(out, "branches.reinforce_formula", reinforce, tol.norm);
}

void norm_suite(const Tolerances &tol, std::uint64_t seed, Checks &out) {
    CounterRng rng = CounterRng(seed).split(303);
    double canonical = 0.0;
    double extended = 0.0;
    for (int t = 0; t < 20; ++t) {
        Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 6);
        canonical = std::max(canonical, std::abs(run(s).norm() - 1.0));
        for (IterationSpec &it : s.iterations) {
            it.reflect = ReflectPair{GateSpec::raw(oracle::random_unitary(rng)),
                                     GateSpec::raw(oracle::random_unitary(rng))};
        }
        extended = std::max(extended, std::abs(run(s).norm() - 1.0));
    }
    add(out, "norm.canonical_runs", canonical, tol.norm);
    add(out, "norm.extended_runs", extended, tol.norm);
}

} // namespace

const std::vector<std::string_view> &verify_suites() {
    static const std::vector<std::string_view> suites{"branches", "golden", "marginals",
                                                      "norm", "oracle"};
    return suites;
}

std::vector<CheckOutcome> run_verify(const VerifyOptions &options) {
    if (options.only && std::find(verify_suites().begin(), verify_suites().end(),
                                  *options.only) == verify_suites().end()) {
        throw ValidationError("unknown verify suite '" + *options.only +
                              "' (branches, golden, marginals, norm, oracle)");
    }
    const auto selected = [&](std::string_view suite) {
        return !options.only || *options.only == suite;
    };
    Checks out;
    if (selected("golden")) {
        golden_suite(options.tol, out);
    }
    if (selected("oracle")) {
        oracle_suite(options.tol, options.seed, out);
    }
    if (selected("marginals")) {
        marginals_suite(options.tol, options.seed, out);
    }
    if (selected("branches")) {
        branches_suite(options.tol, options.seed, out);
    }
    if (selected("norm")) {
        norm_suite(options.tol, options.seed, out);
    }
    std::sort(out.begin(), out.end(),
              [](const CheckOutcome &a, const CheckOutcome &b) { return a.name < b.name; });
    return out;
}

void apply_tolerance_override(Tolerances &tol, std::string_view assignment) {
    const auto eq = assignment.find('=');
    if (eq == std::string_view::npos) {
        throw ValidationError("tolerance override '" + std::string(assignment) +
                              "' must look like key=value");
    }
    const std::string_view key = assignment.substr(0, eq);
    const std::string_view text = assignment.substr(eq + 1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || !(value >= 0.0) ||
        !std::isfinite(value)) {
        throw ValidationError("tolerance '" + std::string(key) + "' needs a non-negative number, got '" +
                              std::string(text) + "'");
    }
    const std::map<std::string_view, double Tolerances::*> fields{
        {"unitarity", &Tolerances::unitarity},     {"norm", &Tolerances::norm},
        {"hermiticity", &Tolerances::hermiticity}, {"diagonality", &Tolerances::diagonality},
        {"positivity", &Tolerances::positivity},   {"purity", &Tolerances::purity}};
    const auto it = fields.find(key);
    if (it == fields.end()) {
        throw ValidationError("unknown tolerance '" + std::string(key) +
                              "' (unitarity, norm, hermiticity, diagonality, positivity, purity)");
    }
    tol.*(it->second) = value;
}

} // namespace qdm
