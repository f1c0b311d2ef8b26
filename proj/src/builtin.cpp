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
#include <cmath>

#include "qdm/scenario.hpp"

namespace qdm {

namespace {

const Complex kHalfRoot{1.0 / std::sqrt(2.0), 0.0};

std::vector<AnalysisRequest> default_analyses(std::size_t slots) {
    std::vector<AnalysisRequest> out{{AnalysisKind::branches, {}}};
    for (std::size_t k = 1; k <= slots; ++k) {
        out.push_back({AnalysisKind::marginal, {RegisterId::memory(k)}});
    }
    out.push_back({AnalysisKind::outcome, {RegisterId::system()}});
    out.push_back({AnalysisKind::separability, {RegisterId::system()}});
    out.push_back({AnalysisKind::witness, {RegisterId::control(), RegisterId::memory(1)}});
    return out;
}

} // namespace

Scenario pauli_flips() {
    Scenario s;
    s.name = "pauli-flips";
    s.init.alpha = kHalfRoot;
    s.init.beta = kHalfRoot;
    IterationSpec it;
    it.u1 = GateSpec::pauli_x();
    it.f1 = GateSpec::pauli_z();
    it.v1 = GateSpec::pauli_x();
    s.iterations.assign(3, it);
    s.analyses = default_analyses(3);
    return s;
}

Scenario rotations(bool with_feedback) {
    Scenario s;
    s.name = with_feedback ? "rotations-feedback" : "rotations-nofeedback";
    s.init.alpha = kHalfRoot;
    s.init.beta = kHalfRoot;
    s.init.mode = InitMode::copy_c_to_p_from_zero;
    IterationSpec it;
    it.u0 = GateSpec::rx(Angle::parse("pi/3"));
    it.u1 = GateSpec::rx(Angle::parse("-pi/3"));
    if (with_feedback) {
        it.f0 = GateSpec::rx(Angle::parse("pi/12"));
        it.f1 = GateSpec::rx(Angle::parse("-pi/12"));
    }
    s.iterations.assign(3, it);
    s.analyses = default_analyses(3);
    return s;
}

Scenario reinforce_two_step(Complex alpha, Complex beta, Angle theta) {
    Scenario s;
    s.name = "reinforce-two-step";
    s.init.alpha = alpha;
    s.init.beta = beta;
    IterationSpec first;
    first.v1 = GateSpec::pauli_x();
    first.reflect = ReflectPair{GateSpec::identity(),
                                GateSpec::real_rotation(std::move(theta))};
    s.iterations = {first, IterationSpec{}};
    s.analyses = default_analyses(2);
    return s;
}

std::vector<BuiltinScenario> builtin_scenarios() {
    return {
        {"pauli-flips",
         "three Pauli-flip iterations; the final state is a six-register GHZ-type "
         "superposition",
         pauli_flips()},
        {"rotations-nofeedback",
         "opposite rx(pi/3) rotations per branch, no feedback; S ends in |1> with "
         "branch phases -i/+i",
         rotations(false)},
        {"rotations-feedback",
         "rx(pi/3) rotations with a policy-controlled rx(pi/12) push; Pr(S=1) = "
         "(2+sqrt 2)/4",
         rotations(true)},
        {"reinforce-two-step",
         "two steps with a policy-controlled real rotation of C (theta = pi/4)",
         reinforce_two_step(kHalfRoot, kHalfRoot, Angle::parse("pi/4"))},
    };
}

std::optional<Scenario> find_builtin(std::string_view name) {
    for (auto &b : builtin_scenarios()) {
        if (b.name == name) {
            return std::move(b.scenario);
        }
    }
    return std::nullopt;
}

} // namespace qdm
