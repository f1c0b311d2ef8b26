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

#include "qdm/errors.hpp"
#include "qdm/oracle.hpp"
#include "support.hpp"

using namespace qdm;
using namespace qdm::test;

TEST_CASE("oracle positions follow C, M1..Mn, S, P", "[oracle]") {
    CHECK(oracle::position(RegisterId::control(), 3) == 0);
    CHECK(oracle::position(RegisterId::memory(2), 3) == 2);
    CHECK(oracle::position(RegisterId::system(), 3) == 4);
    CHECK(oracle::position(RegisterId::policy(), 3) == 5);
    CHECK_THROWS_AS(oracle::position(RegisterId::memory(4), 3), LayoutError);
}

TEST_CASE("oracle iteration unitaries are unitary", "[oracle][property]") {
    CounterRng rng(81);
    for (int t = 0; t < 10; ++t) {
        Scenario s = oracle::random_canonical_scenario(rng, 2);
        s.iterations[1].reflect = ReflectPair{random_gate(rng), random_gate(rng)};
        for (std::size_t k = 1; k <= 2; ++k) {
            CHECK(unitarity_deviation(oracle::iteration_unitary(2, k, s.iterations[k - 1])) < 1e-13);
        }
    }
}

TEST_CASE("engine and oracle agree on canonical runs", "[oracle][property]") {
    CounterRng rng(82);
    for (int t = 0; t < 60; ++t) {
        const Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 5);
        CHECK(max_diff(run(s).amplitudes(), oracle::evolve(s)) < 1e-12);
    }
}

TEST_CASE("engine and oracle agree on extended runs", "[oracle][property]") {
    CounterRng rng(83);
    for (int t = 0; t < 30; ++t) {
        Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 4);
        for (IterationSpec &it : s.iterations) {
            if (rng.uniform() < 0.6) {
                it.reflect = ReflectPair{random_gate(rng), random_gate(rng)};
            }
        }
        CHECK(max_diff(run(s).amplitudes(), oracle::evolve(s)) < 1e-12);
    }
}

TEST_CASE("engine and oracle agree on the builtins", "[oracle]") {
    for (const auto &b : builtin_scenarios()) {
        CHECK(max_diff(run(b.scenario).amplitudes(), oracle::evolve(b.scenario)) < 1e-14);
    }
}

TEST_CASE("random amplitudes respect the floor", "[oracle]") {
    CounterRng rng(84);
    for (int t = 0; t < 100; ++t) {
        const auto [a, b] = oracle::random_amplitudes(rng, 0.1);
        CHECK(std::abs(a) >= 0.1 - 1e-15);
        CHECK(std::abs(b) >= 0.1 - 1e-15);
        CHECK(std::norm(a) + std::norm(b) == Catch::Approx(1.0));
    }
}
