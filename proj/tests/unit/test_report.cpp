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
#include "qdm/report.hpp"
#include "support.hpp"

using namespace qdm;
using namespace qdm::test;

TEST_CASE("quantize keeps 12 significant digits", "[report]") {
    CHECK(quantize(0.85355339059327373) == 0.853553390593);
    CHECK(quantize(1.0 + 1e-15) == 1.0);
    CHECK(quantize(-123456.7890123456) == -123456.789012);
    CHECK(quantize(9.99e-13) == 0.0);
    CHECK(quantize(-9.99e-13) == 0.0);
    CHECK_FALSE(std::signbit(quantize(-1e-20)));
    CHECK(quantize(1.5e-12) == 1.5e-12);
    CHECK(quantize(Complex(1e-13, -0.5)) == Complex(0.0, -0.5));
}

TEST_CASE("quantize is idempotent", "[report][property]") {
    CounterRng rng(71);
    for (int t = 0; t < 200; ++t) {
        const double x = (rng.uniform() - 0.5) * std::pow(10.0, 30 * rng.uniform() - 15);
        CHECK(quantize(quantize(x)) == quantize(x));
    }
}

TEST_CASE("GHZ report", "[report]") {
    const RunReport r = build_report(pauli_flips());
    CHECK(r.scenario_name == "pauli-flips");
    CHECK(r.final_norm == 1.0);
    REQUIRE(r.branch_table.size() == 2);
    CHECK(r.branch_table.at("000").probability == 0.5);
    CHECK(r.branch_table.at("111").probability == 0.5);
    CHECK(r.branch_table.at("111").substate[7] == Complex(1.0));
    CHECK(r.marginals.size() == 3);
    CHECK(r.all_checks_passed());
    CHECK(r.checks.size() == 4);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].entangled);
    CHECK_FALSE(r.measurement.has_value());
}

TEST_CASE("feedback report probabilities", "[report]") {
    const RunReport r = build_report(rotations(true));
    CHECK(std::abs(r.probabilities.at("S_1") - (2 + std::sqrt(2.0)) / 4) < 1e-9);
    CHECK(r.probabilities.at("S_1") == 0.853553390593);
    REQUIRE(r.separability.size() == 1);
    CHECK_FALSE(r.separability[0].separable);
    CHECK(r.separability[0].purity == 0.75);
}

TEST_CASE("extended runs check only the first memory weight", "[report]") {
    const RunReport r = build_report(reinforce_two_step(kH, kH, Angle::parse("pi/4")));
    CHECK(r.all_checks_passed());
    CHECK(r.branch_table.size() == 3);
}

TEST_CASE("build_report validates with the given tolerances", "[report]") {
    Scenario s = pauli_flips();
    // M^dagger M - I has a single 2e-11 entry.
    s.iterations[0].v0 = GateSpec::raw(Matrix{{1.0 + 1e-11, 0.0}, {0.0, 1.0}});
    CHECK_NOTHROW(build_report(s));
    Tolerances strict;
    strict.unitarity = 1e-12;
    CHECK_THROWS_AS(build_report(s, strict), ValidationError);
}

TEST_CASE("measurement in reports", "[report]") {
    Scenario s = pauli_flips();
    s.measure = MeasureRequest{5};
    const RunReport a = build_report(s);
    REQUIRE(a.measurement.has_value());
    CHECK(a.measurement->seed == 5);
    CHECK(a.measurement->probability == 0.5);
    const RunReport b = build_report(pauli_flips(), {}, 5);
    CHECK(a.measurement == b.measurement);
}

TEST_CASE("reports round-trip and serialize deterministically", "[report][property]") {
    std::vector<Scenario> scenarios;
    for (const auto &b : builtin_scenarios()) {
        scenarios.push_back(b.scenario);
    }
    CounterRng rng(73);
    for (int t = 0; t < 10; ++t) {
        Scenario s = oracle::random_canonical_scenario(rng, 1 + t % 4);
        s.analyses = pauli_flips().analyses;
        s.analyses.resize(2);
        s.analyses.push_back({AnalysisKind::outcome, {RegisterId::control()}});
        s.measure = MeasureRequest{rng.next()};
        scenarios.push_back(std::move(s));
    }
    for (const Scenario &s : scenarios) {
        const RunReport r = build_report(s);
        const std::string text = emit_report(r);
        CHECK(parse_report(text) == r);
        CHECK(emit_report(parse_report(text)) == text);
        CHECK(emit_report(build_report(s)) == text);
    }
}

TEST_CASE("emitted reports use sorted keys and [re, im] pairs", "[report]") {
    const std::string text = emit_report(build_report(pauli_flips()));
    CHECK(text.find("\"branch_table\"") < text.find("\"checks\""));
    CHECK(text.find("\"checks\"") < text.find("\"final_norm\""));
    CHECK(text.find("[1.0, 0.0]") != std::string::npos);
    CHECK(text.back() == '\n');
}

TEST_CASE("malformed reports", "[report]") {
    CHECK_THROWS_AS(parse_report("nope"), ParseError);
    CHECK_THROWS_AS(parse_report("{}"), ParseError);
    std::string text = emit_report(build_report(pauli_flips()));
    text.replace(text.find("\"final_norm\": 1.0"), 17, "\"final_norm\": \"1\"");
    try {
        (void)parse_report(text);
        FAIL("expected a ParseError");
    } catch (const ParseError &e) {
        CHECK(e.path() == "final_norm");
    }
}
