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
#include "qdm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include <json.hpp>

#include "qdm/analysis.hpp"
#include "qdm/errors.hpp"
#include "json_format.hpp"

namespace qdm {

using nlohmann::json;

double quantize(double x) {
    if (!(std::abs(x) >= kPruneThreshold)) {
        return std::isnan(x) ? x : 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

Complex quantize(Complex z) {
    return {quantize(z.real()), quantize(z.imag())};
}

bool RunReport::all_checks_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const auto &kv) { return kv.second.passed; });
}

namespace {

CheckResult check(double deviation, double tolerance) {
    return {deviation <= tolerance, quantize(deviation)};
}

MarginalSummary summarize(const MarginalReport &m) {
    MarginalSummary out;
    out.reg = to_string(m.reg);
    const std::size_t dim = m.matrix.dim();
    out.matrix.assign(dim, std::vector<Complex>(dim));
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out.matrix[r][c] = quantize(m.matrix(r, c));
        }
    }
    out.max_offdiag = quantize(m.max_offdiag);
    for (const double p : m.diagonal_probs) {
        out.diagonal.push_back(quantize(p));
    }
    return out;
}

void memory_checks(const StateVector &state, const Scenario &scenario,
                   const Tolerances &tol, RunReport &report) {
    const std::size_t slots = state.layout().memory_slots();
    const BranchTable table = branch_decompose(state);
    report.checks["branch_probability_sum"] =
        check(std::abs(table.total_probability() - 1.0), tol.norm);

    const MarginalReport control =
        marginal_report(initialize(scenario.init, state.layout()), RegisterId::control());
    // The reflective map rotates C after the first write, so only M1 is
    // guaranteed to carry the initial control weights in extended mode.
    const std::size_t weighted = scenario.mode() == RunMode::extended ? 1 : slots;
    double offdiag = 0.0;
    double weight_dev = 0.0;
    for (std::size_t k = 1; k <= slots; ++k) {
        const MarginalReport m = memory_marginal(state, k);
        offdiag = std::max(offdiag, m.max_offdiag);
        if (k <= weighted) {
            for (std::size_t i = 0; i < 2; ++i) {
                weight_dev = std::max(
                    weight_dev, std::abs(m.diagonal_probs[i] - control.diagonal_probs[i]));
            }
        }
    }
    report.checks["memory_marginals_diagonal"] = check(offdiag, tol.diagonality);
    report.checks["memory_weights_match_control"] = check(weight_dev, tol.norm);
}

} // namespace

RunReport build_report(const Scenario &scenario, const Tolerances &tol,
                       std::optional<std::uint64_t> seed) {
    scenario.validate(tol);
    const StateVector state = run(scenario);

    RunReport report;
    report.scenario_name = scenario.name;
    const double norm = state.norm();
    report.final_norm = quantize(norm);
    report.checks["norm"] = check(std::abs(norm - 1.0), tol.norm);
    if (state.layout().memory_slots() > 0) {
        memory_checks(state, scenario, tol, report);
    }

    for (const AnalysisRequest &a : scenario.analyses) {
        switch (a.kind) {
        case AnalysisKind::branches:
            for (const auto &[key, entry] : branch_decompose(state).entries) {
                BranchSummary b{quantize(entry.probability), {}};
                for (const Complex z : entry.substate.amplitudes()) {
                    b.substate.push_back(quantize(z));
                }
                report.branch_table[key] = std::move(b);
            }
            break;
        case AnalysisKind::marginal:
            report.marginals.push_back(summarize(marginal_report(state, a.registers[0])));
            break;
        case AnalysisKind::outcome:
            for (int bit = 0; bit < 2; ++bit) {
                report.probabilities[to_string(a.registers[0]) + "_" + std::to_string(bit)] =
                    quantize(outcome_probability(state, a.registers[0], bit));
            }
            break;
        case AnalysisKind::separability: {
            const SeparabilityResult r = separability_check(state, a.registers[0], tol);
            report.separability.push_back(
                {to_string(a.registers[0]), r.separable, quantize(r.purity)});
            break;
        }
        case AnalysisKind::witness: {
            const WitnessResult w =
                no_cloning_witness(state, a.registers[0], a.registers[1], tol);
            report.witnesses.push_back({to_string(a.registers[0]),
                                        to_string(a.registers[1]), w.entangled,
                                        quantize(w.product_fidelity)});
            break;
        }
        }
    }

    const std::optional<std::uint64_t> measure_seed =
        seed ? seed : (scenario.measure ? std::optional(scenario.measure->seed) : std::nullopt);
    if (measure_seed) {
        const MeasurementResult m = measure_control(state, *measure_seed);
        report.measurement = MeasurementSummary{*measure_seed, m.outcome, quantize(m.probability)};
    }
    return report;
}

namespace {

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json complex_list(const std::vector<Complex> &v) {
    json out = json::array();
    for (const Complex z : v) {
        out.push_back(complex_json(z));
    }
    return out;
}

// Minimal typed accessors that report the offending field path.
struct Reader {
    const json &j;
    std::string path;

    [[nodiscard]] Reader field(const std::string &key) const {
        if (!j.is_object()) {
            throw ParseError(path, "expected an object");
        }
        const auto it = j.find(key);
        if (it == j.end()) {
            throw ParseError(sub(key), "missing required field");
        }
        return {*it, sub(key)};
    }
    [[nodiscard]] Reader index(std::size_t i) const {
        return {j.at(i), path + "[" + std::to_string(i) + "]"};
    }
    [[nodiscard]] std::string sub(const std::string &key) const {
        return path.empty() ? key : path + "." + key;
    }
    [[nodiscard]] const json &array() const {
        if (!j.is_array()) {
            throw ParseError(path, "expected an array");
        }
        return j;
    }
    [[nodiscard]] const json &object() const {
        if (!j.is_object()) {
            throw ParseError(path, "expected an object");
        }
        return j;
    }
    [[nodiscard]] double number() const {
        if (!j.is_number()) {
            throw ParseError(path, "expected a number");
        }
        return j.get<double>();
    }
    [[nodiscard]] bool boolean() const {
        if (!j.is_boolean()) {
            throw ParseError(path, "expected true or false");
        }
        return j.get<bool>();
    }
    [[nodiscard]] std::string string() const {
        if (!j.is_string()) {
            throw ParseError(path, "expected a string");
        }
        return j.get<std::string>();
    }
    [[nodiscard]] Complex complex() const {
        if (!j.is_array() || j.size() != 2) {
            throw ParseError(path, "expected an [re, im] pair");
        }
        return {index(0).number(), index(1).number()};
    }
    [[nodiscard]] std::vector<Complex> complex_list() const {
        std::vector<Complex> out;
        for (std::size_t i = 0; i < array().size(); ++i) {
            out.push_back(index(i).complex());
        }
        return out;
    }
};

} // namespace

std::string emit_report(const RunReport &r) {
    json doc = json::object();
    doc["scenario_name"] = r.scenario_name;
    doc["final_norm"] = r.final_norm;

    json branches = json::object();
    for (const auto &[key, b] : r.branch_table) {
        branches[key] = {{"probability", b.probability}, {"substate", complex_list(b.substate)}};
    }
    doc["branch_table"] = branches;

    json marginals = json::array();
    for (const MarginalSummary &m : r.marginals) {
        json rows = json::array();
        for (const auto &row : m.matrix) {
            rows.push_back(complex_list(row));
        }
        marginals.push_back({{"register", m.reg},
                             {"matrix", rows},
                             {"max_offdiag", m.max_offdiag},
                             {"diagonal", m.diagonal}});
    }
    doc["marginals"] = marginals;
    doc["probabilities"] = r.probabilities;

    json checks = json::object();
    for (const auto &[name, c] : r.checks) {
        checks[name] = {{"passed", c.passed}, {"deviation", c.deviation}};
    }
    doc["checks"] = checks;

    json separability = json::array();
    for (const SeparabilitySummary &s : r.separability) {
        separability.push_back(
            {{"register", s.reg}, {"separable", s.separable}, {"purity", s.purity}});
    }
    doc["separability"] = separability;

    json witnesses = json::array();
    for (const WitnessSummary &w : r.witnesses) {
        witnesses.push_back({{"registers", {w.a, w.b}},
                             {"entangled", w.entangled},
                             {"product_fidelity", w.product_fidelity}});
    }
    doc["witnesses"] = witnesses;

    if (r.measurement) {
        doc["measurement"] = {{"register", "C"},
                              {"seed", r.measurement->seed},
                              {"outcome", r.measurement->outcome},
                              {"probability", r.measurement->probability}};
    } else {
        doc["measurement"] = nullptr;
    }
    return detail::pretty_json_document(doc);
}

RunReport parse_report(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    const Reader root{doc, ""};
    RunReport r;
    r.scenario_name = root.field("scenario_name").string();
    r.final_norm = root.field("final_norm").number();

    const Reader branches = root.field("branch_table");
    for (const auto &item : branches.object().items()) {
        const Reader b{item.value(), branches.sub(item.key())};
        r.branch_table[item.key()] = {b.field("probability").number(),
                                      b.field("substate").complex_list()};
    }

    const Reader marginals = root.field("marginals");
    for (std::size_t i = 0; i < marginals.array().size(); ++i) {
        const Reader m = marginals.index(i);
        MarginalSummary s;
        s.reg = m.field("register").string();
        const Reader rows = m.field("matrix");
        for (std::size_t row = 0; row < rows.array().size(); ++row) {
            s.matrix.push_back(rows.index(row).complex_list());
        }
        s.max_offdiag = m.field("max_offdiag").number();
        const Reader diag = m.field("diagonal");
        for (std::size_t k = 0; k < diag.array().size(); ++k) {
            s.diagonal.push_back(diag.index(k).number());
        }
        r.marginals.push_back(std::move(s));
    }

    const Reader probabilities = root.field("probabilities");
    for (const auto &item : probabilities.object().items()) {
        r.probabilities[item.key()] =
            Reader{item.value(), probabilities.sub(item.key())}.number();
    }

    const Reader checks = root.field("checks");
    for (const auto &item : checks.object().items()) {
        const Reader c{item.value(), checks.sub(item.key())};
        r.checks[item.key()] = {c.field("passed").boolean(), c.field("deviation").number()};
    }

    const Reader separability = root.field("separability");
    for (std::size_t i = 0; i < separability.array().size(); ++i) {
        const Reader s = separability.index(i);
        r.separability.push_back({s.field("register").string(),
                                  s.field("separable").boolean(),
                                  s.field("purity").number()});
    }

    const Reader witnesses = root.field("witnesses");
    for (std::size_t i = 0; i < witnesses.array().size(); ++i) {
        const Reader w = witnesses.index(i);
        const Reader regs = w.field("registers");
        if (regs.array().size() != 2) {
            throw ParseError(regs.path, "expected a pair of registers");
        }
        r.witnesses.push_back({regs.index(0).string(), regs.index(1).string(),
                               w.field("entangled").boolean(),
                               w.field("product_fidelity").number()});
    }

    if (const auto it = doc.find("measurement"); it != doc.end() && !it->is_null()) {
        const Reader m{*it, "measurement"};
        const Reader seed = m.field("seed");
        if (!seed.j.is_number_unsigned()) {
            throw ParseError(seed.path, "expected a non-negative integer");
        }
        const Reader outcome = m.field("outcome");
        if (!outcome.j.is_number_integer() || (outcome.j != 0 && outcome.j != 1)) {
            throw ParseError(outcome.path, "expected 0 or 1");
        }
        r.measurement = MeasurementSummary{seed.j.get<std::uint64_t>(),
                                           outcome.j.get<int>(),
                                           m.field("probability").number()};
    }
    return r;
}

} // namespace qdm
