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
#include "qdm/scenario.hpp"

#include <initializer_list>

#include <json.hpp>

#include "qdm/errors.hpp"
#include "json_format.hpp"

namespace qdm {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

std::string at(const std::string &path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

std::string at(const std::string &path, std::size_t index) {
    return path + "[" + std::to_string(index) + "]";
}

void require_object(const json &j, const std::string &path,
                    std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw ParseError(path, "expected an object");
    }
    for (const auto &item : j.items()) {
        bool known = false;
        for (const auto key : allowed) {
            known = known || item.key() == key;
        }
        if (!known) {
            throw ParseError(at(path, item.key()), "unknown field");
        }
    }
}

const json &require_field(const json &j, const std::string &path,
                          std::string_view key) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) {
        throw ParseError(at(path, key), "missing required field");
    }
    return *it;
}

double parse_real(const json &j, const std::string &path) {
    if (!j.is_number()) {
        throw ParseError(path, "expected a number");
    }
    return j.get<double>();
}

Complex parse_amplitude(const json &j, const std::string &path) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2) {
        return {parse_real(j[0], at(path, 0)), parse_real(j[1], at(path, 1))};
    }
    throw ParseError(path, "expected a number or an [re, im] pair");
}

RegisterId parse_register_at(const json &j, const std::string &path) {
    if (!j.is_string()) {
        throw ParseError(path, "expected a register name (C, M<k>, S, P)");
    }
    try {
        return parse_register(j.get<std::string>());
    } catch (const LayoutError &e) {
        throw ParseError(path, e.what());
    }
}

GateSpec parse_gate(const json &j, const std::string &path) {
    require_object(j, path, {"named", "angle", "raw"});
    const bool has_named = j.contains("named");
    const bool has_raw = j.contains("raw");
    if (has_named == has_raw) {
        throw ParseError(path, "gate needs exactly one of 'named' or 'raw'");
    }
    if (has_raw) {
        if (j.contains("angle")) {
            throw ParseError(at(path, "angle"), "raw gates take no angle");
        }
        const json &rows = j["raw"];
        const std::string raw_path = at(path, "raw");
        if (!rows.is_array() || rows.size() != 2) {
            throw ParseError(raw_path, "expected a 2x2 matrix");
        }
        Matrix m(2);
        for (std::size_t r = 0; r < 2; ++r) {
            if (!rows[r].is_array() || rows[r].size() != 2) {
                throw ParseError(at(raw_path, r), "expected a row of 2 entries");
            }
            for (std::size_t c = 0; c < 2; ++c) {
                m(r, c) = parse_amplitude(rows[r][c], at(at(raw_path, r), c));
            }
        }
        return GateSpec::raw(std::move(m));
    }
    const json &named = j["named"];
    if (!named.is_string()) {
        throw ParseError(at(path, "named"), "expected a gate name");
    }
    const auto kind = parse_gate_kind(named.get<std::string>());
    if (!kind || *kind == GateKind::raw) {
        throw ParseError(at(path, "named"),
                         "unknown gate '" + named.get<std::string>() + "'");
    }
    GateSpec gate{*kind, {}, {}};
    if (takes_angle(*kind)) {
        const json &angle = require_field(j, path, "angle");
        const std::string angle_path = at(path, "angle");
        if (angle.is_number()) {
            gate.angle = Angle::of(angle.get<double>());
        } else if (angle.is_string()) {
            try {
                gate.angle = Angle::parse(angle.get<std::string>());
            } catch (const ValidationError &e) {
                throw ParseError(angle_path, e.what());
            }
        } else {
            throw ParseError(angle_path, "expected radians or an expression like \"pi/3\"");
        }
    } else if (j.contains("angle")) {
        throw ParseError(at(path, "angle"),
                         "gate '" + named.get<std::string>() + "' takes no angle");
    }
    return gate;
}

GateSpec optional_gate(const json &j, const std::string &path, std::string_view key) {
    const auto it = j.find(std::string(key));
    return it == j.end() ? GateSpec::identity() : parse_gate(*it, at(path, key));
}

IterationSpec parse_iteration(const json &j, const std::string &path) {
    require_object(j, path, {"u0", "u1", "f0", "f1", "v0", "v1", "r0", "r1"});
    IterationSpec spec;
    spec.u0 = parse_gate(require_field(j, path, "u0"), at(path, "u0"));
    spec.u1 = parse_gate(require_field(j, path, "u1"), at(path, "u1"));
    spec.f0 = optional_gate(j, path, "f0");
    spec.f1 = optional_gate(j, path, "f1");
    spec.v0 = optional_gate(j, path, "v0");
    spec.v1 = optional_gate(j, path, "v1");
    const bool r0 = j.contains("r0");
    const bool r1 = j.contains("r1");
    if (r0 != r1) {
        throw ParseError(at(path, r0 ? "r1" : "r0"),
                         "r0 and r1 must be given together");
    }
    if (r0) {
        spec.reflect = ReflectPair{parse_gate(j["r0"], at(path, "r0")),
                                   parse_gate(j["r1"], at(path, "r1"))};
    }
    return spec;
}

InitSpec parse_init(const json &j, const std::string &path) {
    require_object(j, path, {"alpha", "beta", "gamma", "delta", "mode", "system_init"});
    InitSpec init;
    init.alpha = parse_amplitude(require_field(j, path, "alpha"), at(path, "alpha"));
    init.beta = parse_amplitude(require_field(j, path, "beta"), at(path, "beta"));
    init.gamma = parse_amplitude(require_field(j, path, "gamma"), at(path, "gamma"));
    init.delta = parse_amplitude(require_field(j, path, "delta"), at(path, "delta"));
    const json &mode = require_field(j, path, "mode");
    if (!mode.is_string()) {
        throw ParseError(at(path, "mode"), "expected an initialization mode");
    }
    const auto parsed = parse_init_mode(mode.get<std::string>());
    if (!parsed) {
        throw ParseError(at(path, "mode"),
                         "unknown mode '" + mode.get<std::string>() +
                             "' (uncorrelated, correlated_c_to_p, "
                             "copy_c_to_p_from_zero)");
    }
    init.mode = *parsed;
    init.system_init = optional_gate(j, path, "system_init");
    return init;
}

AnalysisRequest parse_analysis(const json &j, const std::string &path) {
    if (j.is_string()) {
        if (j.get<std::string>() != "branches") {
            throw ParseError(path, "unknown analysis '" + j.get<std::string>() + "'");
        }
        return {AnalysisKind::branches, {}};
    }
    if (!j.is_object() || j.size() != 1) {
        throw ParseError(path, "expected \"branches\" or a single-key object");
    }
    const auto &[key, value] = *j.items().begin();
    const std::string sub = at(path, key);
    for (const AnalysisKind kind : {AnalysisKind::marginal, AnalysisKind::outcome,
                                    AnalysisKind::separability}) {
        if (key == to_string(kind)) {
            return {kind, {parse_register_at(value, sub)}};
        }
    }
    if (key == "witness") {
        if (!value.is_array() || value.size() != 2) {
            throw ParseError(sub, "expected a pair of registers");
        }
        return {AnalysisKind::witness,
                {parse_register_at(value[0], at(sub, 0)),
                 parse_register_at(value[1], at(sub, 1))}};
    }
    throw ParseError(sub, "unknown analysis");
}

MeasureRequest parse_measure(const json &j, const std::string &path) {
    require_object(j, path, {"seed", "register"});
    if (const auto it = j.find("register"); it != j.end()) {
        if (!it->is_string() || it->get<std::string>() != "C") {
            throw ParseError(at(path, "register"), "only the control register \"C\" can be measured");
        }
    }
    const json &seed = require_field(j, path, "seed");
    if (!seed.is_number_unsigned() && !(seed.is_number_integer() && seed.get<std::int64_t>() >= 0)) {
        throw ParseError(at(path, "seed"), "expected a non-negative integer");
    }
    return {seed.get<std::uint64_t>()};
}

ojson amplitude_json(Complex z) { return ojson::array({z.real(), z.imag()}); }

ojson gate_json(const GateSpec &gate) {
    ojson j = ojson::object();
    if (gate.kind == GateKind::raw) {
        const Matrix m = gate.matrix();
        j["raw"] = ojson::array({ojson::array({amplitude_json(m(0, 0)), amplitude_json(m(0, 1))}),
                                 ojson::array({amplitude_json(m(1, 0)), amplitude_json(m(1, 1))})});
        return j;
    }
    j["named"] = std::string(to_string(gate.kind));
    if (takes_angle(gate.kind)) {
        if (gate.angle.text.empty()) {
            j["angle"] = gate.angle.radians;
        } else {
            j["angle"] = gate.angle.text;
        }
    }
    return j;
}

} // namespace

std::string_view to_string(AnalysisKind kind) {
    switch (kind) {
    case AnalysisKind::branches:
        return "branches";
    case AnalysisKind::marginal:
        return "marginal";
    case AnalysisKind::outcome:
        return "outcome";
    case AnalysisKind::separability:
        return "separability";
    case AnalysisKind::witness:
        return "witness";
    }
    return "?";
}

RunMode Scenario::mode() const noexcept {
    for (const auto &it : iterations) {
        if (it.extended()) {
            return RunMode::extended;
        }
    }
    return RunMode::canonical;
}

void Scenario::validate(const Tolerances &tol) const {
    if (iterations.size() > kMaxMemorySlots) {
        throw ValidationError("scenario has " + std::to_string(iterations.size()) +
                              " iterations; the cap is " +
                              std::to_string(kMaxMemorySlots));
    }
    init.validate(tol);
    for (std::size_t k = 0; k < iterations.size(); ++k) {
        const IterationSpec &it = iterations[k];
        const std::string p = "iterations[" + std::to_string(k) + "].";
        (void)resolve(it.u0, tol.unitarity, p + "u0");
        (void)resolve(it.u1, tol.unitarity, p + "u1");
        (void)resolve(it.f0, tol.unitarity, p + "f0");
        (void)resolve(it.f1, tol.unitarity, p + "f1");
        (void)resolve(it.v0, tol.unitarity, p + "v0");
        (void)resolve(it.v1, tol.unitarity, p + "v1");
        if (it.reflect) {
            (void)resolve(it.reflect->r0, tol.unitarity, p + "r0");
            (void)resolve(it.reflect->r1, tol.unitarity, p + "r1");
        }
    }
    const auto layout = RegisterLayout::with_slots(iterations.size());
    for (std::size_t i = 0; i < analyses.size(); ++i) {
        const AnalysisRequest &a = analyses[i];
        const std::string p = "analyses[" + std::to_string(i) + "]";
        const std::size_t expected = a.kind == AnalysisKind::branches  ? 0
                                     : a.kind == AnalysisKind::witness ? 2
                                                                       : 1;
        if (a.registers.size() != expected) {
            throw ValidationError(p + ": " + std::string(to_string(a.kind)) +
                                  " takes " + std::to_string(expected) + " registers");
        }
        if (a.kind == AnalysisKind::branches && iterations.empty()) {
            throw ValidationError(p + ": branches need at least one iteration");
        }
        for (const RegisterId r : a.registers) {
            if (!layout.contains(r)) {
                throw ValidationError(p + ": register " + to_string(r) +
                                      " does not exist in a run of " +
                                      std::to_string(iterations.size()) + " iterations");
            }
        }
        if (a.kind == AnalysisKind::witness && a.registers[0] == a.registers[1]) {
            throw ValidationError(p + ": witness needs two distinct registers");
        }
    }
}

Scenario parse_scenario(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError("", std::string("malformed JSON: ") + e.what());
    }
    const std::string root;
    require_object(doc, root, {"name", "mode", "init", "iterations", "analyses", "measure"});

    Scenario s;
    const json &name = require_field(doc, root, "name");
    if (!name.is_string()) {
        throw ParseError("name", "expected a string");
    }
    s.name = name.get<std::string>();
    s.init = parse_init(require_field(doc, root, "init"), "init");

    const json &iterations = require_field(doc, root, "iterations");
    if (!iterations.is_array()) {
        throw ParseError("iterations", "expected an array");
    }
    for (std::size_t k = 0; k < iterations.size(); ++k) {
        s.iterations.push_back(parse_iteration(iterations[k], at("iterations", k)));
    }

    if (const auto it = doc.find("analyses"); it != doc.end()) {
        if (!it->is_array()) {
            throw ParseError("analyses", "expected an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            s.analyses.push_back(parse_analysis((*it)[i], at("analyses", i)));
        }
    }
    if (const auto it = doc.find("measure"); it != doc.end() && !it->is_null()) {
        s.measure = parse_measure(*it, "measure");
    }
    if (const auto it = doc.find("mode"); it != doc.end()) {
        if (!it->is_string() ||
            (it->get<std::string>() != "canonical" && it->get<std::string>() != "extended")) {
            throw ParseError("mode", "expected \"canonical\" or \"extended\"");
        }
        const bool extended = it->get<std::string>() == "extended";
        if (extended != (s.mode() == RunMode::extended)) {
            throw ValidationError(
                "mode: declared '" + it->get<std::string>() +
                "' but extended mode is used iff some iteration has r0/r1");
        }
    }
    s.validate();
    return s;
}

std::string serialize_scenario(const Scenario &s) {
    ojson doc = ojson::object();
    doc["name"] = s.name;
    doc["mode"] = s.mode() == RunMode::extended ? "extended" : "canonical";

    ojson init = ojson::object();
    init["alpha"] = amplitude_json(s.init.alpha);
    init["beta"] = amplitude_json(s.init.beta);
    init["gamma"] = amplitude_json(s.init.gamma);
    init["delta"] = amplitude_json(s.init.delta);
    init["mode"] = std::string(to_string(s.init.mode));
    if (s.init.system_init != GateSpec::identity()) {
        init["system_init"] = gate_json(s.init.system_init);
    }
    doc["init"] = init;

    ojson iterations = ojson::array();
    for (const IterationSpec &it : s.iterations) {
        ojson j = ojson::object();
        j["u0"] = gate_json(it.u0);
        j["u1"] = gate_json(it.u1);
        const std::pair<const char *, const GateSpec *> optional[] = {
            {"f0", &it.f0}, {"f1", &it.f1}, {"v0", &it.v0}, {"v1", &it.v1}};
        for (const auto &[key, gate] : optional) {
            if (*gate != GateSpec::identity()) {
                j[key] = gate_json(*gate);
            }
        }
        if (it.reflect) {
            j["r0"] = gate_json(it.reflect->r0);
            j["r1"] = gate_json(it.reflect->r1);
        }
        iterations.push_back(j);
    }
    doc["iterations"] = iterations;

    ojson analyses = ojson::array();
    for (const AnalysisRequest &a : s.analyses) {
        if (a.kind == AnalysisKind::branches) {
            analyses.push_back("branches");
        } else if (a.kind == AnalysisKind::witness) {
            analyses.push_back({{"witness", {to_string(a.registers[0]),
                                             to_string(a.registers[1])}}});
        } else {
            analyses.push_back({{std::string(to_string(a.kind)), to_string(a.registers[0])}});
        }
    }
    doc["analyses"] = analyses;
    if (s.measure) {
        doc["measure"] = {{"seed", s.measure->seed}};
    }
    return detail::pretty_json_document(doc);
}

} // namespace qdm
