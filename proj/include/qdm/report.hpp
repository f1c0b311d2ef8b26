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
#pragma once

/**
 * @file report.hpp
 *
 * Structured results of a scenario run and their JSON form. Every real
 * number in a RunReport is stored already rounded to 12 significant digits
 * (moduli below 1e-12 become 0), so emit/parse round-trips exactly.
 */

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdm/scenario.hpp"

namespace qdm {

/// Rounds to 12 significant digits; |x| < 1e-12 maps to 0.
[[nodiscard]] double quantize(double x);
[[nodiscard]] Complex quantize(Complex z);

struct CheckResult {
    bool passed = false;
    double deviation = 0.0;
    friend bool operator==(const CheckResult &, const CheckResult &) = default;
};

struct BranchSummary {
    double probability = 0.0;
    std::vector<Complex> substate; ///< over (C, S, P), C most significant
    friend bool operator==(const BranchSummary &, const BranchSummary &) = default;
};

struct MarginalSummary {
    std::string reg;
    std::vector<std::vector<Complex>> matrix;
    double max_offdiag = 0.0;
    std::vector<double> diagonal;
    friend bool operator==(const MarginalSummary &, const MarginalSummary &) = default;
};

struct SeparabilitySummary {
    std::string reg;
    bool separable = false;
    double purity = 0.0;
    friend bool operator==(const SeparabilitySummary &,
                           const SeparabilitySummary &) = default;
};

struct WitnessSummary {
    std::string a;
    std::string b;
    bool entangled = false;
    double product_fidelity = 0.0;
    friend bool operator==(const WitnessSummary &, const WitnessSummary &) = default;
};

struct MeasurementSummary {
    std::uint64_t seed = 0;
    int outcome = 0;
    double probability = 0.0;
    friend bool operator==(const MeasurementSummary &,
                           const MeasurementSummary &) = default;
};

struct RunReport {
    std::string scenario_name;
    double final_norm = 0.0;
    std::map<std::string, BranchSummary> branch_table;
    std::vector<MarginalSummary> marginals;
    /// Outcome probabilities keyed "<register>_<bit>", e.g. "S_1".
    std::map<std::string, double> probabilities;
    /// norm, branch_probability_sum, memory_marginals_diagonal,
    /// memory_weights_match_control (the latter three need a memory slot).
    std::map<std::string, CheckResult> checks;
    std::vector<SeparabilitySummary> separability;
    std::vector<WitnessSummary> witnesses;
    std::optional<MeasurementSummary> measurement;

    [[nodiscard]] bool all_checks_passed() const;

    friend bool operator==(const RunReport &, const RunReport &) = default;
};

/// Runs `scenario` and performs its analyses. `seed` overrides (or supplies)
/// the scenario's measurement request.
[[nodiscard]] RunReport build_report(const Scenario &scenario,
                                     const Tolerances &tol = {},
                                     std::optional<std::uint64_t> seed = std::nullopt);

/// Sorted keys, two-space indent, trailing newline.
[[nodiscard]] std::string emit_report(const RunReport &report);

/// Inverse of emit_report. ParseError with a field path on malformed input.
[[nodiscard]] RunReport parse_report(std::string_view text);

} // namespace qdm
