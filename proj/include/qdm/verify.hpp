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
 * @file verify.hpp
 *
 * Self-check suites run by `qdm verify`: golden scenarios, oracle
 * equivalence, memory-marginal classicality, branch conservation and norm
 * preservation. Each check reports its measured deviation against the
 * tolerance it was judged by.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdm/tolerances.hpp"

namespace qdm {

struct CheckOutcome {
    std::string name; ///< "<suite>.<check>"
    bool passed = false;
    double deviation = 0.0;
    double tolerance = 0.0;
};

struct VerifyOptions {
    std::optional<std::string> only; ///< a single suite name
    Tolerances tol;
    std::uint64_t seed = 20260101;
};

/// golden, oracle, marginals, branches, norm.
[[nodiscard]] const std::vector<std::string_view> &verify_suites();

/// Runs the selected suites; results sorted by name. ValidationError for an
/// unknown suite name.
[[nodiscard]] std::vector<CheckOutcome> run_verify(const VerifyOptions &options);

/// Sets one field from "key=value". ValidationError on an unknown key or a
/// value that is not a non-negative number.
void apply_tolerance_override(Tolerances &tol, std::string_view assignment);

} // namespace qdm
