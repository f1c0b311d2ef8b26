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

#include <cstddef>

namespace qdm {

/// Hard cap on the global register count; 2^20 amplitudes.
inline constexpr std::size_t kMaxQubits = 20;

/// Branch entries lighter than this are dropped as rounding dust.
inline constexpr double kPruneThreshold = 1e-12;

struct Tolerances {
    double unitarity = 1e-9;
    double norm = 1e-10;
    double hermiticity = 1e-10;
    double diagonality = 1e-12;
    double positivity = 1e-9;
    double purity = 1e-9;
};

} // namespace qdm
