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
#include <cstdint>

#include "qdm/kernels.hpp"

namespace qdm::kernels::detail {

/// Spreads `i` apart so that bit position `bit` of the result is zero.
inline std::size_t insert_zero(std::size_t i, std::size_t bit) noexcept {
    const std::size_t low = i & ((std::size_t{1} << bit) - 1);
    return ((i >> bit) << (bit + 1)) | low;
}

inline void apply_pair(Complex &a0, Complex &a1, const Mat2 &g) noexcept {
    const Complex v0 = a0;
    const Complex v1 = a1;
    a0 = g[0] * v0 + g[1] * v1;
    a1 = g[2] * v0 + g[3] * v1;
}

} // namespace qdm::kernels::detail
