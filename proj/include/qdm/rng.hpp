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

#include <cstdint>

namespace qdm {

/**
 * Counter-based generator: the n-th draw is a fixed mix of (key, n), so a
 * stream is fully determined by its seed and can be split into independent
 * child streams without shared state. The mixer is the SplitMix64 finalizer.
 */
class CounterRng {
  public:
    explicit constexpr CounterRng(std::uint64_t seed) noexcept
        : key_(mix(seed ^ 0x6a09e667f3bcc909ULL)) {}

    constexpr std::uint64_t next() noexcept {
        ++counter_;
        return mix(key_ + counter_ * 0x9e3779b97f4a7c15ULL);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Independent stream keyed on (this stream's key, `stream`).
    [[nodiscard]] constexpr CounterRng split(std::uint64_t stream) const noexcept {
        return CounterRng(key_ ^ mix(stream + 0xbb67ae8584caa73bULL));
    }

  private:
    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace qdm
