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

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace qdm {

enum class RegisterKind { control, memory, system, policy };

/// Names one register of the machine: C, M1..Mn, S or P.
struct RegisterId {
    RegisterKind kind = RegisterKind::control;
    std::size_t slot = 0; ///< 1-based memory slot; 0 for non-memory registers.

    static constexpr RegisterId control() { return {RegisterKind::control, 0}; }
    static constexpr RegisterId system() { return {RegisterKind::system, 0}; }
    static constexpr RegisterId policy() { return {RegisterKind::policy, 0}; }
    static constexpr RegisterId memory(std::size_t k) {
        return {RegisterKind::memory, k};
    }

    friend constexpr auto operator<=>(const RegisterId &,
                                      const RegisterId &) = default;
};

/// "C", "M3", "S", "P".
[[nodiscard]] std::string to_string(RegisterId id);

/// Inverse of to_string. Throws LayoutError on anything else.
[[nodiscard]] RegisterId parse_register(std::string_view text);

/// Largest number of memory slots that keeps the machine within kMaxQubits.
inline constexpr std::size_t kMaxMemorySlots = 17;

/**
 * Maps the machine registers onto bit positions of the global basis index.
 *
 * Registers are ordered C, M1, ..., Mn, S, P from the most significant bit
 * down, so the binary expansion of a basis index reads like the ket
 * |c m1 ... mn s p>. P is bit 0, S is bit 1, Mk is bit n+1-k and C is the top
 * bit.
 */
class RegisterLayout {
  public:
    /// Layout with `memory_slots` memories. Zero slots is allowed and
    /// describes the (C, S, P) substate carried by a branch.
    static RegisterLayout with_slots(std::size_t memory_slots);

    [[nodiscard]] std::size_t total_qubits() const noexcept { return total_; }
    [[nodiscard]] std::size_t memory_slots() const noexcept {
        return memories_.size();
    }
    [[nodiscard]] std::size_t dimension() const noexcept {
        return std::size_t{1} << total_;
    }

    [[nodiscard]] std::size_t control_bit() const noexcept { return control_; }
    [[nodiscard]] std::size_t system_bit() const noexcept { return system_; }
    [[nodiscard]] std::size_t policy_bit() const noexcept { return policy_; }
    /// Bit of memory slot k (1-based). Throws LayoutError when out of range.
    [[nodiscard]] std::size_t memory_bit(std::size_t k) const;
    [[nodiscard]] const std::vector<std::size_t> &memory_bits() const noexcept {
        return memories_;
    }

    [[nodiscard]] bool contains(RegisterId id) const noexcept;
    /// Throws LayoutError for registers not in this layout.
    [[nodiscard]] std::size_t bit(RegisterId id) const;

    /// All registers, most significant first.
    [[nodiscard]] std::vector<RegisterId> registers() const;

    friend bool operator==(const RegisterLayout &,
                           const RegisterLayout &) = default;

  private:
    RegisterLayout() = default;

    std::size_t control_ = 0;
    std::vector<std::size_t> memories_;
    std::size_t system_ = 0;
    std::size_t policy_ = 0;
    std::size_t total_ = 0;
};

/// Machine layout for `n_iterations` iterations, one fresh memory each.
/// Requires 1 <= n_iterations <= kMaxMemorySlots; CapacityError above the cap.
[[nodiscard]] RegisterLayout build_layout(std::size_t n_iterations);

} // namespace qdm
