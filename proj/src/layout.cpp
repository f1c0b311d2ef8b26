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
#include "qdm/layout.hpp"

#include <charconv>

#include "qdm/errors.hpp"

namespace qdm {

std::string to_string(RegisterId id) {
    switch (id.kind) {
    case RegisterKind::control:
        return "C";
    case RegisterKind::memory:
        return "M" + std::to_string(id.slot);
    case RegisterKind::system:
        return "S";
    case RegisterKind::policy:
        return "P";
    }
    return "?";
}

RegisterId parse_register(std::string_view text) {
    if (text == "C") {
        return RegisterId::control();
    }
    if (text == "S") {
        return RegisterId::system();
    }
    if (text == "P") {
        return RegisterId::policy();
    }
    if (text.size() >= 2 && text.front() == 'M') {
        std::size_t k = 0;
        const auto digits = text.substr(1);
        const auto [end, ec] =
            std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 1) {
            return RegisterId::memory(k);
        }
    }
    throw LayoutError("unknown register '" + std::string(text) + "'");
}

RegisterLayout RegisterLayout::with_slots(std::size_t memory_slots) {
    if (memory_slots > kMaxMemorySlots) {
        throw CapacityError("layout with " + std::to_string(memory_slots) +
                            " memory slots exceeds the cap of " +
                            std::to_string(kMaxMemorySlots));
    }
    RegisterLayout layout;
    layout.total_ = memory_slots + 3;
    layout.policy_ = 0;
    layout.system_ = 1;
    layout.memories_.reserve(memory_slots);
    for (std::size_t k = 1; k <= memory_slots; ++k) {
        layout.memories_.push_back(memory_slots + 2 - k);
    }
    layout.control_ = layout.total_ - 1;
    return layout;
}

std::size_t RegisterLayout::memory_bit(std::size_t k) const {
    if (k < 1 || k > memories_.size()) {
        throw LayoutError("memory slot " + std::to_string(k) +
                          " out of range (layout has " +
                          std::to_string(memories_.size()) + " slots)");
    }
    return memories_[k - 1];
}

bool RegisterLayout::contains(RegisterId id) const noexcept {
    if (id.kind == RegisterKind::memory) {
        return id.slot >= 1 && id.slot <= memories_.size();
    }
    return id.slot == 0;
}

std::size_t RegisterLayout::bit(RegisterId id) const {
    if (!contains(id)) {
        throw LayoutError("register " + to_string(id) + " is not in the layout");
    }
    switch (id.kind) {
    case RegisterKind::control:
        return control_;
    case RegisterKind::memory:
        return memories_[id.slot - 1];
    case RegisterKind::system:
        return system_;
    case RegisterKind::policy:
        return policy_;
    }
    return 0;
}

std::vector<RegisterId> RegisterLayout::registers() const {
    std::vector<RegisterId> out;
    out.reserve(total_);
    out.push_back(RegisterId::control());
    for (std::size_t k = 1; k <= memories_.size(); ++k) {
        out.push_back(RegisterId::memory(k));
    }
    out.push_back(RegisterId::system());
    out.push_back(RegisterId::policy());
    return out;
}

RegisterLayout build_layout(std::size_t n_iterations) {
    if (n_iterations > kMaxMemorySlots) {
        throw CapacityError("n_iterations = " + std::to_string(n_iterations) +
                            " exceeds the cap of " +
                            std::to_string(kMaxMemorySlots));
    }
    if (n_iterations == 0) {
        throw ValidationError("n_iterations must be at least 1");
    }
    return RegisterLayout::with_slots(n_iterations);
}

} // namespace qdm
