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
#include "qdm/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "qdm/errors.hpp"
#include "qdm/kernels.hpp"

namespace qdm {

namespace {

// Compacts the bits of `index` selected by `bits` (most significant first).
std::size_t gather_bits(std::size_t index, std::span<const std::size_t> bits) {
    std::size_t out = 0;
    for (const std::size_t b : bits) {
        out = (out << 1) | ((index >> b) & 1U);
    }
    return out;
}

std::size_t scatter_bits(std::size_t packed, std::span<const std::size_t> bits) {
    std::size_t out = 0;
    const std::size_t m = bits.size();
    for (std::size_t j = 0; j < m; ++j) {
        if ((packed >> (m - 1 - j)) & 1U) {
            out |= std::size_t{1} << bits[j];
        }
    }
    return out;
}

std::string memory_string(std::size_t packed, std::size_t n) {
    std::string s(n, '0');
    for (std::size_t j = 0; j < n; ++j) {
        if ((packed >> (n - 1 - j)) & 1U) {
            s[j] = '1';
        }
    }
    return s;
}

// Bits of C, S, P in layout order.
std::vector<std::size_t> rest_bits(const RegisterLayout &layout) {
    return {layout.control_bit(), layout.system_bit(), layout.policy_bit()};
}

} // namespace

double BranchTable::total_probability() const {
    double total = 0.0;
    for (const auto &[key, entry] : entries) {
        total += entry.probability;
    }
    return total;
}

BranchTable branch_decompose(const StateVector &state) {
    const RegisterLayout &layout = state.layout();
    const std::size_t n = layout.memory_slots();
    if (n == 0) {
        throw LayoutError("branch decomposition needs at least one memory slot");
    }
    const auto &mem = layout.memory_bits();
    const auto rest = rest_bits(layout);

    std::vector<std::vector<Complex>> blocks(std::size_t{1} << n);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (amps[i] == Complex{}) {
            continue;
        }
        auto &block = blocks[gather_bits(i, mem)];
        if (block.empty()) {
            block.resize(8);
        }
        block[gather_bits(i, rest)] = amps[i];
    }

    BranchTable table;
    const auto sub_layout = RegisterLayout::with_slots(0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        auto &block = blocks[b];
        if (block.empty()) {
            continue;
        }
        const double p = norm_squared(block);
        if (p < kPruneThreshold) {
            continue;
        }
        const double scale = 1.0 / std::sqrt(p);
        for (Complex &z : block) {
            z *= scale;
        }
        table.entries.emplace(memory_string(b, n),
                              BranchEntry{p, StateVector(sub_layout, std::move(block))});
    }
    return table;
}

std::vector<Complex> reassemble(const BranchTable &table,
                                const RegisterLayout &layout) {
    const auto &mem = layout.memory_bits();
    const auto rest = rest_bits(layout);
    std::vector<Complex> out(layout.dimension());
    for (const auto &[key, entry] : table.entries) {
        if (key.size() != mem.size()) {
            throw LayoutError("branch key '" + key + "' does not match the layout");
        }
        const std::size_t mem_pattern =
            scatter_bits(static_cast<std::size_t>(std::stoull(key, nullptr, 2)), mem);
        const double weight = std::sqrt(entry.probability);
        const auto sub = entry.substate.amplitudes();
        for (std::size_t r = 0; r < sub.size(); ++r) {
            out[mem_pattern | scatter_bits(r, rest)] += weight * sub[r];
        }
    }
    return out;
}

double max_offdiagonal(const Matrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (r != c) {
                worst = std::max(worst, std::abs(m(r, c)));
            }
        }
    }
    return worst;
}

MarginalReport marginal_report(const StateVector &state, RegisterId reg) {
    const RegisterId keep[] = {reg};
    DensityMatrix rho = partial_trace(state.amplitudes(), keep, state.layout());
    std::vector<double> diag(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        diag[i] = rho(i, i).real();
    }
    const double off = max_offdiagonal(rho.matrix());
    return {reg, std::move(rho), off, std::move(diag)};
}

MarginalReport memory_marginal(const StateVector &state, std::size_t k) {
    (void)state.layout().memory_bit(k);
    return marginal_report(state, RegisterId::memory(k));
}

DensityMatrix register_marginal(const StateVector &state,
                                std::span<const RegisterId> regs) {
    return partial_trace(state.amplitudes(), regs, state.layout());
}

double outcome_probability(const StateVector &state, RegisterId reg, int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw ValidationError("outcome must be 0 or 1");
    }
    const double p1 = kernels::probability_one(state.amplitudes(),
                                               state.layout().bit(reg));
    return outcome == 1 ? p1 : kernels::norm_squared(state.amplitudes()) - p1;
}

WitnessResult no_cloning_witness(const StateVector &state, RegisterId a,
                                 RegisterId b, const Tolerances &tol) {
    if (a == b) {
        throw LayoutError("witness needs two distinct registers, got " +
                          to_string(a) + " twice");
    }
    const RegisterId pair_ids[] = {a, b};
    const DensityMatrix pair = register_marginal(state, pair_ids);
    const RegisterId first[] = {std::min(a, b, [&](RegisterId x, RegisterId y) {
        return state.layout().bit(x) > state.layout().bit(y);
    })};
    const RegisterId second[] = {first[0] == a ? b : a};
    const DensityMatrix rho_a = register_marginal(state, first);
    const DensityMatrix rho_b = register_marginal(state, second);
    const double product_fidelity = fidelity(pair, kron(rho_a, rho_b));

    const double cut = 1.0 - tol.purity;
    bool entangled = false;
    if (purity(pair) >= cut) {
        entangled = purity(rho_a) < cut;
    } else {
        entangled = product_fidelity < cut;
    }
    return {entangled, product_fidelity};
}

SeparabilityResult separability_check(const StateVector &state, RegisterId reg,
                                      const Tolerances &tol) {
    const RegisterId keep[] = {reg};
    const double p = purity(register_marginal(state, keep));
    return {p >= 1.0 - tol.purity, p};
}

} // namespace qdm
