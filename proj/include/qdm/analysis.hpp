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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qdm/machine.hpp"

namespace qdm {

struct BranchEntry {
    double probability = 0.0;
    StateVector substate; ///< normalized, over (C, S, P)
};

/// Main branches keyed by memory string "b1b2...bn" (M1 first).
struct BranchTable {
    std::map<std::string, BranchEntry> entries;

    [[nodiscard]] double total_probability() const;
};

/// Projects onto every memory string with weight above kPruneThreshold and
/// renormalizes the remaining (C, S, P) amplitudes. LayoutError if the state
/// has no memory slots.
[[nodiscard]] BranchTable branch_decompose(const StateVector &state);

/// Inverse of branch_decompose: sum_b sqrt(p_b) |b>_M (x) substate_b, with
/// the memory bits interleaved back into `layout` order.
[[nodiscard]] std::vector<Complex> reassemble(const BranchTable &table,
                                              const RegisterLayout &layout);

struct MarginalReport {
    RegisterId reg;
    DensityMatrix matrix;
    double max_offdiag = 0.0;
    std::vector<double> diagonal_probs;
};

[[nodiscard]] double max_offdiagonal(const Matrix &m);

/// Reduced state of one register with its diagonality metrics.
[[nodiscard]] MarginalReport marginal_report(const StateVector &state,
                                             RegisterId reg);

/// marginal_report for memory slot k. LayoutError if k is out of range.
[[nodiscard]] MarginalReport memory_marginal(const StateVector &state,
                                             std::size_t k);

/// Reduced density matrix over `regs`, in layout order.
[[nodiscard]] DensityMatrix register_marginal(const StateVector &state,
                                              std::span<const RegisterId> regs);

/// Born probability of reading `outcome` on `reg`.
[[nodiscard]] double outcome_probability(const StateVector &state,
                                         RegisterId reg, int outcome);

struct WitnessResult {
    bool entangled = false;
    double product_fidelity = 1.0; ///< F(rho_ab, rho_a (x) rho_b)
};

/**
 * Whether registers a and b share correlations beyond a product state.
 * A pure pair is entangled iff its single-register marginal is mixed; a mixed
 * pair is flagged when its fidelity to the product of its marginals falls
 * below 1 - tol.purity.
 */
[[nodiscard]] WitnessResult no_cloning_witness(const StateVector &state,
                                               RegisterId a, RegisterId b,
                                               const Tolerances &tol = {});

struct SeparabilityResult {
    bool separable = false;
    double purity = 0.0;
};

/// Separable iff the single-register marginal has purity >= 1 - tol.purity.
[[nodiscard]] SeparabilityResult separability_check(const StateVector &state,
                                                    RegisterId reg,
                                                    const Tolerances &tol = {});

} // namespace qdm
