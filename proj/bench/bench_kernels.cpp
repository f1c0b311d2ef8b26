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
// Serial vs OpenMP gate kernels over 10..20-qubit state vectors.
//
//   ./qdm_bench --benchmark_filter=Controlled
//   OMP_NUM_THREADS=8 ./qdm_bench

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qdm/kernels.hpp"
#include "qdm/rng.hpp"

namespace {

using qdm::Complex;
namespace k = qdm::kernels;

std::vector<Complex> random_state(std::size_t qubits) {
    qdm::CounterRng rng(qubits);
    std::vector<Complex> psi(std::size_t{1} << qubits);
    double n2 = 0.0;
    for (Complex &z : psi) {
        z = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        n2 += std::norm(z);
    }
    for (Complex &z : psi) {
        z /= std::sqrt(n2);
    }
    return psi;
}

const k::Mat2 kRx = [] {
    const double c = std::cos(0.3), s = std::sin(0.3);
    return k::Mat2{c, Complex(0, -s), Complex(0, -s), c};
}();
const k::Mat2 kX{0.0, 1.0, 1.0, 0.0};

template <void (*Apply)(std::span<Complex>, std::size_t, std::size_t, const k::Mat2 &,
                        const k::Mat2 &)>
void controlled(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto psi = random_state(n);
    for (auto _ : state) {
        // Control on the top bit, target near the bottom: the widest stride.
        Apply(psi, n - 1, 1, kRx, kX);
        benchmark::DoNotOptimize(psi.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
    state.counters["threads"] = k::parallel::max_threads();
}

template <void (*Apply)(std::span<Complex>, std::size_t, const k::Mat2 &)>
void single(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto psi = random_state(n);
    for (auto _ : state) {
        Apply(psi, n / 2, kRx);
        benchmark::DoNotOptimize(psi.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
}

template <double (*Norm)(std::span<const Complex>)>
void norm(benchmark::State &state) {
    const auto psi = random_state(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(Norm(psi));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(psi.size()));
}

} // namespace

BENCHMARK(controlled<k::serial::apply_controlled_1q>)->Name("Controlled/serial")->DenseRange(10, 20, 2);
BENCHMARK(controlled<k::parallel::apply_controlled_1q>)->Name("Controlled/parallel")->DenseRange(10, 20, 2);
BENCHMARK(single<k::serial::apply_1q>)->Name("Single/serial")->DenseRange(10, 20, 2);
BENCHMARK(single<k::parallel::apply_1q>)->Name("Single/parallel")->DenseRange(10, 20, 2);
BENCHMARK(norm<k::serial::norm_squared>)->Name("Norm/serial")->DenseRange(10, 20, 2);
BENCHMARK(norm<k::parallel::norm_squared>)->Name("Norm/parallel")->DenseRange(10, 20, 2);

BENCHMARK_MAIN();
