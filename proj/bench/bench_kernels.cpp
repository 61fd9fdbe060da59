// Copyright 2026 The qaoa-engine Authors
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

// Serial reference kernels versus their OpenMP counterparts.
//
//   ./bench_kernels --benchmark_filter=rx_all

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "qaoa/expectation.hpp"
#include "qaoa/instances.hpp"
#include "qaoa/kernels.hpp"

namespace k = qaoa::kernels;

namespace {

std::vector<k::cplx> make_state(std::size_t n) {
    std::vector<k::cplx> a(std::size_t{1} << n,
                           k::cplx(1.0 / std::sqrt(static_cast<double>(std::size_t{1} << n)), 0.0));
    return a;
}

std::vector<double> make_diag(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> d(std::size_t{1} << n);
    for (auto &x : d) {
        x = u(rng);
    }
    return d;
}

template <void (*Kernel)(std::span<k::cplx>, std::size_t, double)>
void rx_all(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = make_state(n);
    for (auto _ : state) {
        Kernel(a, n, 0.3);
        benchmark::DoNotOptimize(a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <void (*Kernel)(std::span<k::cplx>, std::span<const double>, double)>
void diagonal_phase(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto a = make_state(n);
    const auto d = make_diag(n);
    for (auto _ : state) {
        Kernel(a, d, 0.3);
        benchmark::DoNotOptimize(a.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

template <double (*Kernel)(std::span<const k::cplx>, std::span<const double>)>
void expectation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = make_state(n);
    const auto d = make_diag(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(Kernel(a, d));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(a.size()));
}

void expectation_F_butterfly(benchmark::State &state) {
    const auto s = qaoa::build_cost_spectrum(qaoa::maxcut_to_ising(qaoa::instances::butterfly()));
    const qaoa::AngleSchedule a({0.5}, {0.3});
    for (auto _ : state) {
        benchmark::DoNotOptimize(qaoa::expectation_F(s, a));
    }
}

} // namespace

BENCHMARK(rx_all<k::serial::rx_all>)->Name("rx_all/serial")->DenseRange(12, 20, 4);
BENCHMARK(rx_all<k::parallel::rx_all>)->Name("rx_all/parallel")->DenseRange(12, 20, 4);
BENCHMARK(diagonal_phase<k::serial::diagonal_phase>)->Name("diagonal_phase/serial")->DenseRange(12, 20, 4);
BENCHMARK(diagonal_phase<k::parallel::diagonal_phase>)->Name("diagonal_phase/parallel")->DenseRange(12, 20, 4);
BENCHMARK(expectation<k::serial::expectation_diagonal>)->Name("expectation/serial")->DenseRange(12, 20, 4);
BENCHMARK(expectation<k::parallel::expectation_diagonal>)->Name("expectation/parallel")->DenseRange(12, 20, 4);
BENCHMARK(expectation_F_butterfly);

BENCHMARK_MAIN();
