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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "qaoa/kernels.hpp"

namespace qaoa::kernels::parallel {

namespace {

using index_t = std::int64_t;

/// Index of the k-th amplitude whose `bit` is clear.
inline std::uint64_t insert_zero(std::uint64_t k, std::uint64_t bit) {
    const std::uint64_t low = bit - 1;
    return ((k & ~low) << 1U) | (k & low);
}

/// Sums f(z) over [0, dim) in kReductionBlock-sized blocks. Block partials are
/// combined serially so the rounding does not depend on the thread count.
template <typename T, typename F> T blocked_sum(std::size_t dim, F &&f) {
    const auto n_blocks =
        static_cast<index_t>((dim + kReductionBlock - 1) / kReductionBlock);
    std::vector<T> partial(static_cast<std::size_t>(n_blocks), T{});
#pragma omp parallel for schedule(static)
    for (index_t b = 0; b < n_blocks; ++b) {
        const auto lo = static_cast<std::size_t>(b) * kReductionBlock;
        const auto hi = std::min(dim, lo + kReductionBlock);
        T acc{};
        for (std::size_t z = lo; z < hi; ++z) {
            acc += f(z);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    T total{};
    for (const auto &p : partial) {
        total += p;
    }
    return total;
}

} // namespace

void diagonal_phase(std::span<cplx> amps, std::span<const double> diag,
                    double gamma) {
    const auto dim = static_cast<index_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (index_t z = 0; z < dim; ++z) {
        amps[static_cast<std::size_t>(z)] *=
            std::polar(1.0, -gamma * diag[static_cast<std::size_t>(z)]);
    }
}

void rx(std::span<cplx> amps, std::size_t n, std::size_t q, double beta) {
    const std::uint64_t bit = qubit_bit(n, q);
    const double c = std::cos(beta);
    const double s = std::sin(beta);
    cplx *const a = amps.data();
    const auto half = static_cast<index_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
    for (index_t k = 0; k < half; ++k) {
        const auto z0 = insert_zero(static_cast<std::uint64_t>(k), bit);
        const auto z1 = z0 | bit;
        const cplx a0 = a[z0];
        const cplx a1 = a[z1];
        // c a0 - i s a1 and -i s a0 + c a1
        a[z0] = {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
        a[z1] = {s * a0.imag() + c * a1.real(), c * a1.imag() - s * a0.real()};
    }
}

void rx_all(std::span<cplx> amps, std::size_t n, double beta) {
    for (std::size_t q = 0; q < n; ++q) {
        rx(amps, n, q, beta);
    }
}

void hadamard(std::span<cplx> amps, std::size_t n, std::size_t q) {
    const std::uint64_t bit = qubit_bit(n, q);
    const double r = 1.0 / std::sqrt(2.0);
    const auto half = static_cast<index_t>(amps.size() / 2);
#pragma omp parallel for schedule(static)
    for (index_t k = 0; k < half; ++k) {
        const auto z0 = insert_zero(static_cast<std::uint64_t>(k), bit);
        const auto z1 = z0 | bit;
        const cplx a0 = amps[z0];
        const cplx a1 = amps[z1];
        amps[z0] = r * (a0 + a1);
        amps[z1] = r * (a0 - a1);
    }
}

void phase_mask(std::span<cplx> amps, std::uint64_t mask, cplx factor) {
    const auto dim = static_cast<index_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (index_t z = 0; z < dim; ++z) {
        if ((static_cast<std::uint64_t>(z) & mask) == mask) {
            amps[static_cast<std::size_t>(z)] *= factor;
        }
    }
}

double norm_squared(std::span<const cplx> amps) {
    return blocked_sum<double>(amps.size(),
                               [&](std::size_t z) { return std::norm(amps[z]); });
}

double expectation_diagonal(std::span<const cplx> amps,
                            std::span<const double> diag) {
    return blocked_sum<double>(amps.size(), [&](std::size_t z) {
        return std::norm(amps[z]) * diag[z];
    });
}

double boltzmann_weight(std::span<const cplx> amps,
                        std::span<const double> diag, double eta,
                        double shift) {
    return blocked_sum<double>(amps.size(), [&](std::size_t z) {
        return std::norm(amps[z]) * std::exp(-eta * (diag[z] - shift));
    });
}

double pauli_expectation(std::span<const cplx> amps, PauliMasks p) {
    const std::uint64_t flip = p.x | p.y;
    const std::uint64_t sign_mask = p.y | p.z;
    const auto ny = static_cast<unsigned>(__builtin_popcountll(p.y));
    const cplx s = blocked_sum<cplx>(amps.size(), [&](std::size_t z) {
        const bool odd = (__builtin_popcountll(z & sign_mask) & 1) != 0;
        const cplx term = std::conj(amps[z ^ flip]) * amps[z];
        return odd ? -term : term;
    });
    static constexpr cplx kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return (kIPow[ny & 3U] * s).real();
}

} // namespace qaoa::kernels::parallel

namespace qaoa::kernels {

namespace {
bool use_parallel(std::size_t dim) { return dim >= kParallelMinDim; }
} // namespace

void diagonal_phase(std::span<cplx> amps, std::span<const double> diag,
                    double gamma) {
    use_parallel(amps.size()) ? parallel::diagonal_phase(amps, diag, gamma)
                              : serial::diagonal_phase(amps, diag, gamma);
}

void rx(std::span<cplx> amps, std::size_t n, std::size_t q, double beta) {
    use_parallel(amps.size()) ? parallel::rx(amps, n, q, beta)
                              : serial::rx(amps, n, q, beta);
}

void rx_all(std::span<cplx> amps, std::size_t n, double beta) {
    use_parallel(amps.size()) ? parallel::rx_all(amps, n, beta)
                              : serial::rx_all(amps, n, beta);
}

void hadamard(std::span<cplx> amps, std::size_t n, std::size_t q) {
    use_parallel(amps.size()) ? parallel::hadamard(amps, n, q)
                              : serial::hadamard(amps, n, q);
}

void phase_mask(std::span<cplx> amps, std::uint64_t mask, cplx factor) {
    use_parallel(amps.size()) ? parallel::phase_mask(amps, mask, factor)
                              : serial::phase_mask(amps, mask, factor);
}

double norm_squared(std::span<const cplx> amps) {
    return use_parallel(amps.size()) ? parallel::norm_squared(amps)
                                     : serial::norm_squared(amps);
}

double expectation_diagonal(std::span<const cplx> amps,
                            std::span<const double> diag) {
    return use_parallel(amps.size())
               ? parallel::expectation_diagonal(amps, diag)
               : serial::expectation_diagonal(amps, diag);
}

double boltzmann_weight(std::span<const cplx> amps,
                        std::span<const double> diag, double eta,
                        double shift) {
    return use_parallel(amps.size())
               ? parallel::boltzmann_weight(amps, diag, eta, shift)
               : serial::boltzmann_weight(amps, diag, eta, shift);
}

double pauli_expectation(std::span<const cplx> amps, PauliMasks p) {
    return use_parallel(amps.size()) ? parallel::pauli_expectation(amps, p)
                                     : serial::pauli_expectation(amps, p);
}

} // namespace qaoa::kernels
