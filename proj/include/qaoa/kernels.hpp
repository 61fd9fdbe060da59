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

#pragma once

// Amplitude-level kernels behind StateVector. Two implementations are kept:
//
//   serial::   straightforward loops, the reference the tests compare against
//   parallel:: OpenMP loops over amplitude pairs / blocks
//
// The unqualified functions dispatch to parallel:: once the register holds at
// least kParallelMinDim amplitudes. Reductions in parallel:: sum fixed-size
// blocks and then combine the block partials in order, so results do not
// depend on the thread count.
//
// Index convention: qubit q of an n-qubit register is bit (n - 1 - q).

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

namespace qaoa::kernels {

using cplx = std::complex<double>;

inline constexpr std::size_t kParallelMinDim = std::size_t{1} << 14;
inline constexpr std::size_t kReductionBlock = std::size_t{1} << 12;

/// Masks describing a Pauli string: X on x_mask, Y on y_mask, Z on z_mask
/// (disjoint).
struct PauliMasks {
    std::uint64_t x = 0;
    std::uint64_t y = 0;
    std::uint64_t z = 0;
};

#define QAOA_KERNEL_DECLS                                                      \
    void diagonal_phase(std::span<cplx> amps, std::span<const double> diag,    \
                        double gamma);                                         \
    /* e^{-i beta X} on qubit q */                                             \
    void rx(std::span<cplx> amps, std::size_t n, std::size_t q, double beta);  \
    void rx_all(std::span<cplx> amps, std::size_t n, double beta);             \
    void hadamard(std::span<cplx> amps, std::size_t n, std::size_t q);         \
    /* multiplies amplitudes whose index has every bit of mask set */          \
    void phase_mask(std::span<cplx> amps, std::uint64_t mask, cplx factor);    \
    double norm_squared(std::span<const cplx> amps);                           \
    double expectation_diagonal(std::span<const cplx> amps,                    \
                                std::span<const double> diag);                 \
    /* sum_z |a_z|^2 exp(-eta (diag_z - shift)) */                             \
    double boltzmann_weight(std::span<const cplx> amps,                        \
                            std::span<const double> diag, double eta,          \
                            double shift);                                     \
    /* Re <psi|P|psi> for the Pauli string P */                                \
    double pauli_expectation(std::span<const cplx> amps, PauliMasks p);

namespace serial {
QAOA_KERNEL_DECLS
} // namespace serial

namespace parallel {
QAOA_KERNEL_DECLS
} // namespace parallel

QAOA_KERNEL_DECLS

#undef QAOA_KERNEL_DECLS

/// Bit of qubit q in an n-qubit index.
constexpr std::uint64_t qubit_bit(std::size_t n, std::size_t q) {
    return std::uint64_t{1} << (n - 1 - q);
}

} // namespace qaoa::kernels
