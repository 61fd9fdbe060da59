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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "qaoa/problem.hpp"

namespace qaoa {

using cplx = std::complex<double>;

/// Dense n-qubit pure state. Qubit 0 is the most significant index bit.
///
/// Gate functions below take the state by value and return the result, so
/// callers that keep the input pay for a copy and callers that std::move it
/// get in-place updates.
class StateVector {
  public:
    StateVector() = default;
    /// Adopts `amplitudes`; the vector must have 2^n entries and unit norm
    /// (within 1e-10).
    StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes);

    static StateVector basis(std::size_t n_qubits, std::uint64_t index,
                             std::size_t max_qubits = kDefaultMaxQubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t dim() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const cplx> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<cplx> mutable_amplitudes() noexcept {
        return amps_;
    }
    [[nodiscard]] const cplx &operator[](std::size_t z) const {
        return amps_[z];
    }
    [[nodiscard]] double norm() const;
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    std::size_t n_ = 0;
    std::vector<cplx> amps_;
};

struct SampleCounts {
    std::uint64_t shots = 0;
    std::map<std::uint64_t, std::uint64_t> counts;

    /// Empirical mean of spectrum values over the recorded outcomes.
    [[nodiscard]] double mean(const CostSpectrum &s) const;

    bool operator==(const SampleCounts &) const = default;
};

StateVector uniform_superposition(std::size_t n,
                                  std::size_t max_qubits = kDefaultMaxQubits);

/// amplitude[z] *= exp(-i gamma P(z)).
StateVector apply_diagonal_phase(StateVector psi, const CostSpectrum &s,
                                 double gamma);

/// Mixer exp(-i beta X) on every qubit.
StateVector apply_rx_all(StateVector psi, double beta);

/// Standard rotation Rx(theta) = exp(-i theta X / 2) on one qubit.
StateVector apply_rx(StateVector psi, std::size_t qubit, double theta);

StateVector apply_hadamard(StateVector psi, std::size_t qubit);

/// R(gamma) = diag(1, exp(-i gamma)) on one qubit.
StateVector apply_single_qubit_phase(StateVector psi, std::size_t qubit,
                                     double gamma);

/// R(gamma) on `target`, conditioned on every qubit in `controls` being 1.
/// An empty control set degenerates to apply_single_qubit_phase.
StateVector apply_controlled_phase(StateVector psi,
                                   std::span<const std::size_t> controls,
                                   std::size_t target, double gamma);

double expectation_diagonal(const StateVector &psi, const CostSpectrum &s);

/// Draws `shots` basis indices by inverse CDF over |amplitude|^2 using a
/// seeded mt19937_64 (53-bit uniforms); identical seeds give identical counts.
SampleCounts measure_sample(const StateVector &psi, std::uint64_t shots,
                            std::uint64_t seed);

/// |<a|b>|.
double overlap_abs(const StateVector &a, const StateVector &b);

} // namespace qaoa
