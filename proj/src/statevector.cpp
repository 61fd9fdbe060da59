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

#include "qaoa/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>

#include "qaoa/error.hpp"
#include "qaoa/kernels.hpp"

namespace qaoa {

namespace {

constexpr double kNormTolerance = 1e-10;

void check_limit(std::size_t n, std::size_t max_qubits) {
    if (n == 0) {
        throw InvalidArgument("register needs at least one qubit");
    }
    if (n > max_qubits) {
        throw ResourceLimit(std::to_string(n) + " qubits requested, limit is " +
                            std::to_string(max_qubits));
    }
}

void check_qubit(const StateVector &psi, std::size_t q) {
    if (q >= psi.n_qubits()) {
        throw IndexError("qubit " + std::to_string(q) + " out of range for " +
                         std::to_string(psi.n_qubits()) + "-qubit register");
    }
}

void check_shape(const StateVector &psi, const CostSpectrum &s) {
    if (psi.n_qubits() != s.n_qubits()) {
        throw ShapeError("state has " + std::to_string(psi.n_qubits()) +
                         " qubits, spectrum has " +
                         std::to_string(s.n_qubits()));
    }
}

#ifdef QAOA_NORM_CHECKS
void debug_norm_check(const StateVector &psi) {
    if (std::abs(psi.norm() - 1.0) > kNormTolerance) {
        throw NumericError("state norm drifted to " + std::to_string(psi.norm()),
                           {});
    }
}
#else
void debug_norm_check(const StateVector &) {}
#endif

} // namespace

StateVector::StateVector(std::size_t n_qubits, std::vector<cplx> amplitudes)
    : n_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_ == 0 || n_ >= 64 || amps_.size() != (std::size_t{1} << n_)) {
        throw ShapeError("amplitude vector length does not match 2^" +
                         std::to_string(n_));
    }
    if (std::abs(norm() - 1.0) > kNormTolerance) {
        throw InvalidArgument("amplitudes are not normalised");
    }
}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index,
                               std::size_t max_qubits) {
    check_limit(n_qubits, max_qubits);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw IndexError("basis index out of range");
    }
    amps[index] = 1.0;
    return {n_qubits, std::move(amps)};
}

double StateVector::norm() const {
    return std::sqrt(kernels::norm_squared(amps_));
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const cplx &a) { return std::norm(a); });
    return p;
}

double SampleCounts::mean(const CostSpectrum &s) const {
    if (shots == 0) {
        return 0.0;
    }
    double total = 0.0;
    for (const auto &[z, c] : counts) {
        total += static_cast<double>(c) * s[z];
    }
    return total / static_cast<double>(shots);
}

StateVector uniform_superposition(std::size_t n, std::size_t max_qubits) {
    check_limit(n, max_qubits);
    const std::size_t dim = std::size_t{1} << n;
    const double a = std::pow(2.0, -0.5 * static_cast<double>(n));
    return {n, std::vector<cplx>(dim, cplx{a, 0.0})};
}

StateVector apply_diagonal_phase(StateVector psi, const CostSpectrum &s,
                                 double gamma) {
    check_shape(psi, s);
    kernels::diagonal_phase(psi.mutable_amplitudes(), s.values(), gamma);
    debug_norm_check(psi);
    return psi;
}

StateVector apply_rx_all(StateVector psi, double beta) {
    kernels::rx_all(psi.mutable_amplitudes(), psi.n_qubits(), beta);
    debug_norm_check(psi);
    return psi;
}

StateVector apply_rx(StateVector psi, std::size_t qubit, double theta) {
    check_qubit(psi, qubit);
    kernels::rx(psi.mutable_amplitudes(), psi.n_qubits(), qubit, 0.5 * theta);
    debug_norm_check(psi);
    return psi;
}

StateVector apply_hadamard(StateVector psi, std::size_t qubit) {
    check_qubit(psi, qubit);
    kernels::hadamard(psi.mutable_amplitudes(), psi.n_qubits(), qubit);
    debug_norm_check(psi);
    return psi;
}

StateVector apply_single_qubit_phase(StateVector psi, std::size_t qubit,
                                     double gamma) {
    check_qubit(psi, qubit);
    kernels::phase_mask(psi.mutable_amplitudes(),
                        kernels::qubit_bit(psi.n_qubits(), qubit),
                        std::polar(1.0, -gamma));
    debug_norm_check(psi);
    return psi;
}

StateVector apply_controlled_phase(StateVector psi,
                                   std::span<const std::size_t> controls,
                                   std::size_t target, double gamma) {
    check_qubit(psi, target);
    std::set<std::size_t> seen;
    std::uint64_t mask = kernels::qubit_bit(psi.n_qubits(), target);
    for (auto c : controls) {
        check_qubit(psi, c);
        if (c == target) {
            throw IndexError("control qubit " + std::to_string(c) +
                             " coincides with the target");
        }
        if (!seen.insert(c).second) {
            throw IndexError("duplicate control qubit " + std::to_string(c));
        }
        mask |= kernels::qubit_bit(psi.n_qubits(), c);
    }
    kernels::phase_mask(psi.mutable_amplitudes(), mask, std::polar(1.0, -gamma));
    debug_norm_check(psi);
    return psi;
}

double expectation_diagonal(const StateVector &psi, const CostSpectrum &s) {
    check_shape(psi, s);
    // A constant spectrum has the constant as its exact mean for unit states.
    const auto [lo, hi] = std::minmax_element(s.values().begin(), s.values().end());
    if (*lo == *hi) {
        return *lo;
    }
    return kernels::expectation_diagonal(psi.amplitudes(), s.values());
}

SampleCounts measure_sample(const StateVector &psi, std::uint64_t shots,
                            std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("shots must be positive");
    }
    std::vector<double> cdf(psi.dim());
    double acc = 0.0;
    for (std::size_t z = 0; z < psi.dim(); ++z) {
        acc += std::norm(psi[z]);
        cdf[z] = acc;
    }
    if (std::abs(acc - 1.0) > kNormTolerance) {
        throw NumericError("state norm drifted to " + std::to_string(acc) +
                               " before measurement",
                           {});
    }
    // Index of the last outcome with nonzero probability, the landing spot
    // for uniforms that fall past cdf.back() through rounding.
    std::size_t last = psi.dim() - 1;
    while (last > 0 && cdf[last] == cdf[last - 1]) {
        --last;
    }

    std::mt19937_64 rng(seed);
    SampleCounts out;
    out.shots = shots;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = static_cast<double>(rng() >> 11U) * 0x1.0p-53 * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto z = static_cast<std::size_t>(it - cdf.begin());
        ++out.counts[std::min(z, last)];
    }
    return out;
}

double overlap_abs(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw ShapeError("overlap of states with different qubit counts");
    }
    cplx s{0.0, 0.0};
    for (std::size_t z = 0; z < a.dim(); ++z) {
        s += std::conj(a[z]) * b[z];
    }
    return std::abs(s);
}

} // namespace qaoa
