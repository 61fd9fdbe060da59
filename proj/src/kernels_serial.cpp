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

#include <cmath>

#include "qaoa/kernels.hpp"

namespace qaoa::kernels::serial {

namespace {

cplx i_pow(unsigned k) {
    switch (k & 3U) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

} // namespace

void diagonal_phase(std::span<cplx> amps, std::span<const double> diag,
                    double gamma) {
    for (std::size_t z = 0; z < amps.size(); ++z) {
        amps[z] *= std::polar(1.0, -gamma * diag[z]);
    }
}

void rx(std::span<cplx> amps, std::size_t n, std::size_t q, double beta) {
    const std::uint64_t bit = qubit_bit(n, q);
    const double c = std::cos(beta);
    const cplx ms{0.0, -std::sin(beta)};
    for (std::size_t z = 0; z < amps.size(); ++z) {
        if ((z & bit) != 0U) {
            continue;
        }
        const cplx a0 = amps[z];
        const cplx a1 = amps[z | bit];
        amps[z] = c * a0 + ms * a1;
        amps[z | bit] = ms * a0 + c * a1;
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
    for (std::size_t z = 0; z < amps.size(); ++z) {
        if ((z & bit) != 0U) {
            continue;
        }
        const cplx a0 = amps[z];
        const cplx a1 = amps[z | bit];
        amps[z] = r * (a0 + a1);
        amps[z | bit] = r * (a0 - a1);
    }
}

void phase_mask(std::span<cplx> amps, std::uint64_t mask, cplx factor) {
    for (std::size_t z = 0; z < amps.size(); ++z) {
        if ((z & mask) == mask) {
            amps[z] *= factor;
        }
    }
}

double norm_squared(std::span<const cplx> amps) {
    double s = 0.0;
    for (const auto &a : amps) {
        s += std::norm(a);
    }
    return s;
}

double expectation_diagonal(std::span<const cplx> amps,
                            std::span<const double> diag) {
    double s = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        s += std::norm(amps[z]) * diag[z];
    }
    return s;
}

double boltzmann_weight(std::span<const cplx> amps,
                        std::span<const double> diag, double eta,
                        double shift) {
    double s = 0.0;
    for (std::size_t z = 0; z < amps.size(); ++z) {
        s += std::norm(amps[z]) * std::exp(-eta * (diag[z] - shift));
    }
    return s;
}

double pauli_expectation(std::span<const cplx> amps, PauliMasks p) {
    const std::uint64_t flip = p.x | p.y;
    const std::uint64_t sign_mask = p.y | p.z;
    const cplx global =
        i_pow(static_cast<unsigned>(__builtin_popcountll(p.y)));
    cplx s{0.0, 0.0};
    for (std::size_t z = 0; z < amps.size(); ++z) {
        const bool odd = (__builtin_popcountll(z & sign_mask) & 1) != 0;
        const cplx term = std::conj(amps[z ^ flip]) * amps[z];
        s += odd ? -term : term;
    }
    return (global * s).real();
}

} // namespace qaoa::kernels::serial
