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

#include "qaoa/expectation.hpp"

#include <cmath>

#include "qaoa/error.hpp"
#include "qaoa/kernels.hpp"

namespace qaoa {

double expectation_F(const CostSpectrum &s, const AngleSchedule &angles) {
    return expectation_diagonal(build_qaoa_state(s, angles), s);
}

double gibbs_value(const StateVector &psi, const CostSpectrum &s, double eta) {
    if (!(eta > 0.0) || !std::isfinite(eta)) {
        throw InvalidArgument("Gibbs temperature eta must be positive and finite");
    }
    if (psi.n_qubits() != s.n_qubits()) {
        throw ShapeError("state and spectrum qubit counts differ");
    }
    const double shift = s.min();
    const double w =
        kernels::boltzmann_weight(psi.amplitudes(), s.values(), eta, shift);
    return eta * shift - std::log(w);
}

double gibbs_objective(const CostSpectrum &s, const AngleSchedule &angles,
                       double eta) {
    if (!(eta > 0.0)) {
        throw InvalidArgument("Gibbs temperature eta must be positive");
    }
    return gibbs_value(build_qaoa_state(s, angles), s, eta);
}

ObjectiveReport sampled_objective(const CostSpectrum &s,
                                  const AngleSchedule &angles,
                                  std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw InvalidArgument("sampled objective needs at least one shot");
    }
    const auto psi = build_qaoa_state(s, angles);
    ObjectiveReport r;
    r.exact_value = expectation_diagonal(psi, s);
    r.counts = measure_sample(psi, shots, seed);
    r.shots = shots;
    r.sampled_mean = r.counts->mean(s);
    return r;
}

double p1_trace_expectation_maxcut(const Graph &g, double gamma, double beta) {
    const auto n = g.n_vertices();
    const auto spectrum = build_cost_spectrum(maxcut_to_ising(g));
    const auto phi =
        apply_diagonal_phase(uniform_superposition(n), spectrum, gamma);

    const double c2 = std::cos(2.0 * beta);
    const double s2 = std::sin(2.0 * beta);
    double traces = 0.0;
    for (const auto &e : g.edges()) {
        const auto bi = kernels::qubit_bit(n, e.i);
        const auto bj = kernels::qubit_bit(n, e.j);
        const auto amps = phi.amplitudes();
        const double zy = kernels::pauli_expectation(amps, {0, bj, bi});
        const double yz = kernels::pauli_expectation(amps, {0, bi, bj});
        const double yy = kernels::pauli_expectation(amps, {0, bi | bj, 0});
        traces += e.weight * (c2 * s2 * (zy + yz) + s2 * s2 * yy);
    }
    return 0.5 * g.total_weight() - 0.5 * traces;
}

} // namespace qaoa
