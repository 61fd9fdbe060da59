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

#include <cstdint>
#include <optional>

#include "qaoa/circuit.hpp"
#include "qaoa/problem.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

/// Exact objective plus, when sampling was requested, the shot statistics.
/// The three sampled fields are either all set or all empty.
struct ObjectiveReport {
    double exact_value = 0.0;
    std::optional<double> sampled_mean;
    std::optional<std::uint64_t> shots;
    std::optional<SampleCounts> counts;
};

/// F(gamma, beta) = <gamma, beta| C |gamma, beta>.
double expectation_F(const CostSpectrum &s, const AngleSchedule &angles);

/// -log sum_z |a_z|^2 exp(-eta P(z)), shifted by min P for stability.
/// Larger is better for maximisation; negate the spectrum to minimise.
double gibbs_value(const StateVector &psi, const CostSpectrum &s, double eta);

double gibbs_objective(const CostSpectrum &s, const AngleSchedule &angles,
                       double eta);

ObjectiveReport sampled_objective(const CostSpectrum &s,
                                  const AngleSchedule &angles,
                                  std::uint64_t shots, std::uint64_t seed);

/// Depth-1 MaxCut expectation through the trace decomposition
///
///   W/2 - 1/2 sum_<ij> w_ij [ cos2b sin2b (T(Z_i Y_j) + T(Y_i Z_j))
///                            + sin^2 2b T(Y_i Y_j) ]
///
/// where T(O) = <s| U_C^dag O U_C |s> is evaluated as <phi|O|phi> with
/// phi = exp(-i gamma C)|s>. The cos^2 2b T(Z_i Z_j) term is absent because
/// it vanishes on the uniform initial state. Never builds density matrices.
double p1_trace_expectation_maxcut(const Graph &g, double gamma, double beta);

} // namespace qaoa
