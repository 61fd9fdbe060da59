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
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qaoa/circuit.hpp"
#include "qaoa/optimizer.hpp"
#include "qaoa/problem.hpp"

namespace qaoa::cli {

enum class Format { json, csv, text };
enum class ObjectiveKind { f, gibbs };
enum class OptimizerKind { grid, nm, multistart };
enum class Method { formula, simulate, decompose, trace };

struct RunConfig {
    std::string problem_path; // edge list
    std::string qubo_path;
    std::size_t p = 1;
    ObjectiveKind objective = ObjectiveKind::f;
    double eta = 1.0;
    OptimizerKind optimizer = OptimizerKind::multistart;
    std::size_t resolution = 41;
    std::size_t starts = 20;
    std::uint64_t shots = 2048; // 0 = exact only
    std::uint64_t seed = 0;
    Method method = Method::simulate;
    std::string out; // empty = stdout
    Format format = Format::json;
    std::optional<Sense> sense; // default: max for MaxCut, min for QUBO
    std::vector<double> gammas;  // explicit angles skip the optimizer
    std::vector<double> betas;
};

/// A problem file resolved into the forms the commands need.
struct LoadedProblem {
    std::string kind; // "maxcut" or "qubo"
    std::optional<Graph> graph;
    std::optional<QuboProblem> qubo;
    IsingProblem ising;
    CostSpectrum spectrum;
    Sense sense = Sense::maximize;

    static LoadedProblem from_graph(const Graph &g,
                                    std::optional<Sense> sense = {});
    static LoadedProblem from_qubo(const QuboProblem &q,
                                   std::optional<Sense> sense = {});
};

LoadedProblem load_problem(const RunConfig &config);

/// Angles from --gamma/--beta when given, otherwise from the configured
/// optimizer.
OptimizationResult choose_angles(const LoadedProblem &problem,
                                 const RunConfig &config);

nlohmann::json solve_report(const LoadedProblem &problem,
                            const RunConfig &config);
nlohmann::json brute_force_report(const LoadedProblem &problem);
nlohmann::json sample_report(const LoadedProblem &problem,
                             const RunConfig &config);

/// gamma,beta,F rows over a resolution x resolution grid (p = 1).
std::string landscape_csv(const LoadedProblem &problem, const RunConfig &config);

void cmd_solve(const LoadedProblem &problem, const RunConfig &config,
               std::ostream &out);
void cmd_landscape(const LoadedProblem &problem, const RunConfig &config,
                   std::ostream &out);
/// Writes to config.out when set, otherwise to `out`.
void cmd_export_qasm(const LoadedProblem &problem, const RunConfig &config,
                     std::ostream &out);
void cmd_brute_force(const LoadedProblem &problem, const RunConfig &config,
                     std::ostream &out);
void cmd_sample(const LoadedProblem &problem, const RunConfig &config,
                std::ostream &out);

/// 0 success, 2 parse error, 3 resource limit, 4 numeric error, 1 otherwise.
int exit_code_for(const std::exception &e);

} // namespace qaoa::cli
