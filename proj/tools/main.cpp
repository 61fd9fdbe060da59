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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qaoa/error.hpp"

namespace {

using namespace qaoa::cli;

void add_problem_options(CLI::App &cmd, RunConfig &config) {
    auto *problem = cmd.add_option("--problem", config.problem_path,
                                   "MaxCut edge-list file");
    auto *qubo = cmd.add_option("--qubo", config.qubo_path, "QUBO file");
    problem->excludes(qubo);
    cmd.add_option("--sense", config.sense, "Optimisation sense (max|min)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, qaoa::Sense>{{"max", qaoa::Sense::maximize},
                                               {"min", qaoa::Sense::minimize}}));
}

void add_angle_options(CLI::App &cmd, RunConfig &config) {
    cmd.add_option("--p", config.p, "Circuit depth")->check(CLI::PositiveNumber);
    cmd.add_option("--objective", config.objective, "f|gibbs")
        ->transform(CLI::CheckedTransformer(std::map<std::string, ObjectiveKind>{
            {"f", ObjectiveKind::f}, {"gibbs", ObjectiveKind::gibbs}}));
    cmd.add_option("--eta", config.eta, "Gibbs inverse temperature")
        ->check(CLI::PositiveNumber);
    cmd.add_option("--optimizer", config.optimizer, "grid|nm|multistart")
        ->transform(CLI::CheckedTransformer(std::map<std::string, OptimizerKind>{
            {"grid", OptimizerKind::grid},
            {"nm", OptimizerKind::nm},
            {"multistart", OptimizerKind::multistart}}));
    cmd.add_option("--resolution", config.resolution, "Grid points per angle");
    cmd.add_option("--starts", config.starts, "Random multi-start count");
    cmd.add_option("--seed", config.seed, "RNG seed");
    auto *g = cmd.add_option("--gamma", config.gammas,
                             "Explicit gamma per layer (skips optimisation)")
                  ->delimiter(',');
    auto *b = cmd.add_option("--beta", config.betas,
                             "Explicit beta per layer (skips optimisation)")
                  ->delimiter(',');
    g->needs(b);
    b->needs(g);
}

void add_format_option(CLI::App &cmd, RunConfig &config) {
    cmd.add_option("--format", config.format, "json|csv|text")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{
            {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}}));
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"QAOA simulation, analysis and circuit export"};
    app.require_subcommand(1);
    RunConfig config;

    auto *solve = app.add_subcommand("solve", "Optimise angles and report");
    add_problem_options(*solve, config);
    add_angle_options(*solve, config);
    add_format_option(*solve, config);
    solve->add_option("--shots", config.shots, "Measurement shots (0 = exact only)");

    auto *landscape =
        app.add_subcommand("landscape", "Tabulate F over the p = 1 angle grid");
    add_problem_options(*landscape, config);
    landscape->add_option("--p", config.p, "Circuit depth");
    landscape->add_option("--resolution", config.resolution,
                          "Grid points per angle");
    landscape->add_option("--method", config.method,
                          "formula|simulate|decompose|trace")
        ->transform(CLI::CheckedTransformer(std::map<std::string, Method>{
            {"formula", Method::formula},
            {"simulate", Method::simulate},
            {"decompose", Method::decompose},
            {"trace", Method::trace}}));
    landscape->add_option("--out", config.out, "Output CSV path");

    auto *qasm = app.add_subcommand("export-qasm", "Write the circuit as OpenQASM 2.0");
    add_problem_options(*qasm, config);
    add_angle_options(*qasm, config);
    qasm->add_option("--out", config.out, "Output path");

    auto *brute = app.add_subcommand("brute-force", "Exhaustive optimum");
    add_problem_options(*brute, config);
    add_format_option(*brute, config);

    auto *sample = app.add_subcommand("sample", "Sample the optimised state");
    add_problem_options(*sample, config);
    add_angle_options(*sample, config);
    add_format_option(*sample, config);
    sample->add_option("--shots", config.shots, "Measurement shots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const auto problem = load_problem(config);
        if (solve->parsed()) {
            cmd_solve(problem, config, std::cout);
        } else if (landscape->parsed()) {
            cmd_landscape(problem, config, std::cout);
        } else if (qasm->parsed()) {
            cmd_export_qasm(problem, config, std::cout);
        } else if (brute->parsed()) {
            cmd_brute_force(problem, config, std::cout);
        } else {
            cmd_sample(problem, config, std::cout);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    return 0;
}
