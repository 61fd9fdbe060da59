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

#include "commands.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "qaoa/analytic.hpp"
#include "qaoa/error.hpp"
#include "qaoa/expectation.hpp"
#include "qaoa/instances.hpp"
#include "qaoa/io.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;
constexpr std::size_t kMostProbable = 4;

std::string sense_name(Sense s) { return s == Sense::maximize ? "max" : "min"; }

std::string objective_name(ObjectiveKind k) {
    return k == ObjectiveKind::f ? "f" : "gibbs";
}

std::string optimizer_name(OptimizerKind k) {
    switch (k) {
    case OptimizerKind::grid:
        return "grid";
    case OptimizerKind::nm:
        return "nm";
    case OptimizerKind::multistart:
        return "multistart";
    }
    return "";
}

bool better(double a, double b, Sense s) {
    return s == Sense::maximize ? a > b : a < b;
}

std::string bits(const LoadedProblem &problem, std::uint64_t z) {
    return Assignment::from_index(problem.spectrum.n_qubits(), z).to_string();
}

std::string fmt(double v) {
    if (v == 0.0) {
        v = 0.0;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Objective make_objective(const LoadedProblem &problem, const RunConfig &config,
                         Sense &optimizer_sense) {
    if (config.objective == ObjectiveKind::f) {
        optimizer_sense = problem.sense;
        return [spectrum = problem.spectrum](const AngleSchedule &a) {
            return expectation_F(spectrum, a);
        };
    }
    if (!(config.eta > 0.0)) {
        throw InvalidArgument("--eta must be positive");
    }
    optimizer_sense = Sense::maximize;
    auto spectrum = problem.sense == Sense::maximize ? problem.spectrum
                                                     : problem.spectrum.negated();
    return [spectrum = std::move(spectrum), eta = config.eta](
               const AngleSchedule &a) {
        return gibbs_objective(spectrum, a, eta);
    };
}

json angles_json(const AngleSchedule &a) {
    return {{"gamma", a.gammas()}, {"beta", a.betas()}};
}

json problem_json(const LoadedProblem &problem) {
    json j{{"kind", problem.kind}, {"n", problem.spectrum.n_qubits()}};
    if (problem.graph) {
        j["edges"] = problem.graph->n_edges();
    } else {
        j["terms"] = problem.qubo->coefficients().size();
    }
    return j;
}

json optimum_json(const LoadedProblem &problem, const OptimumResult &opt) {
    json assignments = json::array();
    for (auto z : opt.argopt) {
        assignments.push_back(bits(problem, z));
    }
    return {{"optimum", opt.value}, {"assignments", assignments}};
}

json counts_json(const LoadedProblem &problem, const SampleCounts &counts) {
    json j = json::object();
    for (const auto &[z, c] : counts.counts) {
        j[bits(problem, z)] = c;
    }
    return j;
}

/// Best outcome by cost among the sampled indices; ties go to the lower index.
std::uint64_t best_sampled(const LoadedProblem &problem,
                           const SampleCounts &counts) {
    auto best = counts.counts.begin()->first;
    for (const auto &[z, c] : counts.counts) {
        if (better(problem.spectrum[z], problem.spectrum[best], problem.sense)) {
            best = z;
        }
    }
    return best;
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw IoError("cannot write '" + path + "'");
    }
    return f;
}

void emit(const json &report, Format format, std::ostream &out) {
    if (format == Format::json) {
        out << report.dump(2) << "\n";
        return;
    }
    // Flat key/value rendering for text and csv.
    const bool csv = format == Format::csv;
    if (csv) {
        out << "key,value\n";
    }
    std::function<void(const std::string &, const json &)> walk =
        [&](const std::string &prefix, const json &j) {
            if (j.is_object()) {
                for (const auto &[k, v] : j.items()) {
                    walk(prefix.empty() ? k : prefix + "." + k, v);
                }
            } else if (j.is_array() &&
                       std::any_of(j.begin(), j.end(),
                                   [](const json &e) { return e.is_object(); })) {
                for (std::size_t i = 0; i < j.size(); ++i) {
                    walk(prefix + "." + std::to_string(i), j[i]);
                }
            } else {
                const auto value = j.is_string() ? j.get<std::string>() : j.dump();
                out << prefix << (csv ? "," : ": ")
                    << (csv && value.find(',') != std::string::npos
                            ? "\"" + value + "\""
                            : value)
                    << "\n";
            }
        };
    walk("", report);
}

} // namespace

LoadedProblem LoadedProblem::from_graph(const Graph &g,
                                        std::optional<Sense> sense) {
    LoadedProblem p;
    p.kind = "maxcut";
    p.graph = g;
    p.ising = maxcut_to_ising(g);
    p.spectrum = build_cost_spectrum(p.ising);
    p.sense = sense.value_or(Sense::maximize);
    return p;
}

LoadedProblem LoadedProblem::from_qubo(const QuboProblem &q,
                                       std::optional<Sense> sense) {
    LoadedProblem p;
    p.kind = "qubo";
    p.qubo = q;
    p.ising = qubo_to_ising(q);
    p.spectrum = build_cost_spectrum(p.ising);
    p.sense = sense.value_or(Sense::minimize);
    return p;
}

LoadedProblem load_problem(const RunConfig &config) {
    const bool has_graph = !config.problem_path.empty();
    const bool has_qubo = !config.qubo_path.empty();
    if (has_graph == has_qubo) {
        throw InvalidArgument("give exactly one of --problem or --qubo");
    }
    if (has_graph) {
        return LoadedProblem::from_graph(io::load_edge_list(config.problem_path),
                                         config.sense);
    }
    return LoadedProblem::from_qubo(io::load_qubo(config.qubo_path),
                                    config.sense);
}

OptimizationResult choose_angles(const LoadedProblem &problem,
                                 const RunConfig &config) {
    Sense sense = problem.sense;
    const auto objective = make_objective(problem, config, sense);
    if (!config.gammas.empty() || !config.betas.empty()) {
        AngleSchedule angles(config.gammas, config.betas);
        OptimizationResult r;
        r.best_value = objective(angles);
        r.best_angles = std::move(angles);
        r.evaluations = 1;
        return r;
    }
    if (config.p == 0) {
        throw InvalidArgument("--p must be at least 1");
    }
    const AngleBounds bounds;
    switch (config.optimizer) {
    case OptimizerKind::grid:
        return grid_search(objective, config.p, bounds, config.resolution, sense);
    case OptimizerKind::nm: {
        // Start a quarter of the way into each interval.
        std::vector<double> g(config.p, bounds.gamma.lo +
                                            0.25 * (bounds.gamma.hi -
                                                    bounds.gamma.lo));
        std::vector<double> b(config.p, bounds.beta.lo +
                                            0.25 * (bounds.beta.hi -
                                                    bounds.beta.lo));
        return nelder_mead(objective, AngleSchedule(g, b), bounds, sense);
    }
    case OptimizerKind::multistart:
        return multi_start(objective, config.p, bounds, config.starts,
                           config.seed, sense);
    }
    throw InvalidArgument("unknown optimizer");
}

json solve_report(const LoadedProblem &problem, const RunConfig &config) {
    const auto opt = choose_angles(problem, config);
    const auto psi = build_qaoa_state(problem.spectrum, opt.best_angles);
    const double exact_f = expectation_diagonal(psi, problem.spectrum);
    const auto brute = brute_force_optimum(problem.spectrum, problem.sense);

    json report{{"schema", kSchemaVersion},
                {"command", "solve"},
                {"problem", problem_json(problem)},
                {"sense", sense_name(problem.sense)},
                {"p", opt.best_angles.p()},
                {"objective", objective_name(config.objective)},
                {"optimizer", optimizer_name(config.optimizer)},
                {"seed", config.seed},
                {"angles", angles_json(opt.best_angles)},
                {"objective_value", opt.best_value},
                {"evaluations", opt.evaluations},
                {"exact_F", exact_f},
                {"brute_force", optimum_json(problem, brute)}};
    if (config.objective == ObjectiveKind::gibbs) {
        report["eta"] = config.eta;
    }

    const auto probs = psi.probabilities();
    std::vector<std::size_t> idx(probs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto top = std::min(kMostProbable, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<long>(top),
                      idx.end(), [&](auto a, auto b) {
                          return probs[a] > probs[b] ||
                                 (probs[a] == probs[b] && a < b);
                      });
    json likely = json::array();
    for (std::size_t k = 0; k < top; ++k) {
        likely.push_back({{"assignment", bits(problem, idx[k])},
                          {"probability", probs[idx[k]]},
                          {"cost", problem.spectrum[idx[k]]}});
    }
    report["most_probable"] = likely;

    if (config.shots > 0) {
        const auto counts = measure_sample(psi, config.shots, config.seed);
        const auto best = best_sampled(problem, counts);
        const double best_cost = problem.spectrum[best];
        report["sampling"] = {
            {"shots", config.shots},
            {"sampled_mean", counts.mean(problem.spectrum)},
            {"best_sampled",
             {{"assignment", bits(problem, best)}, {"cost", best_cost}}},
            {"counts", counts_json(problem, counts)}};
        if (brute.value > 0.0) {
            report["approximation_ratio"] = best_cost / brute.value;
        } else if (brute.value == 0.0 && best_cost == 0.0) {
            report["approximation_ratio"] = 1.0;
        }
    }
    return report;
}

json brute_force_report(const LoadedProblem &problem) {
    const auto brute = brute_force_optimum(problem.spectrum, problem.sense);
    json report{{"schema", kSchemaVersion},
                {"command", "brute-force"},
                {"problem", problem_json(problem)},
                {"sense", sense_name(problem.sense)}};
    report.update(optimum_json(problem, brute));
    return report;
}

json sample_report(const LoadedProblem &problem, const RunConfig &config) {
    if (config.shots == 0) {
        throw InvalidArgument("sample needs --shots >= 1");
    }
    const auto opt = choose_angles(problem, config);
    const auto r = sampled_objective(problem.spectrum, opt.best_angles,
                                     config.shots, config.seed);
    return {{"schema", kSchemaVersion},
            {"command", "sample"},
            {"problem", problem_json(problem)},
            {"angles", angles_json(opt.best_angles)},
            {"seed", config.seed},
            {"shots", *r.shots},
            {"exact_F", r.exact_value},
            {"sampled_mean", *r.sampled_mean},
            {"counts", counts_json(problem, *r.counts)}};
}

std::string landscape_csv(const LoadedProblem &problem, const RunConfig &config) {
    if (config.p != 1) {
        throw UnsupportedMethod("landscape sweeps are defined for p = 1 only");
    }
    if (config.resolution < 2) {
        throw InvalidArgument("--resolution must be at least 2");
    }
    std::function<double(double, double)> eval;
    const auto &spectrum = problem.spectrum;
    switch (config.method) {
    case Method::simulate:
        eval = [&](double g, double b) {
            return expectation_F(spectrum, AngleSchedule({g}, {b}));
        };
        break;
    case Method::decompose:
        if (!problem.graph) {
            throw UnsupportedMethod("decompose applies to MaxCut instances only");
        }
        eval = [&](double g, double b) {
            return decomposed_expectation(*problem.graph, AngleSchedule({g}, {b}));
        };
        break;
    case Method::trace:
        if (!problem.graph) {
            throw UnsupportedMethod("trace applies to MaxCut instances only");
        }
        eval = [&](double g, double b) {
            return p1_trace_expectation_maxcut(*problem.graph, g, b);
        };
        break;
    case Method::formula: {
        if (problem.graph && isomorphic(*problem.graph, instances::butterfly())) {
            eval = butterfly_F;
        } else if (problem.graph &&
                   isomorphic(*problem.graph, instances::moser_spindle())) {
            eval = moser_spindle_F;
        } else {
            // Rejects instances with triangles up front.
            try {
                triangle_free_ising_expectation(problem.ising, 0.0, 0.0);
            } catch (const PreconditionError &e) {
                throw UnsupportedMethod(
                    std::string("no closed form for this instance: ") + e.what());
            }
            eval = [&](double g, double b) {
                return triangle_free_ising_expectation(problem.ising, g, b);
            };
        }
        break;
    }
    }

    const AngleBounds bounds;
    const auto res = config.resolution;
    auto coord = [res](const Interval &iv, std::size_t k) {
        return iv.lo + (iv.hi - iv.lo) * static_cast<double>(k) /
                           static_cast<double>(res - 1);
    };
    std::ostringstream out;
    out << "gamma,beta,F\n";
    for (std::size_t i = 0; i < res; ++i) {
        const double g = coord(bounds.gamma, i);
        for (std::size_t j = 0; j < res; ++j) {
            const double b = coord(bounds.beta, j);
            out << fmt(g) << "," << fmt(b) << "," << fmt(eval(g, b)) << "\n";
        }
    }
    return out.str();
}

void cmd_solve(const LoadedProblem &problem, const RunConfig &config,
               std::ostream &out) {
    emit(solve_report(problem, config), config.format, out);
}

void cmd_landscape(const LoadedProblem &problem, const RunConfig &config,
                   std::ostream &out) {
    const auto csv = landscape_csv(problem, config);
    if (config.out.empty()) {
        out << csv;
    } else {
        open_output(config.out) << csv;
    }
}

void cmd_export_qasm(const LoadedProblem &problem, const RunConfig &config,
                     std::ostream &out) {
    const auto opt = choose_angles(problem, config);
    const auto qasm =
        export_openqasm(compile_qaoa_circuit(problem.ising, opt.best_angles));
    if (config.out.empty()) {
        out << qasm;
    } else {
        open_output(config.out) << qasm;
    }
}

void cmd_brute_force(const LoadedProblem &problem, const RunConfig &config,
                     std::ostream &out) {
    emit(brute_force_report(problem), config.format, out);
}

void cmd_sample(const LoadedProblem &problem, const RunConfig &config,
                std::ostream &out) {
    const auto report = sample_report(problem, config);
    if (config.format == Format::csv) {
        out << "assignment,count\n";
        for (const auto &[k, v] : report["counts"].items()) {
            out << k << "," << v.get<std::uint64_t>() << "\n";
        }
        return;
    }
    emit(report, config.format, out);
}

int exit_code_for(const std::exception &e) {
    if (dynamic_cast<const ParseError *>(&e) != nullptr) {
        return 2;
    }
    if (dynamic_cast<const ResourceLimit *>(&e) != nullptr) {
        return 3;
    }
    if (dynamic_cast<const NumericError *>(&e) != nullptr) {
        return 4;
    }
    return 1;
}

} // namespace qaoa::cli
