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

#include <cstddef>
#include <string>
#include <vector>

#include "qaoa/problem.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

/// The 2p variational angles. Both sequences have the same length p >= 1.
class AngleSchedule {
  public:
    AngleSchedule() = default;
    AngleSchedule(std::vector<double> gammas, std::vector<double> betas);

    /// Inverse of flatten(): first p entries are gammas, last p are betas.
    static AngleSchedule from_flat(const std::vector<double> &flat);

    [[nodiscard]] std::size_t p() const noexcept { return gammas_.size(); }
    [[nodiscard]] const std::vector<double> &gammas() const noexcept {
        return gammas_;
    }
    [[nodiscard]] const std::vector<double> &betas() const noexcept {
        return betas_;
    }
    [[nodiscard]] std::vector<double> flatten() const;

    bool operator==(const AngleSchedule &) const = default;

  private:
    std::vector<double> gammas_;
    std::vector<double> betas_;
};

enum class GateKind { hadamard, rx, phase, controlled_phase };

/// One gate of the compiled circuit.
///
///   hadamard          qubits = {q}
///   rx                qubits = {q},  exp(-i angle X / 2)
///   phase             qubits = {q},  R(angle) = diag(1, exp(-i angle))
///   controlled_phase  qubits = {controls..., target}, R(angle) on target
struct GateOp {
    GateKind kind = GateKind::hadamard;
    std::vector<std::size_t> qubits;
    double angle = 0.0;

    static GateOp h(std::size_t q) { return {GateKind::hadamard, {q}, 0.0}; }
    static GateOp rx(std::size_t q, double theta) {
        return {GateKind::rx, {q}, theta};
    }
    static GateOp phase(std::size_t q, double gamma) {
        return {GateKind::phase, {q}, gamma};
    }
    static GateOp cphase(std::vector<std::size_t> controls, std::size_t target,
                         double gamma) {
        controls.push_back(target);
        return {GateKind::controlled_phase, std::move(controls), gamma};
    }

    bool operator==(const GateOp &) const = default;
};

/// Ordered gate list over a fixed register. Global phase is not tracked.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t n_qubits);
    Circuit(std::size_t n_qubits, std::vector<GateOp> ops);

    /// Validates `op` against the register and appends it.
    void add(GateOp op);
    void append(const Circuit &other);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }

  private:
    std::size_t n_ = 0;
    std::vector<GateOp> ops_;
};

/// U(B, beta_p) U(C, gamma_p) ... U(B, beta_1) U(C, gamma_1) |+>^n, using
/// diagonal phases directly.
StateVector build_qaoa_state(const CostSpectrum &s, const AngleSchedule &angles,
                             std::size_t max_qubits = kDefaultMaxQubits);

/// exp(-i gamma H) up to global phase. Each coupling J_ij becomes
/// CR_ij(4 theta) followed by R_i(-2 theta) R_j(-2 theta) with theta =
/// gamma J_ij; each field h_i becomes R_i(2 gamma h_i), since s_i = +1 on
/// bit 1. Couplings go first in
/// ascending (i, j) order, then fields ascending. The constant offset is a
/// global phase and is dropped.
Circuit compile_cost_unitary(const IsingProblem &m, double gamma);

/// Hadamards on every qubit, then per layer the cost unitary and rx(2 beta_k)
/// on every qubit.
Circuit compile_qaoa_circuit(const IsingProblem &m, const AngleSchedule &angles);

/// Runs the circuit on |0...0>.
StateVector simulate_circuit(const Circuit &c,
                             std::size_t max_qubits = kDefaultMaxQubits);

/// OpenQASM 2.0 text. phase(g) is written as u1(-g) and a singly-controlled
/// phase as cu1(-g), since u1(l) = diag(1, exp(+i l)). Every qubit is measured
/// into the classical bit of the same index at the end.
std::string export_openqasm(const Circuit &c);

} // namespace qaoa
