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

#include "qaoa/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "qaoa/error.hpp"

namespace qaoa {

namespace {

void validate(const GateOp &op, std::size_t n) {
    const auto k = op.qubits.size();
    switch (op.kind) {
    case GateKind::hadamard:
    case GateKind::rx:
    case GateKind::phase:
        if (k != 1) {
            throw InvalidArgument("single-qubit gate needs exactly one qubit");
        }
        break;
    case GateKind::controlled_phase:
        if (k < 2) {
            throw InvalidArgument(
                "controlled phase needs at least one control and a target");
        }
        break;
    }
    std::set<std::size_t> seen;
    for (auto q : op.qubits) {
        if (q >= n) {
            throw IndexError("gate qubit " + std::to_string(q) +
                             " out of range for " + std::to_string(n) +
                             "-qubit circuit");
        }
        if (!seen.insert(q).second) {
            throw IndexError("gate qubits must be distinct");
        }
    }
    if (!std::isfinite(op.angle)) {
        throw InvalidArgument("gate angle must be finite");
    }
}

std::string fmt_angle(double a) {
    if (a == 0.0) {
        a = 0.0; // drop the sign of -0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

} // namespace

AngleSchedule::AngleSchedule(std::vector<double> gammas,
                             std::vector<double> betas)
    : gammas_(std::move(gammas)), betas_(std::move(betas)) {
    if (gammas_.empty() || gammas_.size() != betas_.size()) {
        throw InvalidArgument("angle schedule needs equal, positive numbers of "
                              "gammas and betas");
    }
    for (std::size_t k = 0; k < gammas_.size(); ++k) {
        if (!std::isfinite(gammas_[k]) || !std::isfinite(betas_[k])) {
            throw InvalidArgument("angles must be finite");
        }
    }
}

AngleSchedule AngleSchedule::from_flat(const std::vector<double> &flat) {
    if (flat.empty() || flat.size() % 2 != 0) {
        throw InvalidArgument("flat angle vector must have even, nonzero length");
    }
    const auto p = flat.size() / 2;
    return {std::vector<double>(flat.begin(), flat.begin() + p),
            std::vector<double>(flat.begin() + p, flat.end())};
}

std::vector<double> AngleSchedule::flatten() const {
    std::vector<double> out(gammas_);
    out.insert(out.end(), betas_.begin(), betas_.end());
    return out;
}

Circuit::Circuit(std::size_t n_qubits) : n_(n_qubits) {
    if (n_ == 0) {
        throw InvalidArgument("circuit needs at least one qubit");
    }
}

Circuit::Circuit(std::size_t n_qubits, std::vector<GateOp> ops)
    : Circuit(n_qubits) {
    for (auto &op : ops) {
        add(std::move(op));
    }
}

void Circuit::add(GateOp op) {
    validate(op, n_);
    ops_.push_back(std::move(op));
}

void Circuit::append(const Circuit &other) {
    if (other.n_qubits() != n_) {
        throw ShapeError("cannot append circuits over different registers");
    }
    ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
}

StateVector build_qaoa_state(const CostSpectrum &s, const AngleSchedule &angles,
                             std::size_t max_qubits) {
    auto psi = uniform_superposition(s.n_qubits(), max_qubits);
    for (std::size_t k = 0; k < angles.p(); ++k) {
        psi = apply_diagonal_phase(std::move(psi), s, angles.gammas()[k]);
        psi = apply_rx_all(std::move(psi), angles.betas()[k]);
    }
    return psi;
}

Circuit compile_cost_unitary(const IsingProblem &m, double gamma) {
    Circuit c(m.n_spins());
    for (const auto &[key, coupling] : m.couplings()) {
        const double theta = gamma * coupling;
        const auto [i, j] = key;
        c.add(GateOp::cphase({i}, j, 4.0 * theta));
        c.add(GateOp::phase(i, -2.0 * theta));
        c.add(GateOp::phase(j, -2.0 * theta));
    }
    for (const auto &[i, h] : m.fields()) {
        c.add(GateOp::phase(i, 2.0 * gamma * h));
    }
    return c;
}

Circuit compile_qaoa_circuit(const IsingProblem &m,
                             const AngleSchedule &angles) {
    const auto n = m.n_spins();
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        c.add(GateOp::h(q));
    }
    for (std::size_t k = 0; k < angles.p(); ++k) {
        c.append(compile_cost_unitary(m, angles.gammas()[k]));
        for (std::size_t q = 0; q < n; ++q) {
            c.add(GateOp::rx(q, 2.0 * angles.betas()[k]));
        }
    }
    return c;
}

StateVector simulate_circuit(const Circuit &c, std::size_t max_qubits) {
    auto psi = StateVector::basis(c.n_qubits(), 0, max_qubits);
    for (const auto &op : c.ops()) {
        switch (op.kind) {
        case GateKind::hadamard:
            psi = apply_hadamard(std::move(psi), op.qubits[0]);
            break;
        case GateKind::rx:
            psi = apply_rx(std::move(psi), op.qubits[0], op.angle);
            break;
        case GateKind::phase:
            psi = apply_single_qubit_phase(std::move(psi), op.qubits[0],
                                           op.angle);
            break;
        case GateKind::controlled_phase: {
            std::span<const std::size_t> controls(op.qubits.data(),
                                                  op.qubits.size() - 1);
            psi = apply_controlled_phase(std::move(psi), controls,
                                         op.qubits.back(), op.angle);
            break;
        }
        }
    }
    return psi;
}

std::string export_openqasm(const Circuit &c) {
    std::ostringstream out;
    const auto n = c.n_qubits();
    out << "OPENQASM 2.0;\n"
        << "include \"qelib1.inc\";\n"
        << "qreg q[" << n << "];\n"
        << "creg c[" << n << "];\n";
    auto q = [](std::size_t i) { return "q[" + std::to_string(i) + "]"; };
    for (const auto &op : c.ops()) {
        switch (op.kind) {
        case GateKind::hadamard:
            out << "h " << q(op.qubits[0]) << ";\n";
            break;
        case GateKind::rx:
            out << "rx(" << fmt_angle(op.angle) << ") " << q(op.qubits[0])
                << ";\n";
            break;
        case GateKind::phase:
            out << "u1(" << fmt_angle(-op.angle) << ") " << q(op.qubits[0])
                << ";\n";
            break;
        case GateKind::controlled_phase:
            if (op.qubits.size() != 2) {
                throw UnsupportedGate(
                    "OpenQASM export supports controlled phases with exactly "
                    "one control, got " +
                    std::to_string(op.qubits.size() - 1));
            }
            out << "cu1(" << fmt_angle(-op.angle) << ") " << q(op.qubits[0])
                << "," << q(op.qubits[1]) << ";\n";
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        out << "measure " << q(i) << " -> c[" << i << "];\n";
    }
    return out.str();
}

} // namespace qaoa
