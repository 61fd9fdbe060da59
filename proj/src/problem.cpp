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

#include "qaoa/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qaoa/error.hpp"

namespace qaoa {

namespace {

void require_length(std::size_t expected, const Assignment &a) {
    if (a.size() != expected) {
        throw InvalidAssignment("assignment has " + std::to_string(a.size()) +
                                " bits, problem has " +
                                std::to_string(expected) + " variables");
    }
}

void require_finite(double v, const char *what) {
    if (!std::isfinite(v)) {
        throw InvalidArgument(std::string(what) + " must be finite");
    }
}

} // namespace

Assignment::Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) {
            throw InvalidAssignment("assignment bits must be 0 or 1");
        }
    }
}

Assignment Assignment::from_string(std::string_view bits) {
    std::vector<std::uint8_t> out;
    out.reserve(bits.size());
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidAssignment("assignment string must contain only 0/1");
        }
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Assignment(std::move(out));
}

Assignment Assignment::from_index(std::size_t n, std::uint64_t index) {
    std::vector<std::uint8_t> out(n);
    for (std::size_t q = 0; q < n; ++q) {
        out[q] = static_cast<std::uint8_t>((index >> (n - 1 - q)) & 1U);
    }
    return Assignment(std::move(out));
}

std::uint64_t Assignment::to_index() const {
    std::uint64_t z = 0;
    for (auto b : bits_) {
        z = (z << 1U) | b;
    }
    return z;
}

std::string Assignment::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) {
        s.push_back(static_cast<char>('0' + b));
    }
    return s;
}

Assignment Assignment::complement() const {
    auto bits = bits_;
    for (auto &b : bits) {
        b ^= 1U;
    }
    return Assignment(std::move(bits));
}

Graph::Graph(std::size_t n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), edges_(std::move(edges)) {
    if (n_ == 0) {
        throw InvalidArgument("graph needs at least one vertex");
    }
    std::set<IndexPair> seen;
    for (auto &e : edges_) {
        if (e.i > e.j) {
            std::swap(e.i, e.j);
        }
        if (e.i == e.j) {
            throw InvalidArgument("self-loop on vertex " + std::to_string(e.i));
        }
        if (e.j >= n_) {
            throw InvalidArgument("edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ") out of range");
        }
        require_finite(e.weight, "edge weight");
        if (!seen.emplace(e.i, e.j).second) {
            throw InvalidArgument("duplicate edge (" + std::to_string(e.i) +
                                  ", " + std::to_string(e.j) + ")");
        }
    }
}

double Graph::total_weight() const {
    double w = 0.0;
    for (const auto &e : edges_) {
        w += e.weight;
    }
    return w;
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
    if (a > b) {
        std::swap(a, b);
    }
    return std::any_of(edges_.begin(), edges_.end(),
                       [&](const Edge &e) { return e.i == a && e.j == b; });
}

std::vector<std::vector<std::size_t>> Graph::adjacency() const {
    std::vector<std::vector<std::size_t>> adj(n_);
    for (const auto &e : edges_) {
        adj[e.i].push_back(e.j);
        adj[e.j].push_back(e.i);
    }
    for (auto &row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

QuboProblem::QuboProblem(std::size_t n_vars,
                         std::map<IndexPair, double> coefficients)
    : n_(n_vars), coefficients_(std::move(coefficients)) {
    if (n_ == 0) {
        throw InvalidArgument("QUBO needs at least one variable");
    }
    for (const auto &[key, v] : coefficients_) {
        if (key.first > key.second || key.second >= n_) {
            throw InvalidArgument("QUBO key (" + std::to_string(key.first) +
                                  ", " + std::to_string(key.second) +
                                  ") must satisfy i <= j < n");
        }
        require_finite(v, "QUBO coefficient");
    }
}

IsingProblem::IsingProblem(std::size_t n_spins,
                           std::map<IndexPair, double> couplings,
                           std::map<std::size_t, double> fields, double offset)
    : n_(n_spins), couplings_(std::move(couplings)), fields_(std::move(fields)),
      offset_(offset) {
    if (n_ == 0) {
        throw InvalidArgument("Ising problem needs at least one spin");
    }
    for (const auto &[key, v] : couplings_) {
        if (key.first >= key.second || key.second >= n_) {
            throw InvalidArgument("coupling key (" + std::to_string(key.first) +
                                  ", " + std::to_string(key.second) +
                                  ") must satisfy i < j < n");
        }
        require_finite(v, "coupling");
    }
    for (const auto &[i, v] : fields_) {
        if (i >= n_) {
            throw InvalidArgument("field index " + std::to_string(i) +
                                  " out of range");
        }
        require_finite(v, "field");
    }
    require_finite(offset_, "offset");
}

CostSpectrum::CostSpectrum(std::size_t n_qubits, std::vector<double> values)
    : n_(n_qubits), values_(std::move(values)) {
    if (n_ == 0 || n_ >= 64) {
        throw InvalidArgument("spectrum qubit count out of range");
    }
    if (values_.size() != (std::size_t{1} << n_)) {
        throw ShapeError("spectrum of " + std::to_string(n_) + " qubits needs " +
                         std::to_string(std::size_t{1} << n_) + " values, got " +
                         std::to_string(values_.size()));
    }
    for (double v : values_) {
        require_finite(v, "spectrum value");
    }
}

double CostSpectrum::min() const {
    return *std::min_element(values_.begin(), values_.end());
}

double CostSpectrum::max() const {
    return *std::max_element(values_.begin(), values_.end());
}

CostSpectrum CostSpectrum::negated() const {
    auto v = values_;
    for (auto &x : v) {
        x = -x;
    }
    return {n_, std::move(v)};
}

double maxcut_cost(const Graph &g, const Assignment &a) {
    require_length(g.n_vertices(), a);
    double cost = 0.0;
    for (const auto &e : g.edges()) {
        cost += e.weight * 0.5 * (1.0 - a.spin(e.i) * a.spin(e.j));
    }
    return cost;
}

double qubo_value(const QuboProblem &q, const Assignment &a) {
    require_length(q.n_vars(), a);
    double v = 0.0;
    for (const auto &[key, c] : q.coefficients()) {
        if (a[key.first] != 0U && a[key.second] != 0U) {
            v += c;
        }
    }
    return v;
}

double ising_value(const IsingProblem &m, const Assignment &a) {
    require_length(m.n_spins(), a);
    double v = m.offset();
    for (const auto &[key, c] : m.couplings()) {
        v += c * a.spin(key.first) * a.spin(key.second);
    }
    for (const auto &[i, h] : m.fields()) {
        v += h * a.spin(i);
    }
    return v;
}

IsingProblem qubo_to_ising(const QuboProblem &q) {
    // x = (1 + s) / 2
    std::map<IndexPair, double> couplings;
    std::map<std::size_t, double> fields;
    double offset = 0.0;
    for (const auto &[key, c] : q.coefficients()) {
        if (c == 0.0) {
            continue;
        }
        const auto [i, j] = key;
        if (i == j) {
            fields[i] += 0.5 * c;
            offset += 0.5 * c;
        } else {
            couplings[key] += 0.25 * c;
            fields[i] += 0.25 * c;
            fields[j] += 0.25 * c;
            offset += 0.25 * c;
        }
    }
    std::erase_if(fields, [](const auto &kv) { return kv.second == 0.0; });
    return {q.n_vars(), std::move(couplings), std::move(fields), offset};
}

IsingProblem maxcut_to_ising(const Graph &g) {
    std::map<IndexPair, double> couplings;
    double offset = 0.0;
    for (const auto &e : g.edges()) {
        couplings[{e.i, e.j}] = -0.5 * e.weight;
        offset += 0.5 * e.weight;
    }
    return {g.n_vertices(), std::move(couplings), {}, offset};
}

CostSpectrum build_cost_spectrum(const IsingProblem &m, std::size_t max_qubits) {
    const std::size_t n = m.n_spins();
    if (n > max_qubits) {
        throw ResourceLimit("problem has " + std::to_string(n) +
                            " spins, limit is " + std::to_string(max_qubits));
    }
    struct Term {
        std::uint64_t mask;
        double weight;
    };
    // Parity of (z & mask) decides the sign of each Z-product term.
    std::vector<Term> terms;
    terms.reserve(m.couplings().size() + m.fields().size());
    auto bit = [n](std::size_t q) { return std::uint64_t{1} << (n - 1 - q); };
    for (const auto &[key, c] : m.couplings()) {
        terms.push_back({bit(key.first) | bit(key.second), c});
    }
    for (const auto &[i, h] : m.fields()) {
        terms.push_back({bit(i), h});
    }

    const std::int64_t dim = std::int64_t{1} << n;
    std::vector<double> values(static_cast<std::size_t>(dim));
    const double offset = m.offset();
#pragma omp parallel for schedule(static) if (dim >= (1 << 14))
    for (std::int64_t z = 0; z < dim; ++z) {
        // Spin s_q = +1 when bit q is set, so an odd number of zeros under
        // the mask flips the sign.
        double v = offset;
        const auto uz = static_cast<std::uint64_t>(z);
        for (const auto &t : terms) {
            const auto zeros = static_cast<unsigned>(
                __builtin_popcountll(~uz & t.mask));
            v += (zeros & 1U) ? -t.weight : t.weight;
        }
        values[static_cast<std::size_t>(z)] = v;
    }
    return {n, std::move(values)};
}

OptimumResult brute_force_optimum(const CostSpectrum &s, Sense sense) {
    const auto &v = s.values();
    const double best = sense == Sense::maximize ? s.max() : s.min();
    const double tol = 1e-12 * std::max(1.0, std::abs(best));
    OptimumResult out{best, {}};
    for (std::size_t z = 0; z < v.size(); ++z) {
        if (std::abs(v[z] - best) <= tol) {
            out.argopt.push_back(z);
        }
    }
    return out;
}

} // namespace qaoa
