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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qaoa {

/// Largest register the dense simulator will allocate by default
/// (2^24 amplitudes, about 256 MiB of complex doubles).
inline constexpr std::size_t kDefaultMaxQubits = 24;

enum class Sense { maximize, minimize };

/// Bit string over n variables. Qubit 0 is the most significant bit of the
/// basis index, so "10" is index 2. Bit 0 maps to spin -1 and bit 1 to +1.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters.
    static Assignment from_string(std::string_view bits);
    static Assignment from_index(std::size_t n, std::uint64_t index);

    [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
    [[nodiscard]] std::uint8_t operator[](std::size_t i) const {
        return bits_[i];
    }
    [[nodiscard]] int spin(std::size_t i) const { return 2 * bits_[i] - 1; }
    [[nodiscard]] std::uint64_t to_index() const;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] Assignment complement() const;

    bool operator==(const Assignment &) const = default;

  private:
    std::vector<std::uint8_t> bits_;
};

struct Edge {
    std::size_t i;
    std::size_t j;
    double weight = 1.0;

    bool operator==(const Edge &) const = default;
};

/// Undirected MaxCut instance. Edges are stored canonically (i < j) in
/// insertion order; self-loops and duplicates are rejected.
class Graph {
  public:
    Graph() = default;
    Graph(std::size_t n_vertices, std::vector<Edge> edges);

    [[nodiscard]] std::size_t n_vertices() const noexcept { return n_; }
    [[nodiscard]] std::size_t n_edges() const noexcept { return edges_.size(); }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept {
        return edges_;
    }
    [[nodiscard]] double total_weight() const;
    [[nodiscard]] bool has_edge(std::size_t a, std::size_t b) const;
    /// Neighbour lists, ascending.
    [[nodiscard]] std::vector<std::vector<std::size_t>> adjacency() const;

    bool operator==(const Graph &) const = default;

  private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/// x^T J x over x in {0,1}^n with J upper triangular; diagonal entries are
/// linear terms since x_i^2 = x_i.
class QuboProblem {
  public:
    QuboProblem() = default;
    QuboProblem(std::size_t n_vars, std::map<IndexPair, double> coefficients);

    [[nodiscard]] std::size_t n_vars() const noexcept { return n_; }
    [[nodiscard]] const std::map<IndexPair, double> &coefficients() const
        noexcept {
        return coefficients_;
    }

  private:
    std::size_t n_ = 0;
    std::map<IndexPair, double> coefficients_;
};

/// offset + sum_{i<j} J_ij s_i s_j + sum_i h_i s_i over s in {-1,+1}^n.
class IsingProblem {
  public:
    IsingProblem() = default;
    IsingProblem(std::size_t n_spins, std::map<IndexPair, double> couplings,
                 std::map<std::size_t, double> fields, double offset = 0.0);

    [[nodiscard]] std::size_t n_spins() const noexcept { return n_; }
    [[nodiscard]] const std::map<IndexPair, double> &couplings() const
        noexcept {
        return couplings_;
    }
    [[nodiscard]] const std::map<std::size_t, double> &fields() const
        noexcept {
        return fields_;
    }
    [[nodiscard]] double offset() const noexcept { return offset_; }

  private:
    std::size_t n_ = 0;
    std::map<IndexPair, double> couplings_;
    std::map<std::size_t, double> fields_;
    double offset_ = 0.0;
};

/// Diagonal of the cost operator: values()[z] is the objective of basis
/// state z.
class CostSpectrum {
  public:
    CostSpectrum() = default;
    CostSpectrum(std::size_t n_qubits, std::vector<double> values);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] const std::vector<double> &values() const noexcept {
        return values_;
    }
    [[nodiscard]] double operator[](std::size_t z) const { return values_[z]; }
    [[nodiscard]] double min() const;
    [[nodiscard]] double max() const;
    [[nodiscard]] CostSpectrum negated() const;

  private:
    std::size_t n_ = 0;
    std::vector<double> values_;
};

struct OptimumResult {
    double value = 0.0;
    std::vector<std::uint64_t> argopt; // ascending
};

double maxcut_cost(const Graph &g, const Assignment &a);
double qubo_value(const QuboProblem &q, const Assignment &a);
double ising_value(const IsingProblem &m, const Assignment &a);

IsingProblem qubo_to_ising(const QuboProblem &q);
IsingProblem maxcut_to_ising(const Graph &g);

CostSpectrum build_cost_spectrum(const IsingProblem &m,
                                 std::size_t max_qubits = kDefaultMaxQubits);

/// Extreme value and every index attaining it. Values within 1e-12
/// (relative to max(1, |best|)) of the extreme count as ties.
OptimumResult brute_force_optimum(const CostSpectrum &s, Sense sense);

} // namespace qaoa
