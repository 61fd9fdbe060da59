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
#include <optional>
#include <utility>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/problem.hpp"

namespace qaoa {

// ---------------------------------------------------------------------------
// Closed-form depth-1 expectations
// ---------------------------------------------------------------------------

/// <H> at p = 1 for an Ising problem whose coupling graph (nonzero J_ij) has
/// no triangles, plus the problem's constant offset:
///
///   sum_i h_i sin2b sin(2g h_i) prod_{(i,k)} cos(2g J_ik)
///   + sum_(i,j) 1/2 J_ij sin b cos b (
///         2 cos2b sin(2g J_ij) (2 cos(2g h_i) P_i + 2 cos(2g h_j) P_j)
///       + 4 sin2b sin(2g h_i) sin(2g h_j) P_i P_j )
///
/// with P_i = prod_{(i,k), k != j} cos(2g J_ik) (empty product is 1).
/// Throws PreconditionError naming one triangle if the graph has one.
double triangle_free_ising_expectation(const IsingProblem &m, double gamma,
                                       double beta);

/// Per-edge expectation for the two edges of the butterfly that sit only in a
/// triangle: 1/4 (sin2b sin g (cos(2b - g) + 3 cos(2b + g)) + 2).
double butterfly_fA(double gamma, double beta);

/// Per-edge expectation for the four edges touching the butterfly's centre:
/// 1/8 (sin2b sin2g (cos(2(b + g)) + 3 cos2b) + 4).
double butterfly_fB(double gamma, double beta);

/// 2 fA + 4 fB.
double butterfly_F(double gamma, double beta);

/// The expanded trigonometric form of the butterfly expectation:
/// 1/8 (21 + 3cos4b + 4cos(4b - 2g) + 2cos2g + cos4g - cos4(b + g)
///      - 6cos(2(2b + g))).
double butterfly_expanded_F(double gamma, double beta);

/// 1/16 (88 + 8 cos^2 g (9 + 2 cos g) sin4b sin g
///       - 8 (2 + cos g) sin^2 2b sin^2 2g).
double moser_spindle_F(double gamma, double beta);

// ---------------------------------------------------------------------------
// Edge-neighbourhood decomposition F = sum_S m_S f_S
// ---------------------------------------------------------------------------

/// A subgraph with a distinguished root edge. Root endpoints are always
/// relabelled to local vertices 0 and 1; `host_vertex[k]` is the original
/// index of local vertex k.
struct RootedGraph {
    Graph graph;
    std::vector<std::size_t> host_vertex;

    [[nodiscard]] double root_weight() const;
};

struct SubgraphClass {
    RootedGraph representative;
    std::size_t multiplicity = 0;
    std::vector<IndexPair> members; // host edges, in host edge order
};

/// Subgraph induced on every vertex within graph distance p of the edge's
/// endpoints. Edges between two distance-p vertices commute with the
/// depth-p light cone and do not change the root edge's expectation.
RootedGraph edge_neighborhood_subgraph(const Graph &g, IndexPair edge,
                                       std::size_t p);

/// Weight-preserving isomorphism search (backtracking with degree pruning).
bool isomorphic(const Graph &a, const Graph &b);

/// Isomorphism that maps root edge onto root edge (either orientation).
bool rooted_isomorphic(const RootedGraph &a, const RootedGraph &b);

/// Groups edge neighbourhoods by rooted isomorphism, in order of first
/// appearance. Multiplicities sum to the edge count.
std::vector<SubgraphClass> subgraph_classes(const Graph &g, std::size_t p);

/// Root-edge contribution w_root * 1/2 (1 - <Z_0 Z_1>) of the ansatz
/// restricted to the subgraph.
double root_edge_expectation(const RootedGraph &s, const AngleSchedule &angles);

/// sum_S m_S f_S with neighbourhood radius angles.p().
double decomposed_expectation(const Graph &g, const AngleSchedule &angles);

} // namespace qaoa
