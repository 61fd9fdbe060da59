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

#include <vector>

#include "oracles.hpp"
#include "qaoa/problem.hpp"

namespace fixtures {

inline qaoa::Graph to_graph(std::size_t n,
                            const std::vector<oracle::WEdge> &edges) {
    std::vector<qaoa::Edge> e;
    for (const auto &x : edges) {
        e.push_back({x.i, x.j, x.w});
    }
    return {n, std::move(e)};
}

inline std::vector<oracle::WEdge> edges_of(const qaoa::Graph &g) {
    std::vector<oracle::WEdge> e;
    for (const auto &x : g.edges()) {
        e.push_back({x.i, x.j, x.weight});
    }
    return e;
}

inline qaoa::IsingProblem to_ising(const oracle::Ising &m) {
    return {m.n, m.J, m.h, m.offset};
}

/// Oracle cut diagonal of a library graph.
inline std::vector<double> cut_diag(const qaoa::Graph &g) {
    const auto e = edges_of(g);
    return oracle::diag(g.n_vertices(), [&](std::uint64_t z) {
        return oracle::cut_value(g.n_vertices(), e, z);
    });
}

inline std::vector<double> linspace(double lo, double hi, std::size_t k) {
    std::vector<double> v(k);
    for (std::size_t i = 0; i < k; ++i) {
        v[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1);
    }
    return v;
}

} // namespace fixtures
