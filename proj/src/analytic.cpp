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

#include "qaoa/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "qaoa/error.hpp"
#include "qaoa/kernels.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

double triangle_free_ising_expectation(const IsingProblem &m, double gamma,
                                       double beta) {
    const auto n = m.n_spins();
    std::vector<std::map<std::size_t, double>> nbr(n);
    for (const auto &[key, j] : m.couplings()) {
        if (j != 0.0) {
            nbr[key.first][key.second] = j;
            nbr[key.second][key.first] = j;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto &ij : nbr[i]) {
            const auto j = ij.first;
            if (j < i) {
                continue;
            }
            for (const auto &jk : nbr[j]) {
                const auto k = jk.first;
                if (k > j && nbr[i].contains(k)) {
                    throw PreconditionError(
                        "coupling graph contains triangle (" +
                        std::to_string(i) + ", " + std::to_string(j) + ", " +
                        std::to_string(k) + ")");
                }
            }
        }
    }

    auto field = [&](std::size_t i) {
        auto it = m.fields().find(i);
        return it == m.fields().end() ? 0.0 : it->second;
    };
    // Product of cos(2 gamma J_ik) over neighbours k of i, skipping `except`.
    auto cos_prod = [&](std::size_t i, std::size_t except) {
        double prod = 1.0;
        for (const auto &[k, j] : nbr[i]) {
            if (k != except) {
                prod *= std::cos(2.0 * gamma * j);
            }
        }
        return prod;
    };

    const double s2b = std::sin(2.0 * beta);
    const double c2b = std::cos(2.0 * beta);
    double total = m.offset();
    for (std::size_t i = 0; i < n; ++i) {
        const double h = field(i);
        total += h * s2b * std::sin(2.0 * gamma * h) * cos_prod(i, n);
    }
    for (const auto &[key, jij] : m.couplings()) {
        if (jij == 0.0) {
            continue;
        }
        const auto [i, j] = key;
        const double hi = field(i);
        const double hj = field(j);
        const double pi = cos_prod(i, j);
        const double pj = cos_prod(j, i);
        total += 0.5 * jij * std::sin(beta) * std::cos(beta) *
                 (2.0 * c2b * std::sin(2.0 * gamma * jij) *
                      (2.0 * std::cos(2.0 * gamma * hi) * pi +
                       2.0 * std::cos(2.0 * gamma * hj) * pj) +
                  4.0 * s2b * std::sin(2.0 * gamma * hi) *
                      std::sin(2.0 * gamma * hj) * pi * pj);
    }
    return total;
}

double butterfly_fA(double gamma, double beta) {
    return 0.25 * (std::sin(2 * beta) * std::sin(gamma) *
                       (std::cos(2 * beta - gamma) +
                        3 * std::cos(2 * beta + gamma)) +
                   2);
}

double butterfly_fB(double gamma, double beta) {
    return 0.125 * (std::sin(2 * beta) * std::sin(2 * gamma) *
                        (std::cos(2 * (beta + gamma)) + 3 * std::cos(2 * beta)) +
                    4);
}

double butterfly_F(double gamma, double beta) {
    return 2 * butterfly_fA(gamma, beta) + 4 * butterfly_fB(gamma, beta);
}

double butterfly_expanded_F(double gamma, double beta) {
    return (21 + 3 * std::cos(4 * beta) + 4 * std::cos(4 * beta - 2 * gamma) +
            2 * std::cos(2 * gamma) + std::cos(4 * gamma) -
            std::cos(4 * (beta + gamma)) - 6 * std::cos(2 * (2 * beta + gamma))) /
           8;
}

double moser_spindle_F(double gamma, double beta) {
    const double cg = std::cos(gamma);
    const double s2b = std::sin(2 * beta);
    const double s2g = std::sin(2 * gamma);
    return (88 + 8 * cg * cg * (9 + 2 * cg) * std::sin(4 * beta) * std::sin(gamma) -
            8 * (2 + cg) * s2b * s2b * s2g * s2g) /
           16;
}

double RootedGraph::root_weight() const {
    for (const auto &e : graph.edges()) {
        if (e.i == 0 && e.j == 1) {
            return e.weight;
        }
    }
    throw InvalidArgument("rooted graph has no root edge (0, 1)");
}

RootedGraph edge_neighborhood_subgraph(const Graph &g, IndexPair edge,
                                       std::size_t p) {
    auto [a, b] = edge;
    if (a > b) {
        std::swap(a, b);
    }
    if (!g.has_edge(a, b)) {
        throw InvalidArgument("edge (" + std::to_string(a) + ", " +
                              std::to_string(b) + ") is not in the graph");
    }
    if (p == 0) {
        throw InvalidArgument("neighbourhood radius must be positive");
    }
    const auto adj = g.adjacency();
    constexpr auto kUnreached = static_cast<std::size_t>(-1);
    std::vector<std::size_t> dist(g.n_vertices(), kUnreached);
    std::queue<std::size_t> frontier;
    dist[a] = dist[b] = 0;
    frontier.push(a);
    frontier.push(b);
    while (!frontier.empty()) {
        const auto u = frontier.front();
        frontier.pop();
        if (dist[u] == p) {
            continue;
        }
        for (auto v : adj[u]) {
            if (dist[v] == kUnreached) {
                dist[v] = dist[u] + 1;
                frontier.push(v);
            }
        }
    }

    // Root endpoints become 0 and 1; the rest follow by distance, then index.
    std::vector<std::size_t> order;
    for (std::size_t v = 0; v < g.n_vertices(); ++v) {
        if (dist[v] != kUnreached && v != a && v != b) {
            order.push_back(v);
        }
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](auto x, auto y) { return dist[x] < dist[y]; });
    order.insert(order.begin(), {a, b});

    std::vector<std::size_t> local(g.n_vertices(), kUnreached);
    for (std::size_t k = 0; k < order.size(); ++k) {
        local[order[k]] = k;
    }
    std::vector<Edge> edges;
    for (const auto &e : g.edges()) {
        if (local[e.i] != kUnreached && local[e.j] != kUnreached) {
            edges.push_back({local[e.i], local[e.j], e.weight});
        }
    }
    return {Graph(order.size(), std::move(edges)), std::move(order)};
}

namespace {

/// Dense weighted adjacency used by the isomorphism search.
struct DenseGraph {
    std::size_t n;
    std::vector<char> present;
    std::vector<double> weight;
    std::vector<std::size_t> degree;

    explicit DenseGraph(const Graph &g)
        : n(g.n_vertices()), present(n * n, 0), weight(n * n, 0.0),
          degree(n, 0) {
        for (const auto &e : g.edges()) {
            present[e.i * n + e.j] = present[e.j * n + e.i] = 1;
            weight[e.i * n + e.j] = weight[e.j * n + e.i] = e.weight;
            ++degree[e.i];
            ++degree[e.j];
        }
    }

    [[nodiscard]] bool has(std::size_t u, std::size_t v) const {
        return present[u * n + v] != 0;
    }
    [[nodiscard]] double w(std::size_t u, std::size_t v) const {
        return weight[u * n + v];
    }
};

class IsoSearch {
  public:
    IsoSearch(const DenseGraph &a, const DenseGraph &b)
        : a_(a), b_(b), map_(a.n, kFree), used_(b.n, false) {}

    bool fix(std::size_t u, std::size_t v) {
        if (a_.degree[u] != b_.degree[v] || used_[v] || !consistent(u, v)) {
            return false;
        }
        map_[u] = v;
        used_[v] = true;
        return true;
    }

    bool solve() { return extend(0); }

  private:
    static constexpr auto kFree = static_cast<std::size_t>(-1);

    [[nodiscard]] bool consistent(std::size_t u, std::size_t v) const {
        for (std::size_t x = 0; x < a_.n; ++x) {
            const auto y = map_[x];
            if (y == kFree) {
                continue;
            }
            if (a_.has(u, x) != b_.has(v, y)) {
                return false;
            }
            if (a_.has(u, x) && a_.w(u, x) != b_.w(v, y)) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t u) {
        while (u < a_.n && map_[u] != kFree) {
            ++u;
        }
        if (u == a_.n) {
            return true;
        }
        for (std::size_t v = 0; v < b_.n; ++v) {
            if (!fix(u, v)) {
                continue;
            }
            if (extend(u + 1)) {
                return true;
            }
            map_[u] = kFree;
            used_[v] = false;
        }
        return false;
    }

    const DenseGraph &a_;
    const DenseGraph &b_;
    std::vector<std::size_t> map_;
    std::vector<bool> used_;
};

bool same_invariants(const Graph &a, const Graph &b) {
    if (a.n_vertices() != b.n_vertices() || a.n_edges() != b.n_edges()) {
        return false;
    }
    auto degrees = [](const Graph &g) {
        std::vector<std::size_t> d(g.n_vertices(), 0);
        for (const auto &e : g.edges()) {
            ++d[e.i];
            ++d[e.j];
        }
        std::sort(d.begin(), d.end());
        return d;
    };
    auto weights = [](const Graph &g) {
        std::vector<double> w;
        for (const auto &e : g.edges()) {
            w.push_back(e.weight);
        }
        std::sort(w.begin(), w.end());
        return w;
    };
    return degrees(a) == degrees(b) && weights(a) == weights(b);
}

} // namespace

bool isomorphic(const Graph &a, const Graph &b) {
    if (!same_invariants(a, b)) {
        return false;
    }
    DenseGraph da(a);
    DenseGraph db(b);
    return IsoSearch(da, db).solve();
}

bool rooted_isomorphic(const RootedGraph &a, const RootedGraph &b) {
    if (!same_invariants(a.graph, b.graph) || a.root_weight() != b.root_weight()) {
        return false;
    }
    DenseGraph da(a.graph);
    DenseGraph db(b.graph);
    for (auto [x, y] : {IndexPair{0, 1}, IndexPair{1, 0}}) {
        IsoSearch search(da, db);
        if (search.fix(0, x) && search.fix(1, y) && search.solve()) {
            return true;
        }
    }
    return false;
}

std::vector<SubgraphClass> subgraph_classes(const Graph &g, std::size_t p) {
    std::vector<SubgraphClass> classes;
    for (const auto &e : g.edges()) {
        auto rooted = edge_neighborhood_subgraph(g, {e.i, e.j}, p);
        auto it = std::find_if(classes.begin(), classes.end(), [&](const auto &c) {
            return rooted_isomorphic(c.representative, rooted);
        });
        if (it == classes.end()) {
            classes.push_back({std::move(rooted), 1, {{e.i, e.j}}});
        } else {
            ++it->multiplicity;
            it->members.emplace_back(e.i, e.j);
        }
    }
    return classes;
}

double root_edge_expectation(const RootedGraph &s, const AngleSchedule &angles) {
    const auto &sub = s.graph;
    const auto spectrum = build_cost_spectrum(maxcut_to_ising(sub));
    const auto psi = build_qaoa_state(spectrum, angles);
    const auto n = sub.n_vertices();
    const double zz = kernels::pauli_expectation(
        psi.amplitudes(),
        {0, 0, kernels::qubit_bit(n, 0) | kernels::qubit_bit(n, 1)});
    return s.root_weight() * 0.5 * (1.0 - zz);
}

double decomposed_expectation(const Graph &g, const AngleSchedule &angles) {
    const auto classes = subgraph_classes(g, angles.p());
    for (const auto &c : classes) {
        if (c.representative.graph.n_vertices() > kDefaultMaxQubits) {
            throw ResourceLimit("edge neighbourhood with " +
                                std::to_string(
                                    c.representative.graph.n_vertices()) +
                                " vertices exceeds the qubit limit");
        }
    }
    std::vector<double> f(classes.size(), 0.0);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(classes.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < count; ++k) {
        try {
            const auto &c = classes[static_cast<std::size_t>(k)];
            f[static_cast<std::size_t>(k)] =
                static_cast<double>(c.multiplicity) *
                root_edge_expectation(c.representative, angles);
        } catch (...) {
#pragma omp critical
            failure = std::current_exception();
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return std::accumulate(f.begin(), f.end(), 0.0);
}

} // namespace qaoa
