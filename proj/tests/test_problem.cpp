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

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qaoa/error.hpp"
#include "qaoa/instances.hpp"
#include "qaoa/problem.hpp"
#include "support/fixtures.hpp"

using namespace qaoa;
using Catch::Approx;

namespace {
Assignment bits(const char *s) { return Assignment::from_string(s); }
} // namespace

TEST_CASE("Assignment round trips and spins", "[problem]") {
    const auto a = bits("10110");
    CHECK(a.size() == 5);
    CHECK(a.to_index() == 0b10110);
    CHECK(a.to_string() == "10110");
    CHECK(Assignment::from_index(5, 0b10110).to_string() == "10110");
    CHECK(a.spin(0) == 1);
    CHECK(a.spin(1) == -1);
    CHECK(a.complement().to_string() == "01001");
    CHECK_THROWS_AS(Assignment::from_string("10x"), InvalidAssignment);
}

TEST_CASE("Graph canonicalises and validates edges", "[problem]") {
    const Graph g(3, {{2, 0, 1.5}, {1, 2}});
    REQUIRE(g.n_edges() == 2);
    CHECK(g.edges()[0].i == 0);
    CHECK(g.edges()[0].j == 2);
    CHECK(g.total_weight() == Approx(2.5));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 1));
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidArgument);
}

TEST_CASE("maxcut_cost on the butterfly", "[problem]") {
    const auto g = instances::butterfly();
    CHECK(maxcut_cost(g, bits("00000")) == 0.0);
    CHECK(maxcut_cost(g, bits("00100")) == 4.0);
    CHECK(maxcut_cost(g, bits("11111")) == 0.0);
    CHECK_THROWS_AS(maxcut_cost(g, bits("0010")), InvalidAssignment);
}

TEST_CASE("qubo_value direct substitution", "[problem]") {
    const QuboProblem empty(3, {});
    CHECK(qubo_value(empty, bits("101")) == 0.0);
    const QuboProblem q(2, {{{0, 1}, 3.0}});
    CHECK(qubo_value(q, bits("11")) == 3.0);
    CHECK(qubo_value(q, bits("10")) == 0.0);
    CHECK_THROWS_AS(qubo_value(q, bits("1")), InvalidAssignment);
    CHECK_THROWS_AS(QuboProblem(2, {{{1, 0}, 1.0}}), InvalidArgument);
}

TEST_CASE("ising_value direct substitution", "[problem]") {
    CHECK(ising_value(IsingProblem(2, {}, {}), bits("01")) == 0.0);
    CHECK(ising_value(IsingProblem(2, {{{0, 1}, 1.0}}, {}), bits("01")) == -1.0);
    CHECK(ising_value(IsingProblem(1, {}, {{0, 2.0}}, 5.0), bits("1")) == 7.0);
    CHECK_THROWS_AS(ising_value(IsingProblem(2, {}, {}), bits("0")),
                    InvalidAssignment);
}

TEST_CASE("qubo_to_ising small expansions", "[problem]") {
    const auto zero = qubo_to_ising(QuboProblem(2, {}));
    CHECK(zero.couplings().empty());
    CHECK(zero.fields().empty());
    CHECK(zero.offset() == 0.0);

    const auto one = qubo_to_ising(QuboProblem(1, {{{0, 0}, 1.0}}));
    CHECK(one.fields().at(0) == 0.5);
    CHECK(one.offset() == 0.5);

    const auto pair = qubo_to_ising(QuboProblem(2, {{{0, 1}, 1.0}}));
    CHECK(pair.couplings().at({0, 1}) == 0.25);
    CHECK(pair.fields().at(0) == 0.25);
    CHECK(pair.fields().at(1) == 0.25);
    CHECK(pair.offset() == 0.25);
}

TEST_CASE("QUBO and Ising agree on every assignment", "[problem][property]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        std::map<IndexPair, double> c;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                c[{i, j}] = u(rng);
            }
        }
        const QuboProblem q(n, c);
        const auto m = qubo_to_ising(q);
        for (std::uint64_t z = 0; z < (1U << n); ++z) {
            const auto a = Assignment::from_index(n, z);
            CHECK(ising_value(m, a) == Approx(oracle::qubo_energy(n, c, z)).margin(1e-12));
            CHECK(qubo_value(q, a) == Approx(oracle::qubo_energy(n, c, z)).margin(1e-12));
        }
    }
}

TEST_CASE("maxcut_to_ising", "[problem]") {
    const auto edge = maxcut_to_ising(instances::single_edge());
    CHECK(edge.couplings().at({0, 1}) == -0.5);
    CHECK(edge.offset() == 0.5);

    const auto b = maxcut_to_ising(instances::butterfly());
    CHECK(b.offset() == 3.0);
    REQUIRE(b.couplings().size() == 6);
    for (const auto &[k, v] : b.couplings()) {
        CHECK(v == -0.5);
    }

    const auto empty = maxcut_to_ising(Graph(3, {}));
    CHECK(empty.offset() == 0.0);
    CHECK(empty.couplings().empty());
    CHECK(empty.fields().empty());
}

TEST_CASE("MaxCut identities on random graphs", "[problem][property]") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 7);
        const auto edges = oracle::random_graph(n, 0.5, rng, trial % 2 == 1);
        const auto g = fixtures::to_graph(n, edges);
        const auto m = maxcut_to_ising(g);
        for (std::uint64_t z = 0; z < (1U << n); ++z) {
            const auto a = Assignment::from_index(n, z);
            const double c = maxcut_cost(g, a);
            CHECK(c == Approx(oracle::cut_value(n, edges, z)).margin(1e-12));
            CHECK(ising_value(m, a) == Approx(c).margin(1e-12));
            CHECK(maxcut_cost(g, a.complement()) == Approx(c).margin(1e-12));
        }
        if (trial % 2 == 0) {
            const auto opt =
                brute_force_optimum(build_cost_spectrum(m), Sense::maximize);
            CHECK(opt.value <= static_cast<double>(g.n_edges()));
            CHECK(opt.value >= static_cast<double>(g.n_edges()) / 2.0);
        }
    }
}

TEST_CASE("build_cost_spectrum", "[problem]") {
    const auto one = build_cost_spectrum(IsingProblem(1, {}, {{0, 1.0}}));
    REQUIRE(one.size() == 2);
    CHECK(one[0] == -1.0);
    CHECK(one[1] == 1.0);

    const auto butterfly = build_cost_spectrum(maxcut_to_ising(instances::butterfly()));
    CHECK(butterfly.size() == 32);
    CHECK(butterfly.max() == 4.0);

    const auto constant = build_cost_spectrum(IsingProblem(3, {}, {}, 2.5));
    for (double v : constant.values()) {
        CHECK(v == 2.5);
    }
    CHECK_THROWS_AS(build_cost_spectrum(IsingProblem(6, {}, {}), 5), ResourceLimit);
    CHECK_THROWS_AS(CostSpectrum(2, {0.0, 1.0}), ShapeError);
}

TEST_CASE("brute_force_optimum keeps every optimum", "[problem]") {
    const auto g = instances::butterfly();
    const auto s = build_cost_spectrum(maxcut_to_ising(g));
    const auto opt = brute_force_optimum(s, Sense::maximize);
    const auto [value, count] = oracle::max_count(fixtures::cut_diag(g));
    CHECK(opt.value == value);
    CHECK(opt.argopt.size() == count);
    CHECK(std::is_sorted(opt.argopt.begin(), opt.argopt.end()));
    for (auto z : opt.argopt) {
        CHECK(s[z] == 4.0);
    }

    const auto moser = instances::moser_spindle();
    const auto ms = build_cost_spectrum(maxcut_to_ising(moser));
    const auto mopt = brute_force_optimum(ms, Sense::maximize);
    CHECK(mopt.value == oracle::max_count(fixtures::cut_diag(moser)).first);

    const CostSpectrum constant(2, {1.0, 1.0, 1.0, 1.0});
    CHECK(brute_force_optimum(constant, Sense::minimize).argopt.size() == 4);

    const CostSpectrum mixed(2, {3.0, -1.0, 2.0, -1.0});
    const auto mn = brute_force_optimum(mixed, Sense::minimize);
    CHECK(mn.value == -1.0);
    CHECK(mn.argopt == std::vector<std::uint64_t>{1, 3});
}
