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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "qaoa/error.hpp"
#include "qaoa/instances.hpp"
#include "qaoa/statevector.hpp"
#include "support/fixtures.hpp"

using namespace qaoa;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

StateVector random_state(std::size_t n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &x : a) {
        x = {g(rng), g(rng)};
        norm += std::norm(x);
    }
    for (auto &x : a) {
        x /= std::sqrt(norm);
    }
    return {n, std::move(a)};
}

double max_diff(const StateVector &a, const StateVector &b) {
    double d = 0.0;
    for (std::size_t z = 0; z < a.dim(); ++z) {
        d = std::max(d, std::abs(a[z] - b[z]));
    }
    return d;
}

} // namespace

TEST_CASE("uniform_superposition", "[statevector]") {
    const auto one = uniform_superposition(1);
    CHECK(one[0].real() == Approx(1.0 / std::sqrt(2.0)));
    CHECK(one[1].real() == Approx(1.0 / std::sqrt(2.0)));
    const auto two = uniform_superposition(2);
    for (std::size_t z = 0; z < 4; ++z) {
        CHECK(two[z] == cplx(0.5, 0.0));
    }
    CHECK(std::abs(uniform_superposition(5).norm() - 1.0) < 1e-15);
    CHECK_THROWS_AS(uniform_superposition(30), ResourceLimit);
    CHECK_THROWS_AS(uniform_superposition(0), InvalidArgument);
}

TEST_CASE("StateVector validates its amplitudes", "[statevector]") {
    CHECK_THROWS_AS(StateVector(2, {1.0, 0.0}), ShapeError);
    CHECK_THROWS_AS(StateVector(1, {1.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(StateVector::basis(2, 4), IndexError);
    CHECK(StateVector::basis(2, 2)[2] == cplx(1.0, 0.0));
}

TEST_CASE("apply_diagonal_phase", "[statevector]") {
    std::mt19937_64 rng(1);
    const auto psi = random_state(2, rng);
    const CostSpectrum s(2, {0.0, 0.0, 1.0, 2.0});
    CHECK(max_diff(apply_diagonal_phase(psi, s, 0.0), psi) == 0.0);

    const double g = 0.731;
    const auto out = apply_diagonal_phase(psi, s, g);
    const std::array<cplx, 4> phases{1.0, 1.0, std::polar(1.0, -g),
                                     std::polar(1.0, -2.0 * g)};
    for (std::size_t z = 0; z < 4; ++z) {
        CHECK(std::abs(out[z] - phases[z] * psi[z]) < 1e-14);
    }

    const CostSpectrum c(2, {1.5, 1.5, 1.5, 1.5});
    const auto global = apply_diagonal_phase(psi, c, g);
    for (std::size_t z = 0; z < 4; ++z) {
        CHECK(std::abs(global[z] - std::polar(1.0, -1.5 * g) * psi[z]) < 1e-14);
    }
    CHECK_THROWS_AS(apply_diagonal_phase(psi, CostSpectrum(1, {0, 0}), g),
                    ShapeError);
}

TEST_CASE("apply_rx_all", "[statevector]") {
    std::mt19937_64 rng(2);
    const auto psi = random_state(3, rng);
    CHECK(max_diff(apply_rx_all(psi, 0.0), psi) < 1e-15);

    const auto flipped = apply_rx_all(StateVector::basis(1, 0), kPi / 2.0);
    CHECK(std::abs(flipped[0]) < 1e-15);
    CHECK(std::abs(flipped[1] - cplx(0.0, -1.0)) < 1e-15);

    // One-qubit phase-then-mix identity.
    std::uniform_real_distribution<double> u(0.0, 2.0 * kPi);
    for (int k = 0; k < 10; ++k) {
        const double t = u(rng);
        const double a = std::cos(t);
        const double b = std::sin(t);
        const double g = u(rng);
        const double beta = u(rng) / 2.0;
        auto s = apply_diagonal_phase(StateVector(1, {a, b}),
                                      CostSpectrum(1, {1.0, 0.0}), g);
        s = apply_rx_all(std::move(s), beta);
        const double expect = a * a * std::cos(beta) * std::cos(beta) +
                              b * b * std::sin(beta) * std::sin(beta) +
                              a * b * std::sin(2 * beta) * std::sin(g);
        CHECK(std::norm(s[0]) == Approx(expect).margin(1e-12));
    }
}

TEST_CASE("apply_rx and hadamard", "[statevector]") {
    // rx(theta) = exp(-i theta X / 2): rx(2 beta) on each qubit equals the mixer.
    std::mt19937_64 rng(3);
    const auto psi = random_state(3, rng);
    auto manual = psi;
    for (std::size_t q = 0; q < 3; ++q) {
        manual = apply_rx(std::move(manual), q, 2 * 0.4);
    }
    CHECK(max_diff(manual, apply_rx_all(psi, 0.4)) < 1e-14);

    auto h = StateVector::basis(2, 0);
    h = apply_hadamard(std::move(h), 0);
    h = apply_hadamard(std::move(h), 1);
    CHECK(max_diff(h, uniform_superposition(2)) < 1e-15);
    CHECK_THROWS_AS(apply_hadamard(h, 2), IndexError);
}

TEST_CASE("apply_single_qubit_phase", "[statevector]") {
    std::mt19937_64 rng(4);
    const auto psi = random_state(1, rng);
    CHECK(max_diff(apply_single_qubit_phase(psi, 0, 0.0), psi) == 0.0);
    const auto out = apply_single_qubit_phase(psi, 0, 0.9);
    CHECK(std::abs(out[0] - psi[0]) < 1e-15);
    CHECK(std::abs(out[1] - psi[1] * std::polar(1.0, -0.9)) < 1e-15);
    CHECK(max_diff(apply_single_qubit_phase(psi, 0, 2 * kPi), psi) < 1e-12);
    CHECK_THROWS_AS(apply_single_qubit_phase(psi, 1, 0.1), IndexError);
}

TEST_CASE("apply_controlled_phase", "[statevector]") {
    std::mt19937_64 rng(5);
    const double g = 1.234;

    // Two controlled phases onto an ancilla held in |1>.
    const auto pair = random_state(2, rng);
    std::vector<cplx> with_ancilla(8);
    for (std::size_t z = 0; z < 4; ++z) {
        with_ancilla[2 * z + 1] = pair[z];
    }
    StateVector psi(3, with_ancilla);
    const std::array<std::size_t, 2> both{0, 1};
    const std::array<std::size_t, 1> first{0};
    psi = apply_controlled_phase(std::move(psi), both, 2, g);
    psi = apply_controlled_phase(std::move(psi), first, 2, g);
    const auto direct =
        apply_diagonal_phase(pair, CostSpectrum(2, {0.0, 0.0, 1.0, 2.0}), g);
    for (std::size_t z = 0; z < 4; ++z) {
        CHECK(std::abs(psi[2 * z + 1] - direct[z]) < 1e-12);
        CHECK(std::abs(psi[2 * z]) == 0.0);
    }

    const auto r = random_state(3, rng);
    CHECK(max_diff(apply_controlled_phase(r, {}, 1, g),
                   apply_single_qubit_phase(r, 1, g)) == 0.0);
    const auto c = apply_controlled_phase(r, first, 2, g);
    for (std::size_t z = 0; z < 8; ++z) {
        if ((z & 1U) == 0) {
            CHECK(c[z] == r[z]);
        }
    }
    const std::array<std::size_t, 1> overlap{2};
    CHECK_THROWS_AS(apply_controlled_phase(r, overlap, 2, g), IndexError);
    const std::array<std::size_t, 2> dup{0, 0};
    CHECK_THROWS_AS(apply_controlled_phase(r, dup, 2, g), IndexError);
    const std::array<std::size_t, 1> out_of_range{5};
    CHECK_THROWS_AS(apply_controlled_phase(r, out_of_range, 2, g), IndexError);
}

TEST_CASE("expectation_diagonal", "[statevector]") {
    const auto s = build_cost_spectrum(maxcut_to_ising(instances::butterfly()));
    CHECK(expectation_diagonal(uniform_superposition(5), s) == Approx(3.0));
    for (std::uint64_t z : {0U, 4U, 31U, 19U}) {
        CHECK(expectation_diagonal(StateVector::basis(5, z), s) == s[z]);
    }
    CHECK_THROWS_AS(expectation_diagonal(uniform_superposition(4), s), ShapeError);
}

TEST_CASE("measure_sample", "[statevector]") {
    const auto basis = StateVector::basis(3, 5);
    const auto all = measure_sample(basis, 100, 9);
    CHECK(all.shots == 100);
    REQUIRE(all.counts.size() == 1);
    CHECK(all.counts.at(5) == 100);

    const auto coin = measure_sample(uniform_superposition(1), 10000, 42);
    const double zeros = static_cast<double>(coin.counts.at(0));
    CHECK(std::abs(zeros - 5000.0) <= 150.0);

    std::mt19937_64 rng(6);
    const auto psi = random_state(4, rng);
    const auto a = measure_sample(psi, 500, 77);
    const auto b = measure_sample(psi, 500, 77);
    CHECK(a == b);
    std::uint64_t total = 0;
    for (const auto &[z, c] : a.counts) {
        total += c;
    }
    CHECK(total == 500);
    CHECK_THROWS_AS(measure_sample(psi, 0, 1), InvalidArgument);
}

TEST_CASE("overlap_abs", "[statevector]") {
    std::mt19937_64 rng(7);
    const auto psi = random_state(3, rng);
    CHECK(overlap_abs(psi, psi) == Approx(1.0));
    CHECK(overlap_abs(psi, apply_diagonal_phase(psi, CostSpectrum(3, std::vector<double>(8, 1.0)), 0.7)) ==
          Approx(1.0));
    CHECK(overlap_abs(StateVector::basis(2, 0), StateVector::basis(2, 1)) == 0.0);
}

TEST_CASE("gate invariants on random states", "[statevector][property]") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        const auto psi = random_state(n, rng);
        std::vector<double> d(psi.dim());
        for (auto &x : d) {
            x = u(rng);
        }
        const CostSpectrum s(n, d);
        const double g1 = u(rng);
        const double g2 = u(rng);
        const double b = u(rng);

        // Diagonal gates never move probability.
        const auto p0 = psi.probabilities();
        const std::array<std::size_t, 1> ctrl{0};
        for (const auto &out :
             {apply_diagonal_phase(psi, s, g1),
              apply_single_qubit_phase(psi, n - 1, g1),
              n > 1 ? apply_controlled_phase(psi, ctrl, n - 1, g1) : psi}) {
            const auto p1 = out.probabilities();
            for (std::size_t z = 0; z < p0.size(); ++z) {
                CHECK(std::abs(p1[z] - p0[z]) < 1e-14);
            }
            CHECK(std::abs(out.norm() - 1.0) < 1e-12);
        }
        // Composition of diagonal phases.
        CHECK(max_diff(apply_diagonal_phase(apply_diagonal_phase(psi, s, g1), s, g2),
                       apply_diagonal_phase(psi, s, g1 + g2)) < 1e-12);
        // Mixer inverse.
        const auto mixed = apply_rx_all(psi, b);
        CHECK(std::abs(mixed.norm() - 1.0) < 1e-12);
        CHECK(max_diff(apply_rx_all(mixed, -b), psi) < 1e-12);
    }
}
