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

#include <cmath>
#include <limits>
#include <numbers>

#include "qaoa/analytic.hpp"
#include "qaoa/error.hpp"
#include "qaoa/optimizer.hpp"

using namespace qaoa;
using Catch::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

double butterfly(const AngleSchedule &a) {
    return butterfly_F(a.gammas()[0], a.betas()[0]);
}

double moser(const AngleSchedule &a) {
    return moser_spindle_F(a.gammas()[0], a.betas()[0]);
}

bool within(const AngleSchedule &a, const AngleBounds &b) {
    return b.contains(a);
}

} // namespace

TEST_CASE("AngleBounds", "[optimizer]") {
    const AngleBounds b;
    CHECK(b.gamma.hi == Approx(2 * kPi));
    CHECK(b.beta.hi == Approx(kPi));
    CHECK(b.contains(AngleSchedule({0.0}, {kPi})));
    CHECK_FALSE(b.contains(AngleSchedule({-0.1}, {0.0})));
    CHECK(b.clamp(AngleSchedule({-1.0}, {4.0})) == AngleSchedule({0.0}, {kPi}));
    AngleBounds bad;
    bad.beta = {1.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("grid_search", "[optimizer]") {
    const AngleBounds bounds;
    const auto constant = grid_search([](const AngleSchedule &) { return 2.0; }, 1,
                                      bounds, 5, Sense::maximize);
    CHECK(constant.best_value == 2.0);
    CHECK(constant.best_angles == AngleSchedule({0.0}, {0.0}));
    CHECK(constant.evaluations == 25);

    const auto sine = grid_search(
        [](const AngleSchedule &a) { return std::sin(a.gammas()[0]); }, 1, bounds,
        41, Sense::maximize);
    const double step = 2 * kPi / 40;
    CHECK(std::abs(sine.best_angles.gammas()[0] - kPi / 2) <= step);

    const auto low = grid_search(
        [](const AngleSchedule &a) { return std::sin(a.gammas()[0]); }, 1, bounds,
        41, Sense::minimize);
    CHECK(std::abs(low.best_angles.gammas()[0] - 3 * kPi / 2) <= step);

    // Grid order: gamma_1 slowest.
    const auto order = grid_search(
        [](const AngleSchedule &a) { return a.betas()[1] > 0.0 ? 1.0 : 0.0; }, 2,
        bounds, 3, Sense::maximize);
    CHECK(order.best_angles == AngleSchedule({0.0, 0.0}, {0.0, kPi / 2}));

    CHECK_THROWS_AS(grid_search(butterfly, 1, bounds, 1, Sense::maximize), InvalidArgument);
    CHECK_THROWS_AS(grid_search(butterfly, 4, bounds, 101, Sense::maximize), ResourceLimit);
    CHECK_THROWS_AS(grid_search(butterfly, 1, bounds, 101, Sense::maximize, 100), ResourceLimit);
}

TEST_CASE("grid then Nelder-Mead on the butterfly", "[optimizer]") {
    const AngleBounds bounds;
    // A 101-point grid misses the peak by about 2e-3 (curvature times the
    // half step); a 201-point grid is within 1e-3.
    const auto grid = grid_search(butterfly, 1, bounds, 101, Sense::maximize);
    const auto refined = nelder_mead(butterfly, grid.best_angles, bounds, Sense::maximize);
    CHECK(refined.best_value >= grid.best_value);
    CHECK(refined.best_value - grid.best_value < 2.5e-3);
    CHECK(refined.best_value == Approx(butterfly(refined.best_angles)).margin(1e-10));
    const auto fine = grid_search(butterfly, 1, bounds, 201, Sense::maximize);
    CHECK(refined.best_value - fine.best_value < 1e-3);
    const auto dense = grid_search(butterfly, 1, bounds, 2001, Sense::maximize);
    CHECK(std::abs(refined.best_value - dense.best_value) < 1e-5);

    // From a nearby start the local search lands on the same maximum.
    const AngleSchedule near({grid.best_angles.gammas()[0] + 0.05},
                            {grid.best_angles.betas()[0] - 0.03});
    const auto local = nelder_mead(butterfly, bounds.clamp(near), bounds, Sense::maximize);
    CHECK(std::abs(local.best_value - refined.best_value) < 1e-4);
}

// Expected to fail: the 101-point grid gap is about 2.1e-3.
TEST_CASE("101-point butterfly grid within 1e-3 of the refined optimum",
          "[optimizer][!shouldfail]") {
    const AngleBounds bounds;
    const auto grid = grid_search(butterfly, 1, bounds, 101, Sense::maximize);
    const auto refined = nelder_mead(butterfly, grid.best_angles, bounds, Sense::maximize);
    CHECK(refined.best_value - grid.best_value < 1e-3);
}

TEST_CASE("Nelder-Mead on a quadratic bowl", "[optimizer]") {
    const auto bowl = [](const AngleSchedule &a) {
        const double g = a.gammas()[0] - 1.0;
        const double b = a.betas()[0] - 1.0;
        return -(g * g) - b * b;
    };
    NelderMeadOptions opt;
    opt.max_iter = 200;
    opt.tol = 1e-16;
    const auto r = nelder_mead(bowl, AngleSchedule({3.0}, {2.5}), AngleBounds{}, Sense::maximize, opt);
    CHECK(std::abs(r.best_angles.gammas()[0] - 1.0) < 1e-6);
    CHECK(std::abs(r.best_angles.betas()[0] - 1.0) < 1e-6);
    CHECK(r.trace.size() <= 200);
    for (std::size_t i = 1; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].value >= r.trace[i - 1].value);
    }
}

TEST_CASE("Nelder-Mead clamps to the bounds", "[optimizer]") {
    // Unbounded growth in gamma: the optimum sits on the upper edge.
    const auto ramp = [](const AngleSchedule &a) { return a.gammas()[0] - (a.betas()[0] - 1) * (a.betas()[0] - 1); };
    const AngleBounds bounds;
    const auto r = nelder_mead(ramp, AngleSchedule({5.0}, {0.5}), bounds, Sense::maximize);
    CHECK(within(r.best_angles, bounds));
    CHECK(r.best_angles.gammas()[0] == Approx(2 * kPi).margin(1e-6));
}

TEST_CASE("Nelder-Mead errors", "[optimizer]") {
    const AngleBounds bounds;
    CHECK_THROWS_AS(nelder_mead(butterfly, AngleSchedule({7.0}, {0.1}), bounds, Sense::maximize),
                    InvalidArgument);
    const auto bad = [](const AngleSchedule &a) {
        return a.gammas()[0] > 1.0 ? std::numeric_limits<double>::quiet_NaN() : a.gammas()[0];
    };
    try {
        (void)nelder_mead(bad, AngleSchedule({0.9}, {0.1}), bounds, Sense::maximize);
        FAIL("expected a numeric error");
    } catch (const NumericError &e) {
        REQUIRE(e.angles().size() == 2);
        CHECK(e.angles()[0] > 1.0);
    }
}

TEST_CASE("multi_start", "[optimizer]") {
    const AngleBounds bounds;
    const auto a = multi_start(butterfly, 1, bounds, 1, 7, Sense::maximize);
    const auto b = multi_start(butterfly, 1, bounds, 1, 7, Sense::maximize);
    CHECK(a.best_angles == b.best_angles);
    CHECK(a.best_value == b.best_value);
    CHECK(a.evaluations == b.evaluations);

    const auto coarse = grid_search(butterfly, 1, bounds, 11, Sense::maximize);
    const auto many = multi_start(butterfly, 1, bounds, 20, 0, Sense::maximize);
    CHECK(many.best_value >= coarse.best_value);
    CHECK(within(many.best_angles, bounds));
    CHECK(many.evaluations > coarse.evaluations);

    const auto fine = grid_search(moser, 1, bounds, 201, Sense::maximize);
    const auto ms = multi_start(moser, 1, bounds, 20, 0, Sense::maximize);
    CHECK(ms.best_value >= fine.best_value - 1e-4);
    CHECK(ms.best_value <= fine.best_value + 1e-3);

    CHECK_THROWS_AS(multi_start(butterfly, 1, bounds, 0, 0, Sense::maximize), InvalidArgument);
}

TEST_CASE("multi_start at depth 2 stays affordable", "[optimizer]") {
    const auto two_layer = [](const AngleSchedule &a) {
        return std::sin(a.gammas()[0]) * std::cos(a.gammas()[1]) + std::sin(2 * a.betas()[0]) - a.betas()[1];
    };
    const auto r = multi_start(two_layer, 2, AngleBounds{}, 3, 1, Sense::maximize);
    CHECK(r.best_value == Approx(2.0).margin(1e-6));
}
