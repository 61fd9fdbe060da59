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
#include <functional>
#include <numbers>
#include <vector>

#include "qaoa/circuit.hpp"
#include "qaoa/problem.hpp"

namespace qaoa {

/// Any pure AngleSchedule -> value map (F, Gibbs, a closed form, ...).
/// grid_search and multi_start may call it from several threads at once.
using Objective = std::function<double(const AngleSchedule &)>;

struct Interval {
    double lo;
    double hi;
};

/// Per-layer search box, reused for every layer when p > 1.
struct AngleBounds {
    Interval gamma{0.0, 2.0 * std::numbers::pi};
    Interval beta{0.0, std::numbers::pi};

    void validate() const;
    [[nodiscard]] bool contains(const AngleSchedule &a) const;
    [[nodiscard]] AngleSchedule clamp(const AngleSchedule &a) const;
};

struct TracePoint {
    AngleSchedule angles;
    double value;
};

struct OptimizationResult {
    AngleSchedule best_angles;
    double best_value = 0.0;
    std::size_t evaluations = 0;
    std::vector<TracePoint> trace;
};

inline constexpr std::uint64_t kDefaultGridBudget = 10'000'000;

/// Evaluates the Cartesian grid with `resolution` points per angle
/// (endpoints included). Grid coordinates are ordered (gamma_1..gamma_p,
/// beta_1..beta_p) with gamma_1 varying slowest; ties go to the first point
/// in that order. Throws ResourceLimit when p * resolution^(2p) > budget.
OptimizationResult grid_search(const Objective &objective, std::size_t p,
                               const AngleBounds &bounds, std::size_t resolution,
                               Sense sense,
                               std::uint64_t budget = kDefaultGridBudget);

struct NelderMeadOptions {
    double tol = 1e-10;
    std::size_t max_iter = 500;
    /// Initial simplex edge as a fraction of each axis' range.
    double initial_step = 0.1;
};

/// Downhill simplex with reflection 1, expansion 2, contraction 1/2 and
/// shrink 1/2. Proposals outside the bounds are clamped onto them. Stops when
/// the spread of vertex values drops below tol or after max_iter iterations.
/// `trace` holds the best vertex after every iteration.
OptimizationResult nelder_mead(const Objective &objective,
                               const AngleSchedule &start,
                               const AngleBounds &bounds, Sense sense,
                               const NelderMeadOptions &options = {});

struct MultiStartOptions {
    NelderMeadOptions local;
    /// Points per axis of the coarse seeding grid; lowered for large p so the
    /// grid stays under max_coarse_points.
    std::size_t coarse_resolution = 11;
    std::uint64_t max_coarse_points = 20'000;
};

/// Nelder-Mead from the coarse-grid winner and from n_starts uniform random
/// points drawn with mt19937_64(seed); returns the best run. Evaluation
/// counts include the coarse grid.
OptimizationResult multi_start(const Objective &objective, std::size_t p,
                               const AngleBounds &bounds, std::size_t n_starts,
                               std::uint64_t seed, Sense sense,
                               const MultiStartOptions &options = {});

} // namespace qaoa
