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

#include "qaoa/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <random>

#include "qaoa/error.hpp"

namespace qaoa {

namespace {

using Point = std::vector<double>;

double clamp_to(double v, const Interval &iv) {
    return std::clamp(v, iv.lo, iv.hi);
}

const Interval &axis(const AngleBounds &b, std::size_t p, std::size_t k) {
    return k < p ? b.gamma : b.beta;
}

void clamp_point(Point &x, const AngleBounds &b) {
    const auto p = x.size() / 2;
    for (std::size_t k = 0; k < x.size(); ++k) {
        x[k] = clamp_to(x[k], axis(b, p, k));
    }
}

/// Wraps the objective so that smaller is better and non-finite values throw.
class MinimisedObjective {
  public:
    MinimisedObjective(const Objective &f, Sense sense)
        : f_(f), sign_(sense == Sense::maximize ? -1.0 : 1.0) {}

    double operator()(const Point &x) {
        ++evaluations_;
        const double v = f_(AngleSchedule::from_flat(x));
        if (!std::isfinite(v)) {
            throw NumericError("objective returned a non-finite value", x);
        }
        return sign_ * v;
    }

    [[nodiscard]] double original(double minimised) const {
        return sign_ * minimised;
    }
    [[nodiscard]] std::size_t evaluations() const { return evaluations_; }

  private:
    const Objective &f_;
    double sign_;
    std::size_t evaluations_ = 0;
};

bool better(double a, double b, Sense sense) {
    return sense == Sense::maximize ? a > b : a < b;
}

} // namespace

void AngleBounds::validate() const {
    for (const auto &iv : {gamma, beta}) {
        if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi) {
            throw InvalidArgument("angle bounds must be finite, nonempty "
                                  "intervals");
        }
    }
}

bool AngleBounds::contains(const AngleSchedule &a) const {
    auto in = [](double v, const Interval &iv) {
        return v >= iv.lo && v <= iv.hi;
    };
    for (std::size_t k = 0; k < a.p(); ++k) {
        if (!in(a.gammas()[k], gamma) || !in(a.betas()[k], beta)) {
            return false;
        }
    }
    return true;
}

AngleSchedule AngleBounds::clamp(const AngleSchedule &a) const {
    auto x = a.flatten();
    clamp_point(x, *this);
    return AngleSchedule::from_flat(x);
}

OptimizationResult grid_search(const Objective &objective, std::size_t p,
                               const AngleBounds &bounds, std::size_t resolution,
                               Sense sense, std::uint64_t budget) {
    bounds.validate();
    if (p == 0) {
        throw InvalidArgument("depth p must be positive");
    }
    if (resolution < 2) {
        throw InvalidArgument("grid resolution must be at least 2");
    }
    const std::size_t dims = 2 * p;
    std::uint64_t points = 1;
    for (std::size_t k = 0; k < dims; ++k) {
        if (points > budget / resolution) {
            throw ResourceLimit("angle grid exceeds the evaluation budget of " +
                                std::to_string(budget));
        }
        points *= resolution;
    }
    if (points > budget / p) {
        throw ResourceLimit("angle grid exceeds the evaluation budget of " +
                            std::to_string(budget));
    }

    auto decode = [&](std::uint64_t idx) {
        Point x(dims);
        for (std::size_t k = dims; k-- > 0;) {
            const auto step = static_cast<double>(idx % resolution);
            idx /= resolution;
            const auto &iv = axis(bounds, p, k);
            x[k] = iv.lo + (iv.hi - iv.lo) * step /
                               static_cast<double>(resolution - 1);
        }
        return x;
    };

    std::vector<double> values(points);
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(points);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            const auto x = decode(static_cast<std::uint64_t>(i));
            const double v = objective(AngleSchedule::from_flat(x));
            if (!std::isfinite(v)) {
                throw NumericError("objective returned a non-finite value", x);
            }
            values[static_cast<std::size_t>(i)] = v;
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        if (better(values[i], values[best], sense)) {
            best = i;
        }
    }
    OptimizationResult r;
    r.best_angles = AngleSchedule::from_flat(decode(best));
    r.best_value = values[best];
    r.evaluations = points;
    return r;
}

OptimizationResult nelder_mead(const Objective &objective,
                               const AngleSchedule &start,
                               const AngleBounds &bounds, Sense sense,
                               const NelderMeadOptions &options) {
    bounds.validate();
    if (!bounds.contains(start)) {
        throw InvalidArgument("Nelder-Mead start lies outside the bounds");
    }
    constexpr double kReflect = 1.0;
    constexpr double kExpand = 2.0;
    constexpr double kContract = 0.5;
    constexpr double kShrink = 0.5;

    MinimisedObjective f(objective, sense);
    const std::size_t dims = 2 * start.p();
    const std::size_t p = start.p();

    std::vector<Point> simplex{start.flatten()};
    for (std::size_t k = 0; k < dims; ++k) {
        const auto &iv = axis(bounds, p, k);
        Point x = simplex[0];
        const double step = options.initial_step * (iv.hi - iv.lo);
        x[k] = x[k] + step <= iv.hi ? x[k] + step : x[k] - step;
        x[k] = clamp_to(x[k], iv);
        simplex.push_back(std::move(x));
    }
    std::vector<double> fv;
    fv.reserve(simplex.size());
    for (const auto &x : simplex) {
        fv.push_back(f(x));
    }

    std::vector<std::size_t> order(simplex.size());
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return fv[a] < fv[b]; });
        std::vector<Point> s2;
        std::vector<double> f2;
        for (auto i : order) {
            s2.push_back(std::move(simplex[i]));
            f2.push_back(fv[i]);
        }
        simplex = std::move(s2);
        fv = std::move(f2);
    };

    auto affine = [&](const Point &a, const Point &b, double t) {
        // a + t (b - a), clamped
        Point x(dims);
        for (std::size_t k = 0; k < dims; ++k) {
            x[k] = a[k] + t * (b[k] - a[k]);
        }
        clamp_point(x, bounds);
        return x;
    };

    OptimizationResult r;
    sort_simplex();
    for (std::size_t iter = 0; iter < options.max_iter; ++iter) {
        if (fv.back() - fv.front() < options.tol) {
            break;
        }
        const std::size_t worst = dims;
        Point centroid(dims, 0.0);
        for (std::size_t i = 0; i < worst; ++i) {
            for (std::size_t k = 0; k < dims; ++k) {
                centroid[k] += simplex[i][k] / static_cast<double>(worst);
            }
        }

        const Point xr = affine(centroid, simplex[worst], -kReflect);
        const double fr = f(xr);
        if (fr < fv.front()) {
            const Point xe = affine(centroid, xr, kExpand);
            const double fe = f(xe);
            if (fe < fr) {
                simplex[worst] = xe;
                fv[worst] = fe;
            } else {
                simplex[worst] = xr;
                fv[worst] = fr;
            }
        } else if (fr < fv[worst - 1]) {
            simplex[worst] = xr;
            fv[worst] = fr;
        } else {
            const bool outside = fr < fv[worst];
            const Point xc = outside ? affine(centroid, xr, kContract)
                                     : affine(centroid, simplex[worst], kContract);
            const double fc = f(xc);
            if (outside ? fc <= fr : fc < fv[worst]) {
                simplex[worst] = xc;
                fv[worst] = fc;
            } else {
                for (std::size_t i = 1; i < simplex.size(); ++i) {
                    simplex[i] = affine(simplex[0], simplex[i], kShrink);
                    fv[i] = f(simplex[i]);
                }
            }
        }
        sort_simplex();
        r.trace.push_back(
            {AngleSchedule::from_flat(simplex.front()), f.original(fv.front())});
    }

    r.best_angles = AngleSchedule::from_flat(simplex.front());
    r.best_value = f.original(fv.front());
    r.evaluations = f.evaluations();
    return r;
}

OptimizationResult multi_start(const Objective &objective, std::size_t p,
                               const AngleBounds &bounds, std::size_t n_starts,
                               std::uint64_t seed, Sense sense,
                               const MultiStartOptions &options) {
    if (n_starts == 0) {
        throw InvalidArgument("multi-start needs at least one start");
    }
    std::size_t res = std::max<std::size_t>(options.coarse_resolution, 2);
    auto grid_points = [&](std::size_t r) {
        double pts = std::pow(static_cast<double>(r), 2.0 * static_cast<double>(p));
        return pts;
    };
    while (res > 2 &&
           grid_points(res) > static_cast<double>(options.max_coarse_points)) {
        --res;
    }
    const auto coarse = grid_search(objective, p, bounds, res, sense);

    std::mt19937_64 rng(seed);
    auto uniform = [&](const Interval &iv) {
        // Strictly inside (0, 1).
        const double u = (static_cast<double>(rng() >> 11U) + 0.5) * 0x1.0p-53;
        return iv.lo + (iv.hi - iv.lo) * u;
    };
    std::vector<AngleSchedule> starts{coarse.best_angles};
    for (std::size_t s = 0; s < n_starts; ++s) {
        std::vector<double> g(p);
        std::vector<double> b(p);
        for (auto &x : g) {
            x = uniform(bounds.gamma);
        }
        for (auto &x : b) {
            x = uniform(bounds.beta);
        }
        starts.emplace_back(std::move(g), std::move(b));
    }

    std::vector<OptimizationResult> runs(starts.size());
    std::exception_ptr failure;
    const auto count = static_cast<std::int64_t>(starts.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        try {
            runs[static_cast<std::size_t>(i)] =
                nelder_mead(objective, starts[static_cast<std::size_t>(i)],
                            bounds, sense, options.local);
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::size_t best = 0;
    std::size_t evaluations = coarse.evaluations;
    for (std::size_t i = 0; i < runs.size(); ++i) {
        evaluations += runs[i].evaluations;
        if (better(runs[i].best_value, runs[best].best_value, sense)) {
            best = i;
        }
    }
    auto r = std::move(runs[best]);
    r.evaluations = evaluations;
    return r;
}

} // namespace qaoa
