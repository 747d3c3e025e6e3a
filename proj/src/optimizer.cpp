// Copyright 2026 The noisyqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "noisyqaoa/optimizer.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace noisyqaoa {

namespace {

/// Evaluates f on every point, splitting the range over `workers` threads.
/// Each slot is written by exactly one thread.
void evaluate_all(const Objective& f, const std::vector<std::vector<double>>& points, std::vector<double>& out,
                  unsigned workers) {
    out.resize(points.size());
    const std::size_t n = points.size();
    const std::size_t w = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(n, 1));
    if (w <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            out[i] = f(points[i]);
        }
        return;
    }
    std::vector<std::exception_ptr> errors(w);
    {
        std::vector<std::jthread> pool;
        for (std::size_t t = 0; t < w; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < n; i += w) {
                        out[i] = f(points[i]);
                    }
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

double population_spread(const std::vector<double>& values, double& mean) {
    mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double var = 0.0;
    for (double v : values) var += (v - mean) * (v - mean);
    return std::sqrt(var / static_cast<double>(values.size()));
}

}  // namespace

bool Bounds::contains(std::span<const double> x) const {
    if (x.size() != ranges.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= ranges[i].first && x[i] <= ranges[i].second)) return false;
    }
    return true;
}

void Bounds::validate() const {
    if (ranges.empty()) {
        throw std::invalid_argument("bounds: at least one dimension required");
    }
    for (const auto& [lo, hi] : ranges) {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
            throw std::invalid_argument(fmt::format("bounds: invalid range [{}, {}]", lo, hi));
        }
    }
}

Bounds qaoa_bounds(int p) {
    if (p < 1) {
        throw std::invalid_argument("qaoa_bounds: p must be >= 1");
    }
    Bounds b;
    for (int i = 0; i < p; ++i) b.ranges.emplace_back(0.0, 2.0 * std::numbers::pi);
    for (int i = 0; i < p; ++i) b.ranges.emplace_back(0.0, std::numbers::pi);
    return b;
}

std::size_t DEConfig::population_for(std::size_t dims) const {
    return population != 0 ? population : std::max<std::size_t>(20, 15 * dims);
}

void DEConfig::validate(std::size_t dims) const {
    if (population_for(dims) < 4) {
        throw std::invalid_argument("DE: population must be >= 4");
    }
    if (!(crossover >= 0.0 && crossover <= 1.0)) {
        throw std::invalid_argument("DE: crossover rate must lie in [0, 1]");
    }
    if (!(f_min >= 0.0 && f_min <= f_max && f_max <= 2.0)) {
        throw std::invalid_argument("DE: differential weight range must satisfy 0 <= f_min <= f_max <= 2");
    }
    if (max_generations < 0) {
        throw std::invalid_argument("DE: max_generations must be >= 0");
    }
    if (!(tolerance >= 0.0)) {
        throw std::invalid_argument("DE: tolerance must be >= 0");
    }
    if (initial && initial->size() != dims) {
        throw std::invalid_argument("DE: initial point has wrong dimension");
    }
}

std::string DEConfig::describe(std::size_t dims) const {
    return fmt::format("strategy=rand1bin population={} F=[{},{}] CR={} max_generations={} tol={} seed={}",
                       population_for(dims), f_min, f_max, crossover, max_generations, tolerance, seed);
}

OptResult differential_evolution(const Objective& objective, const Bounds& bounds, const DEConfig& config) {
    bounds.validate();
    const std::size_t dims = bounds.size();
    config.validate(dims);
    if (config.initial && !bounds.contains(*config.initial)) {
        throw std::invalid_argument("DE: initial point lies outside the bounds");
    }
    const std::size_t np = config.population_for(dims);

    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    auto sample_coord = [&](std::size_t j) {
        const auto [lo, hi] = bounds.ranges[j];
        return lo + (hi - lo) * unit(rng);
    };

    std::vector<std::vector<double>> pop(np, std::vector<double>(dims));
    for (auto& x : pop) {
        for (std::size_t j = 0; j < dims; ++j) x[j] = sample_coord(j);
    }
    if (config.initial) {
        pop[0] = *config.initial;
    }
    std::vector<double> values;
    evaluate_all(objective, pop, values, config.workers);

    OptResult result;
    result.evaluations = np;
    auto best_it = std::min_element(values.begin(), values.end());
    std::size_t best = static_cast<std::size_t>(best_it - values.begin());
    result.history.push_back(values[best]);

    std::uniform_int_distribution<std::size_t> pick(0, np - 1);
    std::uniform_int_distribution<std::size_t> pick_dim(0, dims - 1);
    std::uniform_real_distribution<double> weight(config.f_min, config.f_max);
    std::vector<std::vector<double>> trials(np, std::vector<double>(dims));
    std::vector<double> trial_values;

    for (int gen = 0; gen < config.max_generations; ++gen) {
        double mean = 0.0;
        if (population_spread(values, mean) <= config.tolerance * std::abs(mean)) {
            result.converged = true;
            break;
        }
        const double f = weight(rng);
        for (std::size_t i = 0; i < np; ++i) {
            std::size_t a, b, c;
            do { a = pick(rng); } while (a == i);
            do { b = pick(rng); } while (b == i || b == a);
            do { c = pick(rng); } while (c == i || c == a || c == b);
            const std::size_t forced = pick_dim(rng);
            auto& t = trials[i];
            for (std::size_t j = 0; j < dims; ++j) {
                if (j == forced || unit(rng) < config.crossover) {
                    t[j] = pop[a][j] + f * (pop[b][j] - pop[c][j]);
                    if (t[j] < bounds.ranges[j].first || t[j] > bounds.ranges[j].second) {
                        t[j] = sample_coord(j);
                    }
                } else {
                    t[j] = pop[i][j];
                }
            }
        }
        evaluate_all(objective, trials, trial_values, config.workers);
        result.evaluations += np;
        for (std::size_t i = 0; i < np; ++i) {
            if (trial_values[i] <= values[i]) {
                pop[i] = trials[i];
                values[i] = trial_values[i];
                if (values[i] < values[best]) best = i;
            }
        }
        result.generations = gen + 1;
        result.history.push_back(values[best]);
    }
    result.best_params = pop[best];
    result.best_value = values[best];
    return result;
}

std::vector<double> Landscape::point(std::size_t flat_index) const {
    std::vector<double> x(axes.size());
    for (std::size_t d = axes.size(); d-- > 0;) {
        const std::size_t r = axes[d].size();
        x[d] = axes[d][flat_index % r];
        flat_index /= r;
    }
    return x;
}

Landscape grid_scan(const Objective& objective, const Bounds& bounds, std::size_t resolution, unsigned workers) {
    bounds.validate();
    if (resolution < 2) {
        throw std::invalid_argument("grid_scan: resolution must be >= 2");
    }
    if (bounds.size() > kMaxGridDimensions) {
        throw std::invalid_argument(
            fmt::format("grid_scan: at most {} dimensions, got {}", kMaxGridDimensions, bounds.size()));
    }
    Landscape land;
    for (const auto& [lo, hi] : bounds.ranges) {
        std::vector<double> axis(resolution);
        for (std::size_t k = 0; k < resolution; ++k) {
            axis[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(resolution - 1);
        }
        axis.back() = hi;
        land.axes.push_back(std::move(axis));
    }
    std::size_t total = 1;
    for (std::size_t d = 0; d < bounds.size(); ++d) total *= resolution;
    std::vector<std::vector<double>> points(total);
    for (std::size_t i = 0; i < total; ++i) points[i] = land.point(i);
    evaluate_all(objective, points, land.values, workers);
    land.best_index = static_cast<std::size_t>(std::min_element(land.values.begin(), land.values.end()) -
                                               land.values.begin());
    land.best_value = land.values[land.best_index];
    land.best_point = points[land.best_index];
    return land;
}

}  // namespace noisyqaoa
