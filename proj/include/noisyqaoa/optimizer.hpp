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

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace noisyqaoa {

using Objective = std::function<double(std::span<const double>)>;

/// Box constraints, one (low, high) pair per dimension.
struct Bounds {
    std::vector<std::pair<double, double>> ranges;

    std::size_t size() const { return ranges.size(); }
    bool contains(std::span<const double> x) const;
    void validate() const;
};

/// gamma_1..gamma_p in [0, 2pi] followed by beta_1..beta_p in [0, pi].
Bounds qaoa_bounds(int p);

/// rand/1/bin differential evolution settings.
struct DEConfig {
    /// 0 selects max(20, 15 * dimensions).
    std::size_t population = 0;
    /// The differential weight is redrawn uniformly from [f_min, f_max]
    /// once per generation.
    double f_min = 0.5;
    double f_max = 1.0;
    double crossover = 0.7;
    int max_generations = 200;
    /// Stop once stddev(population values) <= tolerance * |mean|.
    double tolerance = 1e-6;
    std::uint64_t seed = 0;
    /// Threads evaluating a generation; results do not depend on it.
    unsigned workers = 1;
    /// Optional starting point placed in the initial population.
    std::optional<std::vector<double>> initial;

    std::size_t population_for(std::size_t dims) const;
    void validate(std::size_t dims) const;
    std::string describe(std::size_t dims) const;
};

struct OptResult {
    std::vector<double> best_params;
    double best_value = 0.0;
    /// Best value after initialization and after each generation.
    std::vector<double> history;
    std::size_t evaluations = 0;
    int generations = 0;
    bool converged = false;
};

/// Minimizes `objective` over `bounds`.
OptResult differential_evolution(const Objective& objective, const Bounds& bounds, const DEConfig& config);

struct Landscape {
    /// Grid coordinates per dimension, endpoints included.
    std::vector<std::vector<double>> axes;
    /// Row-major values; the last dimension varies fastest.
    std::vector<double> values;
    std::vector<double> best_point;
    double best_value = 0.0;
    std::size_t best_index = 0;

    std::vector<double> point(std::size_t flat_index) const;
};

inline constexpr std::size_t kMaxGridDimensions = 4;

/// Evaluates `objective` at every point of a `resolution`^D grid and keeps
/// the minimum (first one on ties).
Landscape grid_scan(const Objective& objective, const Bounds& bounds, std::size_t resolution, unsigned workers = 1);

}  // namespace noisyqaoa
