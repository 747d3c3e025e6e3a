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

#include "noisyqaoa/device.hpp"
#include "noisyqaoa/optimizer.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace noisyqaoa {

enum class ExperimentKind { FomTable, T1Sweep, T2Sweep, Ge1Sweep, Ge2Sweep, Landscape, Motivation, LatencyReport };

/// Which noise sources are switched on for a run.
enum class NoiseSeries { Pure, GE, T1, T2, Combined };

std::string to_string(ExperimentKind kind);
std::string to_string(NoiseSeries series);
ExperimentKind parse_experiment_kind(std::string_view name);
/// Accepts PURE, GE, T1, T2, COMBINED (case-insensitive).
NoiseSeries parse_noise_series(std::string_view name);
NoiseToggles toggles_for(NoiseSeries series);

bool is_sweep(ExperimentKind kind);
/// T1 {0.5..6}, T2 {0.5..8}, GE {0.25..1}; {1} for everything else.
std::vector<double> default_multipliers(ExperimentKind kind);
std::vector<NoiseSeries> default_series(ExperimentKind kind);
/// `device` with the parameter swept by `kind` scaled by `multiplier`.
DeviceModel scaled_device(const DeviceModel& device, ExperimentKind kind, double multiplier);

/// Seed of the cell at `index`, a SplitMix64 hash of (base, index).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct ExperimentSpec {
    ExperimentKind kind = ExperimentKind::FomTable;
    /// Built-in names or edge-list paths.
    std::vector<std::string> graphs = {"6n-yutsis"};
    int p_min = 1;
    int p_max = 4;
    /// Empty selects default_series(kind).
    std::vector<NoiseSeries> series;
    /// Empty selects default_multipliers(kind).
    std::vector<double> multipliers;
    /// Grid points per axis (landscape) or theta samples (motivation);
    /// 0 selects 50 and 100 respectively.
    std::size_t resolution = 0;
    std::uint64_t seed = 1;
    DeviceModel device;
    /// Budget and hyperparameters; the seed field is ignored, every cell
    /// gets derive_seed(seed, cell).
    DEConfig optimizer;
    /// Threads over independent cells. Output does not depend on it.
    unsigned workers = 1;
    /// Optional progress sink, called from worker threads.
    std::function<void(const std::string&)> progress;

    std::vector<NoiseSeries> effective_series() const;
    std::vector<double> effective_multipliers() const;
    std::size_t effective_resolution() const;
    void validate() const;
};

struct ResultRow {
    std::string experiment_id;
    std::string graph;
    int p = 1;
    std::string series;
    double multiplier = 1.0;
    std::vector<double> best_gammas;
    std::vector<double> best_betas;
    double expectation = 0.0;
    double c_max = 0.0;
    double fom = 0.0;
    std::int64_t latency_ns = 0;
    std::int64_t chet_ns = 0;
    double chet_over_t1 = 0.0;
    double chet_over_t2 = 0.0;
    std::uint64_t seed = 0;
    std::size_t evaluations = 0;
};

struct LandscapeRow {
    std::string series;
    double gamma = 0.0;
    double beta = 0.0;
    double expectation = 0.0;
};

struct MotivationRow {
    std::string series;
    double theta = 0.0;
    double expectation = 0.0;
};

struct LatencyRow {
    std::string graph;
    int p = 1;
    std::size_t n_edges = 0;
    std::int64_t latency_ns = 0;
    std::int64_t chet_ns = 0;
    double chet_over_t1 = 0.0;
    double chet_over_t2 = 0.0;
    double cost_fidelity_estimate = 0.0;
};

inline constexpr std::string_view kResultHeader =
    "experiment_id,graph,p,series,multiplier,best_gammas,best_betas,expectation,c_max,fom,latency_ns,chet_ns,"
    "chet_over_t1,chet_over_t2,seed,evaluations";
inline constexpr std::string_view kLandscapeHeader = "series,gamma,beta,expectation";
inline constexpr std::string_view kMotivationHeader = "series,theta,expectation";
inline constexpr std::string_view kLatencyHeader =
    "graph,p,n_edges,latency_ns,chet_ns,chet_over_t1,chet_over_t2,cost_fidelity_estimate";

/// graph x series x p, one DE run per cell at the unscaled device.
std::vector<ResultRow> run_fom_table(const ExperimentSpec& spec);
/// graph x multiplier x series x p with the swept parameter scaled.
std::vector<ResultRow> run_multiplier_sweep(const ExperimentSpec& spec);
/// p = 1 grid over gamma in [0, 2pi], beta in [0, pi] per series.
std::vector<LandscapeRow> run_landscape(const ExperimentSpec& spec);
/// <Z> after RY(theta) on one qubit, theta sampled evenly over [0, 2pi].
std::vector<MotivationRow> run_motivation(const ExperimentSpec& spec);
std::vector<LatencyRow> run_latency_report(const ExperimentSpec& spec);

/// '#' metadata lines, header, rows. Doubles use shortest round-trip form.
std::string results_to_csv(const std::vector<ResultRow>& rows, const ExperimentSpec& spec);
std::string landscape_to_csv(const std::vector<LandscapeRow>& rows, const ExperimentSpec& spec);
std::string motivation_to_csv(const std::vector<MotivationRow>& rows, const ExperimentSpec& spec);
std::string latency_to_csv(const std::vector<LatencyRow>& rows, const ExperimentSpec& spec);

/// Runs the experiment named by spec.kind and renders its CSV.
std::string run_experiment(const ExperimentSpec& spec);

/// Reads ResultRow CSV back (comment lines skipped); for checking output.
std::vector<ResultRow> parse_results_csv(std::string_view text);

}  // namespace noisyqaoa
