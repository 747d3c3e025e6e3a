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


// Experiment driver: one subcommand per experiment kind, CSV on stdout or
// --out.

#include "noisyqaoa/experiments.hpp"
#include "noisyqaoa/graph.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

using namespace noisyqaoa;

namespace {

struct Options {
    std::vector<std::string> graphs;
    std::optional<int> p_min;
    std::optional<int> p_max;
    std::vector<std::string> series;
    std::vector<double> multipliers;
    std::size_t resolution = 0;
    std::uint64_t seed = 1;
    std::string device_config;
    std::string out = "-";
    std::size_t population = 0;
    int generations = 200;
    double tolerance = 1e-6;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    bool quiet = false;
};

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--seed", o.seed, "Base seed; every cell derives its own")->capture_default_str();
    cmd->add_option("--device-config", o.device_config, "JSON device model (defaults to the built-in model)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out,-o", o.out, "Output CSV path, '-' for stdout")->capture_default_str();
    cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    cmd->add_flag("--quiet,-q", o.quiet, "No progress on stderr");
}

void add_graph_and_depth(CLI::App* cmd, Options& o) {
    cmd->add_option("--graph,-g", o.graphs, "Built-in graph name or edge-list file; repeatable or comma-separated")
        ->delimiter(',');
    cmd->add_option("--p-min", o.p_min, "Smallest QAOA depth (default 1)");
    cmd->add_option("--p-max", o.p_max, "Largest QAOA depth (default 4)");
}

void add_series(CLI::App* cmd, Options& o) {
    cmd->add_option("--series,-s", o.series, "Noise series: PURE, GE, T1, T2, COMBINED (comma-separated)")
        ->delimiter(',');
}

void add_optimizer(CLI::App* cmd, Options& o) {
    cmd->add_option("--population", o.population, "DE population, 0 = max(20, 15*D)")->capture_default_str();
    cmd->add_option("--generations", o.generations, "DE generation cap")->capture_default_str();
    cmd->add_option("--tolerance", o.tolerance, "DE relative spread for convergence")->capture_default_str();
}

ExperimentSpec build_spec(ExperimentKind kind, const Options& o) {
    ExperimentSpec spec;
    spec.kind = kind;
    if (!o.graphs.empty()) {
        spec.graphs = o.graphs;
    } else if (kind == ExperimentKind::Landscape) {
        spec.graphs = {"4n-yutsis"};
    } else if (kind == ExperimentKind::LatencyReport) {
        spec.graphs = builtin_graph_names();
    }
    const int default_p_max = kind == ExperimentKind::Landscape ? 1 : 4;
    spec.p_min = o.p_min.value_or(1);
    spec.p_max = o.p_max.value_or(std::max(default_p_max, spec.p_min));
    for (const auto& s : o.series) {
        spec.series.push_back(parse_noise_series(s));
    }
    spec.multipliers = o.multipliers;
    spec.resolution = o.resolution;
    spec.seed = o.seed;
    if (!o.device_config.empty()) {
        spec.device = load_device_config(o.device_config);
    }
    spec.optimizer.population = o.population;
    spec.optimizer.max_generations = o.generations;
    spec.optimizer.tolerance = o.tolerance;
    spec.workers = o.workers;
    if (!o.quiet) {
        auto mu = std::make_shared<std::mutex>();
        spec.progress = [mu](const std::string& msg) {
            std::lock_guard lock(*mu);
            std::cerr << msg << '\n';
        };
    }
    return spec;
}

void write_output(const std::string& path, const std::string& csv) {
    if (path == "-") {
        std::cout << csv;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw std::runtime_error(fmt::format("cannot open '{}' for writing", path));
    }
    f << csv;
    if (!f.flush()) {
        throw std::runtime_error(fmt::format("failed writing '{}'", path));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Noisy QAOA MaxCut experiments on a density-matrix simulator"};
    app.require_subcommand(1);
    Options o;

    struct Entry {
        ExperimentKind kind;
        const char* help;
    };
    const Entry entries[] = {
        {ExperimentKind::FomTable, "FOM (1-r) per graph, depth and noise series"},
        {ExperimentKind::T1Sweep, "Relaxation-time multiplier sweep"},
        {ExperimentKind::T2Sweep, "Dephasing-time multiplier sweep"},
        {ExperimentKind::Ge1Sweep, "Single-qubit gate-error multiplier sweep"},
        {ExperimentKind::Ge2Sweep, "Two-qubit gate-error multiplier sweep"},
        {ExperimentKind::Landscape, "Expectation over the p=1 (gamma, beta) grid"},
        {ExperimentKind::Motivation, "<Z> after RY(theta) on one qubit, noiseless and noisy"},
        {ExperimentKind::LatencyReport, "Circuit latency, CHET and cost-layer fidelity estimate"},
    };
    std::vector<std::pair<CLI::App*, ExperimentKind>> commands;
    for (const auto& e : entries) {
        CLI::App* cmd = app.add_subcommand(to_string(e.kind), e.help);
        add_common(cmd, o);
        switch (e.kind) {
            case ExperimentKind::Motivation:
                add_series(cmd, o);
                cmd->add_option("--resolution", o.resolution, "Number of theta samples (default 100)");
                break;
            case ExperimentKind::Landscape:
                add_graph_and_depth(cmd, o);
                add_series(cmd, o);
                cmd->add_option("--resolution", o.resolution, "Grid points per axis (default 50)");
                break;
            case ExperimentKind::LatencyReport: add_graph_and_depth(cmd, o); break;
            default:
                add_graph_and_depth(cmd, o);
                add_series(cmd, o);
                add_optimizer(cmd, o);
                if (is_sweep(e.kind)) {
                    cmd->add_option("--multipliers,-m", o.multipliers, "Multipliers (comma-separated)")
                        ->delimiter(',');
                }
                break;
        }
        commands.emplace_back(cmd, e.kind);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        for (const auto& [cmd, kind] : commands) {
            if (cmd->parsed()) {
                const ExperimentSpec spec = build_spec(kind, o);
                spec.validate();
                write_output(o.out, run_experiment(spec));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "noisyqaoa: error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
