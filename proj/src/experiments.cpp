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


#include "noisyqaoa/experiments.hpp"

#include "noisyqaoa/graph.hpp"
#include "noisyqaoa/noise.hpp"
#include "noisyqaoa/qaoa.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace noisyqaoa {

using std::numbers::pi;

namespace {

constexpr int kMaxDepth = 16;

std::string upper(std::string_view s) {
    std::string out(s);
    for (auto& c : out) {
        c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
    return out;
}

// Runs body(0..n-1) on up to `workers` threads. The first exception wins and
// stops the remaining work.
template <typename Body>
void parallel_for(std::size_t n, unsigned workers, Body&& body) {
    const std::size_t threads = std::min<std::size_t>(std::max(1u, workers), n);
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= n) return;
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(error_mu);
                        if (!error) error = std::current_exception();
                        next.store(n);
                    }
                }
            });
        }
    }
    if (error) std::rethrow_exception(error);
}

std::string join(const std::vector<double>& xs, char sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += fmt::format("{}", xs[i]);
    }
    return out;
}

std::string join_series(const std::vector<NoiseSeries>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ';';
        out += to_string(xs[i]);
    }
    return out;
}

std::string optimizer_line(const DEConfig& c) {
    const std::string pop = c.population == 0 ? std::string("max(20,15*D)") : fmt::format("{}", c.population);
    return fmt::format(
        "# optimizer=differential_evolution strategy=rand1bin population={} F=[{},{}] CR={} max_generations={} "
        "tol={} seeds=derived(base,cell)",
        pop, c.f_min, c.f_max, c.crossover, c.max_generations, c.tolerance);
}

std::string metadata(const ExperimentSpec& spec, bool with_optimizer) {
    std::string graphs;
    for (std::size_t i = 0; i < spec.graphs.size(); ++i) {
        if (i) graphs += ';';
        graphs += spec.graphs[i];
    }
    std::string out = fmt::format("# noisyqaoa {}\n", to_string(spec.kind));
    const std::string series = join_series(spec.effective_series());
    switch (spec.kind) {
        case ExperimentKind::Landscape:
            out += fmt::format("# graph={} p=1 series={} resolution={}\n", graphs, series, spec.effective_resolution());
            break;
        case ExperimentKind::Motivation:
            out += fmt::format("# series={} resolution={}\n", series, spec.effective_resolution());
            break;
        case ExperimentKind::LatencyReport:
            out += fmt::format("# graphs={} p={}..{}\n", graphs, spec.p_min, spec.p_max);
            break;
        default:
            out += fmt::format("# graphs={} p={}..{} series={} multipliers={} seed={}\n", graphs, spec.p_min,
                               spec.p_max, series, join(spec.effective_multipliers(), ';'), spec.seed);
            break;
    }
    if (with_optimizer) out += optimizer_line(spec.optimizer) + "\n";
    out += fmt::format("# device={}\n", to_json(spec.device));
    return out;
}

struct Cell {
    std::size_t graph = 0;
    double multiplier = 1.0;
    NoiseSeries series = NoiseSeries::Pure;
    int p = 1;
};

std::vector<ResultRow> run_cells(const ExperimentSpec& spec, const std::vector<double>& multipliers) {
    spec.validate();
    std::vector<MaxCutProblem> problems;
    for (const auto& ref : spec.graphs) {
        problems.emplace_back(resolve_graph(ref));
    }
    const auto series = spec.effective_series();
    std::vector<Cell> cells;
    for (std::size_t g = 0; g < problems.size(); ++g) {
        for (double m : multipliers) {
            for (auto s : series) {
                for (int p = spec.p_min; p <= spec.p_max; ++p) {
                    cells.push_back({g, m, s, p});
                }
            }
        }
    }

    std::vector<ResultRow> rows(cells.size());
    std::atomic<std::size_t> done{0};
    parallel_for(cells.size(), spec.workers, [&](std::size_t i) {
        const Cell& c = cells[i];
        const MaxCutProblem& problem = problems[c.graph];
        const DeviceModel device = scaled_device(spec.device, spec.kind, c.multiplier);
        const NoiseToggles toggles = toggles_for(c.series);

        DEConfig cfg = spec.optimizer;
        cfg.seed = derive_seed(spec.seed, i);
        cfg.workers = 1;
        const OptResult opt = differential_evolution(fom_objective(problem, device, toggles), qaoa_bounds(c.p), cfg);
        const QaoaParams best = QaoaParams::from_vector(opt.best_params);
        const EvalRecord rec = evaluate(problem, best, device, toggles);

        ResultRow& r = rows[i];
        r.experiment_id = fmt::format("{}-{:04}", to_string(spec.kind), i);
        r.graph = problem.graph.name();
        r.p = c.p;
        r.series = to_string(c.series);
        r.multiplier = c.multiplier;
        r.best_gammas = best.gammas;
        r.best_betas = best.betas;
        r.expectation = rec.expectation;
        r.c_max = problem.c_max;
        r.fom = rec.fom;
        r.latency_ns = rec.latency_ns;
        r.chet_ns = cost_hamiltonian_latency(problem.graph, device);
        r.chet_over_t1 = static_cast<double>(r.chet_ns) / device.t1_ns();
        r.chet_over_t2 = static_cast<double>(r.chet_ns) / device.t2_ns();
        r.seed = cfg.seed;
        r.evaluations = opt.evaluations;
        if (spec.progress) {
            spec.progress(fmt::format("[{}/{}] {} {} x{} p={} fom={:.4f} ({} evaluations)", done.fetch_add(1) + 1,
                                      cells.size(), r.graph, r.series, r.multiplier, r.p, r.fom, r.evaluations));
        }
    });
    return rows;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

template <typename T>
T parse_number(std::string_view s, std::string_view field) {
    T value{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument(fmt::format("CSV: bad {} value '{}'", field, s));
    }
    return value;
}

std::vector<double> parse_list(std::string_view s, std::string_view field) {
    std::vector<double> out;
    if (s.empty()) return out;
    for (auto part : split(s, ';')) {
        out.push_back(parse_number<double>(part, field));
    }
    return out;
}

}  // namespace

std::string to_string(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::FomTable: return "fom-table";
        case ExperimentKind::T1Sweep: return "t1-sweep";
        case ExperimentKind::T2Sweep: return "t2-sweep";
        case ExperimentKind::Ge1Sweep: return "ge1-sweep";
        case ExperimentKind::Ge2Sweep: return "ge2-sweep";
        case ExperimentKind::Landscape: return "landscape";
        case ExperimentKind::Motivation: return "motivation";
        case ExperimentKind::LatencyReport: return "latency-report";
    }
    return "?";
}

std::string to_string(NoiseSeries series) {
    switch (series) {
        case NoiseSeries::Pure: return "PURE";
        case NoiseSeries::GE: return "GE";
        case NoiseSeries::T1: return "T1";
        case NoiseSeries::T2: return "T2";
        case NoiseSeries::Combined: return "COMBINED";
    }
    return "?";
}

ExperimentKind parse_experiment_kind(std::string_view name) {
    for (auto k : {ExperimentKind::FomTable, ExperimentKind::T1Sweep, ExperimentKind::T2Sweep, ExperimentKind::Ge1Sweep,
                   ExperimentKind::Ge2Sweep, ExperimentKind::Landscape, ExperimentKind::Motivation,
                   ExperimentKind::LatencyReport}) {
        if (to_string(k) == name) return k;
    }
    throw std::invalid_argument(fmt::format("unknown experiment '{}'", name));
}

NoiseSeries parse_noise_series(std::string_view name) {
    const std::string u = upper(name);
    for (auto s : {NoiseSeries::Pure, NoiseSeries::GE, NoiseSeries::T1, NoiseSeries::T2, NoiseSeries::Combined}) {
        if (to_string(s) == u) return s;
    }
    throw std::invalid_argument(fmt::format("unknown noise series '{}' (expected PURE, GE, T1, T2 or COMBINED)", name));
}

NoiseToggles toggles_for(NoiseSeries series) {
    switch (series) {
        case NoiseSeries::Pure: return NoiseToggles::none();
        case NoiseSeries::GE: return {true, false, false};
        case NoiseSeries::T1: return {false, true, false};
        case NoiseSeries::T2: return {false, false, true};
        case NoiseSeries::Combined: return NoiseToggles::all();
    }
    return NoiseToggles::none();
}

bool is_sweep(ExperimentKind kind) {
    return kind == ExperimentKind::T1Sweep || kind == ExperimentKind::T2Sweep || kind == ExperimentKind::Ge1Sweep ||
           kind == ExperimentKind::Ge2Sweep;
}

std::vector<double> default_multipliers(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::T1Sweep: return {0.5, 1, 2, 3, 4, 5, 6};
        case ExperimentKind::T2Sweep: return {0.5, 1, 2, 4, 6, 8};
        case ExperimentKind::Ge1Sweep:
        case ExperimentKind::Ge2Sweep: return {0.25, 0.5, 0.6, 0.75, 1.0};
        default: return {1.0};
    }
}

std::vector<NoiseSeries> default_series(ExperimentKind kind) {
    switch (kind) {
        case ExperimentKind::FomTable:
            return {NoiseSeries::Pure, NoiseSeries::GE, NoiseSeries::T1, NoiseSeries::T2, NoiseSeries::Combined};
        case ExperimentKind::T1Sweep: return {NoiseSeries::T1};
        case ExperimentKind::T2Sweep: return {NoiseSeries::T2};
        case ExperimentKind::Ge1Sweep:
        case ExperimentKind::Ge2Sweep: return {NoiseSeries::GE};
        case ExperimentKind::Landscape:
        case ExperimentKind::Motivation: return {NoiseSeries::Pure, NoiseSeries::Combined};
        case ExperimentKind::LatencyReport: return {NoiseSeries::Pure};
    }
    return {};
}

DeviceModel scaled_device(const DeviceModel& device, ExperimentKind kind, double multiplier) {
    DeviceModel d = device;
    switch (kind) {
        case ExperimentKind::T1Sweep: d.t1_scale *= multiplier; break;
        case ExperimentKind::T2Sweep: d.t2_scale *= multiplier; break;
        case ExperimentKind::Ge1Sweep: d.ge1_scale *= multiplier; break;
        case ExperimentKind::Ge2Sweep: d.ge2_scale *= multiplier; break;
        default: break;
    }
    return d;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::vector<NoiseSeries> ExperimentSpec::effective_series() const {
    return series.empty() ? default_series(kind) : series;
}

std::vector<double> ExperimentSpec::effective_multipliers() const {
    if (!is_sweep(kind)) return {1.0};
    return multipliers.empty() ? default_multipliers(kind) : multipliers;
}

std::size_t ExperimentSpec::effective_resolution() const {
    if (resolution != 0) return resolution;
    return kind == ExperimentKind::Motivation ? 100 : 50;
}

void ExperimentSpec::validate() const {
    device.validate();
    if (p_min < 1) throw std::invalid_argument(fmt::format("p must be >= 1 (got p-min {})", p_min));
    if (p_max < p_min) throw std::invalid_argument(fmt::format("p-max {} is below p-min {}", p_max, p_min));
    if (p_max > kMaxDepth) throw std::invalid_argument(fmt::format("p-max {} exceeds the limit {}", p_max, kMaxDepth));
    for (double m : multipliers) {
        if (!std::isfinite(m) || m <= 0.0) {
            throw std::invalid_argument(fmt::format("multipliers must be positive (got {})", m));
        }
    }
    if (!multipliers.empty() && !is_sweep(kind)) {
        throw std::invalid_argument(fmt::format("{} takes no multipliers", to_string(kind)));
    }
    if (effective_series().empty()) throw std::invalid_argument("no noise series selected");
    if (kind == ExperimentKind::Motivation) {
        if (effective_resolution() < 2) throw std::invalid_argument("motivation needs at least 2 theta samples");
        return;
    }
    if (graphs.empty()) throw std::invalid_argument("no graph given");
    for (const auto& ref : graphs) {
        const Graph g = resolve_graph(ref);
        if (g.n_nodes() > device.n_qubits) {
            throw std::invalid_argument(fmt::format("graph '{}' has {} nodes but the device has {} qubits", g.name(),
                                                    g.n_nodes(), device.n_qubits));
        }
    }
    if (kind == ExperimentKind::Landscape) {
        if (p_min != 1 || p_max != 1) throw std::invalid_argument("landscape scans are defined for p = 1 only");
        if (graphs.size() != 1) throw std::invalid_argument("landscape takes exactly one graph");
        if (effective_resolution() < 2) throw std::invalid_argument("landscape resolution must be >= 2");
    }
    if (kind != ExperimentKind::LatencyReport && kind != ExperimentKind::Landscape) {
        optimizer.validate(2 * static_cast<std::size_t>(p_max));
    }
}

std::vector<ResultRow> run_fom_table(const ExperimentSpec& spec) {
    return run_cells(spec, {1.0});
}

std::vector<ResultRow> run_multiplier_sweep(const ExperimentSpec& spec) {
    if (!is_sweep(spec.kind)) {
        throw std::invalid_argument(fmt::format("{} is not a multiplier sweep", to_string(spec.kind)));
    }
    return run_cells(spec, spec.effective_multipliers());
}

std::vector<LandscapeRow> run_landscape(const ExperimentSpec& spec) {
    if (spec.kind != ExperimentKind::Landscape) {
        ExperimentSpec copy = spec;
        copy.kind = ExperimentKind::Landscape;
        return run_landscape(copy);
    }
    spec.validate();
    const MaxCutProblem problem(resolve_graph(spec.graphs.front()));
    std::vector<LandscapeRow> rows;
    for (auto s : spec.effective_series()) {
        const auto toggles = toggles_for(s);
        const auto objective = [&](std::span<const double> x) {
            return -evaluate(problem, QaoaParams::from_vector(x), spec.device, toggles).expectation;
        };
        const Landscape land = grid_scan(objective, qaoa_bounds(1), spec.effective_resolution(), spec.workers);
        for (std::size_t i = 0; i < land.values.size(); ++i) {
            const auto x = land.point(i);
            rows.push_back({to_string(s), x[0], x[1], -land.values[i]});
        }
        if (spec.progress) {
            spec.progress(fmt::format("{} {}: max expectation {:.4f} at gamma={:.4f} beta={:.4f}", problem.graph.name(),
                                      to_string(s), -land.best_value, land.best_point[0], land.best_point[1]));
        }
    }
    return rows;
}

std::vector<MotivationRow> run_motivation(const ExperimentSpec& spec) {
    spec.validate();
    const std::size_t n = spec.effective_resolution();
    const std::vector<double> z = {1.0, -1.0};
    std::vector<MotivationRow> rows;
    for (auto s : spec.effective_series()) {
        const auto toggles = toggles_for(s);
        for (std::size_t i = 0; i < n; ++i) {
            const double theta = 2.0 * pi * static_cast<double>(i) / static_cast<double>(n - 1);
            const GateOp gates[] = {make_gate(GateKind::ry(theta), {0}, spec.device.durations)};
            double e = 0.0;
            if (toggles.any()) {
                e = expectation_diag(simulate_circuit(gates, spec.device, toggles, 1), z);
            } else {
                e = expectation_diag(simulate_pure(gates, PureState::basis(1, 0)), z);
            }
            rows.push_back({to_string(s), theta, e});
        }
    }
    return rows;
}

std::vector<LatencyRow> run_latency_report(const ExperimentSpec& spec) {
    spec.validate();
    std::vector<LatencyRow> rows;
    for (const auto& ref : spec.graphs) {
        const Graph g = resolve_graph(ref);
        const std::int64_t chet = cost_hamiltonian_latency(g, spec.device);
        for (int p = spec.p_min; p <= spec.p_max; ++p) {
            const QaoaParams params(std::vector<double>(p, 0.0), std::vector<double>(p, 0.0));
            const auto gates = build_qaoa_circuit(g, params, spec.device.durations);
            LatencyRow r;
            r.graph = g.name();
            r.p = p;
            r.n_edges = g.edges().size();
            r.latency_ns = circuit_latency(gates, spec.device);
            r.chet_ns = chet;
            r.chet_over_t1 = static_cast<double>(chet) / spec.device.t1_ns();
            r.chet_over_t2 = static_cast<double>(chet) / spec.device.t2_ns();
            r.cost_fidelity_estimate = cost_fidelity_estimate(r.n_edges, spec.device.gate_error_2q());
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::string results_to_csv(const std::vector<ResultRow>& rows, const ExperimentSpec& spec) {
    std::string out = metadata(spec, true);
    out += kResultHeader;
    out += '\n';
    std::size_t total = 0;
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", r.experiment_id, r.graph, r.p, r.series,
                           r.multiplier, join(r.best_gammas, ';'), join(r.best_betas, ';'), r.expectation, r.c_max,
                           r.fom, r.latency_ns, r.chet_ns, r.chet_over_t1, r.chet_over_t2, r.seed, r.evaluations);
        total += r.evaluations;
    }
    out += fmt::format("# total_evaluations={}\n", total);
    return out;
}

std::string landscape_to_csv(const std::vector<LandscapeRow>& rows, const ExperimentSpec& spec) {
    std::string out = metadata(spec, false);
    out += kLandscapeHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{}\n", r.series, r.gamma, r.beta, r.expectation);
    }
    return out;
}

std::string motivation_to_csv(const std::vector<MotivationRow>& rows, const ExperimentSpec& spec) {
    std::string out = metadata(spec, false);
    out += kMotivationHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{},{},{}\n", r.series, r.theta, r.expectation);
    }
    return out;
}

std::string latency_to_csv(const std::vector<LatencyRow>& rows, const ExperimentSpec& spec) {
    std::string out = metadata(spec, false);
    out += kLatencyHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += fmt::format("{},{},{},{},{},{},{},{}\n", r.graph, r.p, r.n_edges, r.latency_ns, r.chet_ns,
                           r.chet_over_t1, r.chet_over_t2, r.cost_fidelity_estimate);
    }
    return out;
}

std::string run_experiment(const ExperimentSpec& spec) {
    switch (spec.kind) {
        case ExperimentKind::FomTable: return results_to_csv(run_fom_table(spec), spec);
        case ExperimentKind::T1Sweep:
        case ExperimentKind::T2Sweep:
        case ExperimentKind::Ge1Sweep:
        case ExperimentKind::Ge2Sweep: return results_to_csv(run_multiplier_sweep(spec), spec);
        case ExperimentKind::Landscape: return landscape_to_csv(run_landscape(spec), spec);
        case ExperimentKind::Motivation: return motivation_to_csv(run_motivation(spec), spec);
        case ExperimentKind::LatencyReport: return latency_to_csv(run_latency_report(spec), spec);
    }
    throw std::logic_error("unhandled experiment kind");
}

std::vector<ResultRow> parse_results_csv(std::string_view text) {
    std::vector<ResultRow> rows;
    bool seen_header = false;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (!seen_header) {
            if (line != kResultHeader) throw std::invalid_argument("CSV: unexpected header");
            seen_header = true;
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 16) {
            throw std::invalid_argument(fmt::format("CSV: expected 16 fields, got {}", f.size()));
        }
        ResultRow r;
        r.experiment_id = std::string(f[0]);
        r.graph = std::string(f[1]);
        r.p = parse_number<int>(f[2], "p");
        r.series = std::string(f[3]);
        r.multiplier = parse_number<double>(f[4], "multiplier");
        r.best_gammas = parse_list(f[5], "best_gammas");
        r.best_betas = parse_list(f[6], "best_betas");
        r.expectation = parse_number<double>(f[7], "expectation");
        r.c_max = parse_number<double>(f[8], "c_max");
        r.fom = parse_number<double>(f[9], "fom");
        r.latency_ns = parse_number<std::int64_t>(f[10], "latency_ns");
        r.chet_ns = parse_number<std::int64_t>(f[11], "chet_ns");
        r.chet_over_t1 = parse_number<double>(f[12], "chet_over_t1");
        r.chet_over_t2 = parse_number<double>(f[13], "chet_over_t2");
        r.seed = parse_number<std::uint64_t>(f[14], "seed");
        r.evaluations = parse_number<std::size_t>(f[15], "evaluations");
        rows.push_back(std::move(r));
    }
    if (!seen_header) throw std::invalid_argument("CSV: missing header");
    return rows;
}

}  // namespace noisyqaoa
