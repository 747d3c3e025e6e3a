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

#include "noisyqaoa/qaoa.hpp"

#include "noisyqaoa/noise.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace noisyqaoa {

using std::numbers::pi;

QaoaParams::QaoaParams(std::vector<double> g, std::vector<double> b) : gammas(std::move(g)), betas(std::move(b)) {
    if (gammas.empty()) {
        throw std::invalid_argument("QAOA needs p >= 1");
    }
    if (gammas.size() != betas.size()) {
        throw std::invalid_argument("QAOA gamma and beta vectors must have equal length");
    }
    for (double a : gammas) {
        if (!std::isfinite(a)) throw std::invalid_argument("QAOA angle must be finite");
    }
    for (double a : betas) {
        if (!std::isfinite(a)) throw std::invalid_argument("QAOA angle must be finite");
    }
}

QaoaParams QaoaParams::from_vector(std::span<const double> x) {
    if (x.empty() || x.size() % 2 != 0) {
        throw std::invalid_argument("packed QAOA vector must have even, non-zero length");
    }
    const std::size_t p = x.size() / 2;
    return QaoaParams({x.begin(), x.begin() + static_cast<std::ptrdiff_t>(p)},
                      {x.begin() + static_cast<std::ptrdiff_t>(p), x.end()});
}

bool QaoaParams::in_domain() const {
    for (double g : gammas) {
        if (g < 0.0 || g > 2.0 * pi) return false;
    }
    for (double b : betas) {
        if (b < 0.0 || b > pi) return false;
    }
    return true;
}

std::vector<double> QaoaParams::to_vector() const {
    std::vector<double> x = gammas;
    x.insert(x.end(), betas.begin(), betas.end());
    return x;
}

MaxCutProblem::MaxCutProblem(Graph g)
    : graph(std::move(g)), diagonal(cost_diagonal(graph)), c_max(max_cut_brute_force(graph).c_max) {
    if (!(c_max > 0.0)) {
        throw std::invalid_argument("MaxCut problem has no positive cut; the approximation ratio is undefined");
    }
}

std::vector<GateOp> build_cost_layer(const Graph& graph, double gamma, const GateDurations& durations) {
    std::vector<GateOp> gates;
    gates.reserve(3 * graph.n_edges());
    for (const auto& e : graph.edges()) {
        // U1(-gamma * w) realizes exp(+i gamma w/2 Z_i Z_j) up to global phase.
        gates.push_back(make_gate(GateKind::cnot(), {e.u, e.v}, durations));
        gates.push_back(make_gate(GateKind::u1(-gamma * e.weight), {e.v}, durations));
        gates.push_back(make_gate(GateKind::cnot(), {e.u, e.v}, durations));
    }
    return gates;
}

std::vector<GateOp> build_qaoa_circuit(const Graph& graph, const QaoaParams& params, const GateDurations& durations) {
    const int n = graph.n_nodes();
    std::vector<GateOp> gates;
    gates.reserve(static_cast<std::size_t>(n + params.p() * (3 * static_cast<int>(graph.n_edges()) + n)));
    for (int q = 0; q < n; ++q) {
        gates.push_back(make_gate(GateKind::u2(0.0, pi), {q}, durations));
    }
    for (int k = 0; k < params.p(); ++k) {
        auto layer = build_cost_layer(graph, params.gammas[static_cast<std::size_t>(k)], durations);
        gates.insert(gates.end(), layer.begin(), layer.end());
        const double beta = params.betas[static_cast<std::size_t>(k)];
        for (int q = 0; q < n; ++q) {
            gates.push_back(make_gate(GateKind::u3(beta, -pi / 2.0, pi / 2.0), {q}, durations));
        }
    }
    return gates;
}

std::int64_t circuit_latency(std::span<const GateOp> gates, const DeviceModel& device) {
    std::int64_t total = 0;
    for (const auto& g : gates) {
        total += duration_of(g.kind, device);
    }
    return total;
}

std::int64_t cost_hamiltonian_latency(const Graph& graph, const DeviceModel& device) {
    const auto m = static_cast<std::int64_t>(graph.n_edges());
    return 2 * m * device.durations.cnot_ns + m * device.durations.u1_ns;
}

EvalRecord evaluate(const MaxCutProblem& problem, const QaoaParams& params, const DeviceModel& device,
                    const NoiseToggles& toggles) {
    const auto gates = build_qaoa_circuit(problem.graph, params, device.durations);
    const int n = problem.graph.n_nodes();
    double e = 0.0;
    if (toggles.any()) {
        e = expectation_diag(simulate_circuit(gates, device, toggles, n), problem.diagonal);
    } else {
        validate_circuit(gates, n, device);
        e = expectation_diag(simulate_pure(gates, PureState::basis(n, 0)), problem.diagonal);
    }
    return EvalRecord{params, e, 1.0 - e / problem.c_max, circuit_latency(gates, device)};
}

EvalRecord evaluate(const Graph& graph, const QaoaParams& params, const DeviceModel& device,
                    const NoiseToggles& toggles) {
    return evaluate(MaxCutProblem(graph), params, device, toggles);
}

std::function<double(std::span<const double>)> fom_objective(const MaxCutProblem& problem, const DeviceModel& device,
                                                             const NoiseToggles& toggles) {
    return [&problem, device, toggles](std::span<const double> x) {
        return evaluate(problem, QaoaParams::from_vector(x), device, toggles).fom;
    };
}

Histogram sample_counts(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_counts: shots must be >= 1");
    }
    std::vector<double> probs = rho.diagonal();
    for (auto& p : probs) {
        p = std::max(p, 0.0);
    }
    std::mt19937_64 rng(seed);
    Histogram counts;
    double mass_left = 0.0;
    for (double p : probs) {
        mass_left += p;
    }
    std::uint64_t remaining = shots;
    for (std::size_t i = 0; i < probs.size() && remaining > 0; ++i) {
        std::uint64_t k = 0;
        if (i + 1 == probs.size() || probs[i] >= mass_left) {
            k = remaining;
        } else if (probs[i] > 0.0) {
            std::binomial_distribution<std::uint64_t> draw(remaining, probs[i] / mass_left);
            k = draw(rng);
        }
        mass_left -= probs[i];
        remaining -= k;
        if (k > 0) {
            counts[to_bitstring(i, rho.n_qubits())] = k;
        }
    }
    return counts;
}

double estimate_expectation_from_samples(const Histogram& counts, const Graph& graph) {
    double weighted = 0.0;
    double total = 0.0;
    for (const auto& [bits, count] : counts) {
        weighted += static_cast<double>(count) * cut_value(graph, bits);
        total += static_cast<double>(count);
    }
    if (total == 0.0) {
        throw std::invalid_argument("estimate_expectation_from_samples: empty histogram");
    }
    return weighted / total;
}

double cost_fidelity_estimate(std::size_t n_edges, double err_2q) {
    if (!(err_2q >= 0.0 && err_2q <= 1.0)) {
        throw std::invalid_argument("cost_fidelity_estimate: error rate outside [0, 1]");
    }
    return std::pow(1.0 - err_2q, 2.0 * static_cast<double>(n_edges));
}

double cost_layer_state_fidelity(const Graph& graph, double gamma, const DeviceModel& device,
                                 const NoiseToggles& toggles, double t_scale) {
    if (!(t_scale >= 0.0) || !std::isfinite(t_scale)) {
        throw std::invalid_argument("cost_layer_state_fidelity: t_scale must be finite and >= 0");
    }
    const int n = graph.n_nodes();
    const auto layer = build_cost_layer(graph, gamma, device.durations);
    const PureState plus = PureState::plus(n);
    const PureState ideal = simulate_pure(layer, plus);

    DeviceModel scaled = device;
    NoiseToggles active = toggles;
    if (t_scale == 0.0) {
        active.relaxation = false;
        active.dephasing = false;
    } else {
        scaled.t1_scale /= t_scale;
        scaled.t2_scale /= t_scale;
    }
    const DensityMatrix noisy = simulate_circuit(layer, scaled, active, DensityMatrix::from_pure(plus));
    return fidelity_to_pure(ideal, noisy);
}

}  // namespace noisyqaoa
