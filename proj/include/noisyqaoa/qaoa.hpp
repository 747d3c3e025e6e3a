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
#include "noisyqaoa/gates.hpp"
#include "noisyqaoa/graph.hpp"
#include "noisyqaoa/state.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace noisyqaoa {

/// p-level QAOA angles. The optimization domain is gamma in [0, 2pi] and
/// beta in [0, pi]; angles outside it are still simulated (see in_domain()).
struct QaoaParams {
    std::vector<double> gammas;
    std::vector<double> betas;

    QaoaParams(std::vector<double> gammas, std::vector<double> betas);
    /// Splits [gamma_1..gamma_p, beta_1..beta_p].
    static QaoaParams from_vector(std::span<const double> x);

    int p() const { return static_cast<int>(gammas.size()); }
    bool in_domain() const;
    std::vector<double> to_vector() const;
};

/// A MaxCut instance with its cost diagonal and exact optimum cached.
struct MaxCutProblem {
    Graph graph;
    std::vector<double> diagonal;
    double c_max = 0.0;

    explicit MaxCutProblem(Graph g);
};

struct EvalRecord {
    QaoaParams params;
    double expectation = 0.0;
    double fom = 0.0;
    std::int64_t latency_ns = 0;
};

/// H on every node, then per level: CNOT(i,j) U1(-gamma_k)_j CNOT(i,j) for
/// each edge in input order, followed by RX(beta_k) as U3(beta,-pi/2,pi/2)
/// on every node. Hadamards are emitted as U2(0, pi).
std::vector<GateOp> build_qaoa_circuit(const Graph& graph, const QaoaParams& params,
                                       const GateDurations& durations = {});

/// One cost layer (phase separator) for a single gamma.
std::vector<GateOp> build_cost_layer(const Graph& graph, double gamma, const GateDurations& durations = {});

/// Serial latency: sum of the gates' durations under `device`.
std::int64_t circuit_latency(std::span<const GateOp> gates, const DeviceModel& device);
std::int64_t cost_hamiltonian_latency(const Graph& graph, const DeviceModel& device);

/// E_p(gamma, beta) under the given noise, FOM = 1 - E/C_max and latency.
EvalRecord evaluate(const MaxCutProblem& problem, const QaoaParams& params, const DeviceModel& device,
                    const NoiseToggles& toggles);
EvalRecord evaluate(const Graph& graph, const QaoaParams& params, const DeviceModel& device,
                    const NoiseToggles& toggles);

/// FOM as a function of the packed parameter vector, for the optimizer.
std::function<double(std::span<const double>)> fom_objective(const MaxCutProblem& problem, const DeviceModel& device,
                                                             const NoiseToggles& toggles);

using Histogram = std::map<std::string, std::uint64_t>;

/// Multinomial draw of `shots` outcomes from diag(rho), deterministic in
/// `seed`. Keys are bitstrings as in to_bitstring().
Histogram sample_counts(const DensityMatrix& rho, std::uint64_t shots, std::uint64_t seed);

/// Mean cut value over the sampled bitstrings.
double estimate_expectation_from_samples(const Histogram& counts, const Graph& graph);

/// (1 - err)^(2 * n_edges): two CNOTs per edge.
double cost_fidelity_estimate(std::size_t n_edges, double err_2q);

/// Fidelity of one noisy cost layer, started from |+>^N, against its
/// noiseless output. Coherence times are divided by `t_scale`; a t_scale of
/// zero means no time elapses.
double cost_layer_state_fidelity(const Graph& graph, double gamma, const DeviceModel& device,
                                 const NoiseToggles& toggles, double t_scale = 1.0);

}  // namespace noisyqaoa
