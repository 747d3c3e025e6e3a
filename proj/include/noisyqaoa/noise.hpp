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
#include "noisyqaoa/state.hpp"

#include <optional>
#include <span>
#include <vector>

namespace noisyqaoa {

using KrausSet = std::vector<ComplexMatrix>;

/// rho -> (1-p) rho + p I/2^n as the 4^n-element Pauli Kraus set.
KrausSet depolarizing_kraus(double p, int n_qubits);

/// Relaxation for `t_ns` with gamma = 1 - exp(-t/T1).
KrausSet amplitude_damping_kraus(double t_ns, double t1_ns);

/// Dephasing for `t_ns` with lambda = 1 - exp(-t/T2). Populations are
/// untouched.
KrausSet phase_damping_kraus(double t_ns, double t2_ns);

/// Depolarizing probability applied after `kind`, or 0 for virtual gates.
double gate_depolarizing_probability(const GateKind& kind, const DeviceModel& device);

/// Ideal unitary, then (when enabled) depolarizing on the gate's targets,
/// amplitude damping and phase damping for the gate's duration on every
/// qubit of the register.
DensityMatrix apply_noisy_gate(const DensityMatrix& rho, const GateOp& gate, const DeviceModel& device,
                               const NoiseToggles& toggles);

/// Left fold of apply_noisy_gate over `gates`. The default initial state is
/// |0...0><0...0| on `n_qubits` qubits.
DensityMatrix simulate_circuit(std::span<const GateOp> gates, const DeviceModel& device,
                               const NoiseToggles& toggles, DensityMatrix initial);
DensityMatrix simulate_circuit(std::span<const GateOp> gates, const DeviceModel& device,
                               const NoiseToggles& toggles, int n_qubits);

/// Noiseless state-vector evolution of the same gate list.
PureState simulate_pure(std::span<const GateOp> gates, PureState initial);

/// Throws if a gate addresses a qubit outside the register or the register
/// exceeds the device size.
void validate_circuit(std::span<const GateOp> gates, int n_qubits, const DeviceModel& device);

}  // namespace noisyqaoa
