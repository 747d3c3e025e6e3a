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

#include "noisyqaoa/noise.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace noisyqaoa {

namespace {

void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(fmt::format("{}: probability {} outside [0, 1]", what, p));
    }
}

void check_time(double t, double tc, const char* what) {
    if (!(t >= 0.0) || !(tc > 0.0)) {
        throw std::invalid_argument(fmt::format("{}: need t >= 0 and coherence time > 0", what));
    }
}

double decay(double t, double tc) { return -std::expm1(-t / tc); }

bool is_diagonal(GateType t) { return t == GateType::U1 || t == GateType::RZ; }

void apply_ideal(ComplexMatrix& m, int n, const GateOp& gate) {
    if (gate.kind.type == GateType::CNOT) {
        kernels::cnot(m, n, gate.qubits[0], gate.qubits[1]);
        return;
    }
    const ComplexMatrix u = matrix_of(gate.kind);
    if (is_diagonal(gate.kind.type)) {
        kernels::diagonal_1q(m, n, u(0, 0), u(1, 1), gate.qubits[0]);
    } else {
        kernels::unitary_1q(m, n, u, gate.qubits[0]);
    }
}

/// Relaxation and dephasing that has elapsed on each qubit but not yet been
/// applied. Damping on qubit q commutes with every operation that does not
/// touch q, both channels compose additively in time, and amplitude damping
/// is phase covariant, so a qubit's backlog only has to be settled right
/// before a non-diagonal operation on it (and at the end).
class PendingDecoherence {
public:
    PendingDecoherence(int n, const DeviceModel& device, const NoiseToggles& toggles)
        : device_(device), toggles_(toggles), pending_(static_cast<std::size_t>(n), 0), n_(n) {}

    bool active() const { return toggles_.relaxation || toggles_.dephasing; }

    void elapse(std::int64_t duration_ns) {
        for (auto& t : pending_) t += duration_ns;
    }

    void settle(ComplexMatrix& m, int q) {
        auto& t = pending_[static_cast<std::size_t>(q)];
        if (t == 0) return;
        const auto dt = static_cast<double>(t);
        const double gamma = toggles_.relaxation ? decay(dt, device_.t1_ns()) : 0.0;
        const double lambda = toggles_.dephasing ? decay(dt, device_.t2_ns()) : 0.0;
        kernels::damp(m, n_, gamma, lambda, q);
        t = 0;
    }

    void settle_all(ComplexMatrix& m) {
        for (int q = 0; q < n_; ++q) settle(m, q);
    }

private:
    const DeviceModel& device_;
    NoiseToggles toggles_;
    std::vector<std::int64_t> pending_;
    int n_;
};

// Ideal gate, depolarizing on its targets, then relaxation and dephasing on
// every qubit for the gate's duration (deferred, see PendingDecoherence).
void apply_noisy_inplace(ComplexMatrix& m, int n, const GateOp& gate, const DeviceModel& device,
                         const NoiseToggles& toggles, PendingDecoherence& decoherence) {
    const double p = toggles.gate_error ? gate_depolarizing_probability(gate.kind, device) : 0.0;
    if (decoherence.active() && (p > 0.0 || !is_diagonal(gate.kind.type))) {
        for (int q : gate.targets()) decoherence.settle(m, q);
    }
    apply_ideal(m, n, gate);
    if (p > 0.0) {
        kernels::depolarize(m, n, p, gate.targets());
    }
    if (decoherence.active() && gate.duration_ns > 0) {
        decoherence.elapse(gate.duration_ns);
    }
}

}  // namespace

KrausSet depolarizing_kraus(double p, int n_qubits) {
    check_probability(p, "depolarizing_kraus");
    if (n_qubits != 1 && n_qubits != 2) {
        throw std::invalid_argument("depolarizing_kraus: only 1- and 2-qubit channels are supported");
    }
    const std::vector<ComplexMatrix> paulis{pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
    const double terms = n_qubits == 1 ? 4.0 : 16.0;
    const double w_identity = std::sqrt(1.0 - p * (terms - 1.0) / terms);
    const double w_pauli = std::sqrt(p / terms);
    KrausSet out;
    if (n_qubits == 1) {
        for (std::size_t a = 0; a < 4; ++a) {
            out.push_back((a == 0 ? w_identity : w_pauli) * paulis[a]);
        }
    } else {
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                const double w = (a == 0 && b == 0) ? w_identity : w_pauli;
                out.push_back(w * kron(paulis[a], paulis[b]));
            }
        }
    }
    return out;
}

KrausSet amplitude_damping_kraus(double t_ns, double t1_ns) {
    check_time(t_ns, t1_ns, "amplitude_damping_kraus");
    const double gamma = decay(t_ns, t1_ns);
    return {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}, ComplexMatrix{{0.0, std::sqrt(gamma)}, {0.0, 0.0}}};
}

KrausSet phase_damping_kraus(double t_ns, double t2_ns) {
    check_time(t_ns, t2_ns, "phase_damping_kraus");
    const double lambda = decay(t_ns, t2_ns);
    return {ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - lambda)}}, ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(lambda)}}};
}

double gate_depolarizing_probability(const GateKind& kind, const DeviceModel& device) {
    bool virtual_only = true;
    for (const auto& native : decompose_to_native(kind)) {
        virtual_only = virtual_only && native.type == GateType::U1;
    }
    if (virtual_only) {
        return 0.0;
    }
    const double err = kind.arity() == 2 ? device.gate_error_2q() : device.gate_error_1q();
    const double p = device.depolarizing_factor * err;
    check_probability(p, "gate depolarizing probability");
    return p;
}

void validate_circuit(std::span<const GateOp> gates, int n_qubits, const DeviceModel& device) {
    if (n_qubits > device.n_qubits) {
        throw std::invalid_argument(
            fmt::format("register of {} qubits exceeds the {}-qubit device", n_qubits, device.n_qubits));
    }
    for (const auto& g : gates) {
        for (int q : g.targets()) {
            if (q < 0 || q >= n_qubits) {
                throw std::invalid_argument(fmt::format("{} addresses qubit {} outside a {}-qubit register",
                                                        to_string(g.kind), q, n_qubits));
            }
        }
        if (g.kind.arity() == 2 && g.qubits[0] == g.qubits[1]) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }
}

DensityMatrix apply_noisy_gate(const DensityMatrix& rho, const GateOp& gate, const DeviceModel& device,
                               const NoiseToggles& toggles) {
    const GateOp one[] = {gate};
    return simulate_circuit(one, device, toggles, rho);
}

DensityMatrix simulate_circuit(std::span<const GateOp> gates, const DeviceModel& device,
                               const NoiseToggles& toggles, DensityMatrix initial) {
    device.validate();
    const int n = initial.n_qubits();
    validate_circuit(gates, n, device);
    auto& m = initial.mutable_matrix();
    PendingDecoherence decoherence(n, device, toggles);
    for (const auto& g : gates) {
        apply_noisy_inplace(m, n, g, device, toggles, decoherence);
    }
    decoherence.settle_all(m);
#ifndef NDEBUG
    check_invariants(initial, true);
#endif
    return initial;
}

DensityMatrix simulate_circuit(std::span<const GateOp> gates, const DeviceModel& device,
                               const NoiseToggles& toggles, int n_qubits) {
    return simulate_circuit(gates, device, toggles, DensityMatrix::basis(n_qubits, 0));
}

PureState simulate_pure(std::span<const GateOp> gates, PureState initial) {
    for (const auto& g : gates) {
        for (int q : g.targets()) {
            if (q < 0 || q >= initial.n_qubits()) {
                throw std::invalid_argument("gate addresses a qubit outside the register");
            }
        }
    }
    auto amps = initial.amplitudes();
    for (const auto& g : gates) {
        if (g.kind.type == GateType::CNOT) {
            kernels::cnot(amps, g.qubits[0], g.qubits[1]);
            continue;
        }
        const ComplexMatrix u = matrix_of(g.kind);
        if (is_diagonal(g.kind.type)) {
            kernels::diagonal_1q(amps, u(0, 0), u(1, 1), g.qubits[0]);
        } else {
            kernels::unitary_1q(amps, u, g.qubits[0]);
        }
    }
    return initial;
}

}  // namespace noisyqaoa
