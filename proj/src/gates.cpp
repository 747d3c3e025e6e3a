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

#include "noisyqaoa/gates.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace noisyqaoa {

namespace {

using std::numbers::pi;

void check_angles(const GateKind& kind) {
    for (double a : kind.angles) {
        if (!std::isfinite(a)) {
            throw std::invalid_argument("gate angle must be finite");
        }
    }
}

ComplexMatrix u3_matrix(double theta, double phi, double lambda) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {{c, -std::polar(1.0, lambda) * s}, {std::polar(1.0, phi) * s, std::polar(1.0, phi + lambda) * c}};
}

}  // namespace

bool GateKind::is_native() const {
    return type == GateType::U1 || type == GateType::U2 || type == GateType::U3 || type == GateType::CNOT;
}

std::string to_string(GateType type) {
    switch (type) {
        case GateType::U1: return "U1";
        case GateType::U2: return "U2";
        case GateType::U3: return "U3";
        case GateType::CNOT: return "CNOT";
        case GateType::H: return "H";
        case GateType::X: return "X";
        case GateType::RX: return "RX";
        case GateType::RY: return "RY";
        case GateType::RZ: return "RZ";
    }
    return "?";
}

std::string to_string(const GateKind& kind) {
    const auto& a = kind.angles;
    switch (kind.type) {
        case GateType::U1:
        case GateType::RX:
        case GateType::RY:
        case GateType::RZ: return fmt::format("{}({:.6g})", to_string(kind.type), a[0]);
        case GateType::U2: return fmt::format("U2({:.6g},{:.6g})", a[0], a[1]);
        case GateType::U3: return fmt::format("U3({:.6g},{:.6g},{:.6g})", a[0], a[1], a[2]);
        default: return to_string(kind.type);
    }
}

GateOp make_gate(const GateKind& kind, std::span<const int> targets, const GateDurations& durations) {
    check_angles(kind);
    if (targets.size() != static_cast<std::size_t>(kind.arity())) {
        throw std::invalid_argument(fmt::format("{} expects {} target(s), got {}", to_string(kind.type),
                                                kind.arity(), targets.size()));
    }
    GateOp op;
    op.kind = kind;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (targets[i] < 0) {
            throw std::invalid_argument("negative qubit index");
        }
        op.qubits[i] = targets[i];
    }
    if (kind.arity() == 2 && op.qubits[0] == op.qubits[1]) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    op.duration_ns = duration_of(kind, durations);
    return op;
}

GateOp make_gate(const GateKind& kind, std::initializer_list<int> targets, const GateDurations& durations) {
    return make_gate(kind, std::span<const int>(targets.begin(), targets.size()), durations);
}

ComplexMatrix matrix_of(const GateKind& kind) {
    check_angles(kind);
    const auto& a = kind.angles;
    switch (kind.type) {
        case GateType::U1: return {{1.0, 0.0}, {0.0, std::polar(1.0, a[0])}};
        case GateType::U2: return u3_matrix(pi / 2.0, a[0], a[1]);
        case GateType::U3: return u3_matrix(a[0], a[1], a[2]);
        case GateType::H: return u3_matrix(pi / 2.0, 0.0, pi);
        case GateType::X: return u3_matrix(pi, 0.0, pi);
        case GateType::RX: return u3_matrix(a[0], -pi / 2.0, pi / 2.0);
        case GateType::RY: return u3_matrix(a[0], 0.0, 0.0);
        case GateType::RZ: return {{std::polar(1.0, -a[0] / 2.0), 0.0}, {0.0, std::polar(1.0, a[0] / 2.0)}};
        case GateType::CNOT:
            return {{1.0, 0.0, 0.0, 0.0}, {0.0, 1.0, 0.0, 0.0}, {0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 1.0, 0.0}};
    }
    throw std::logic_error("matrix_of: unknown gate type");
}

std::vector<GateKind> decompose_to_native(const GateKind& kind) {
    check_angles(kind);
    const auto& a = kind.angles;
    switch (kind.type) {
        case GateType::U1:
        case GateType::U2:
        case GateType::U3:
        case GateType::CNOT: return {kind};
        case GateType::H: return {GateKind::u2(0.0, pi)};
        case GateType::X: return {GateKind::u3(pi, 0.0, pi)};
        case GateType::RX: return {GateKind::u3(a[0], -pi / 2.0, pi / 2.0)};
        case GateType::RY: return {GateKind::u3(a[0], 0.0, 0.0)};
        // global phase e^{-i theta/2} dropped
        case GateType::RZ: return {GateKind::u1(a[0])};
    }
    throw std::logic_error("decompose_to_native: unknown gate type");
}

std::int64_t duration_of(const GateKind& kind, const GateDurations& durations) {
    if (!kind.is_native()) {
        std::int64_t total = 0;
        for (const auto& native : decompose_to_native(kind)) {
            total += duration_of(native, durations);
        }
        return total;
    }
    switch (kind.type) {
        case GateType::U1: return durations.u1_ns;
        case GateType::U2: return durations.u2_ns;
        case GateType::U3: return durations.u3_ns;
        case GateType::CNOT: return durations.cnot_ns;
        default: break;
    }
    throw std::logic_error("duration_of: unknown native gate");
}

}  // namespace noisyqaoa
