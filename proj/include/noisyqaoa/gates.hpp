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

#include "noisyqaoa/matrix.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace noisyqaoa {

enum class GateType { U1, U2, U3, CNOT, H, X, RX, RY, RZ };

/// A gate type plus its angles (radians). Unused angle slots are zero.
struct GateKind {
    GateType type = GateType::U1;
    std::array<double, 3> angles{};

    static GateKind u1(double lambda) { return {GateType::U1, {lambda, 0.0, 0.0}}; }
    static GateKind u2(double phi, double lambda) { return {GateType::U2, {phi, lambda, 0.0}}; }
    static GateKind u3(double theta, double phi, double lambda) { return {GateType::U3, {theta, phi, lambda}}; }
    static GateKind cnot() { return {GateType::CNOT, {}}; }
    static GateKind h() { return {GateType::H, {}}; }
    static GateKind x() { return {GateType::X, {}}; }
    static GateKind rx(double theta) { return {GateType::RX, {theta, 0.0, 0.0}}; }
    static GateKind ry(double theta) { return {GateType::RY, {theta, 0.0, 0.0}}; }
    static GateKind rz(double theta) { return {GateType::RZ, {theta, 0.0, 0.0}}; }

    int arity() const { return type == GateType::CNOT ? 2 : 1; }
    bool is_native() const;
    bool operator==(const GateKind&) const = default;
};

std::string to_string(GateType type);
std::string to_string(const GateKind& kind);

/// Native gate times in nanoseconds. Defaults are the modeled device's.
struct GateDurations {
    std::int64_t u1_ns = 0;
    std::int64_t u2_ns = 60;
    std::int64_t u3_ns = 120;
    std::int64_t cnot_ns = 720;
};

/// A scheduled gate: kind, ordered targets (control first for CNOT) and
/// duration.
struct GateOp {
    GateKind kind;
    std::array<int, 2> qubits{};
    std::int64_t duration_ns = 0;

    std::span<const int> targets() const {
        return {qubits.data(), static_cast<std::size_t>(kind.arity())};
    }
};

/// Builds a GateOp whose duration is that of the native decomposition.
GateOp make_gate(const GateKind& kind, std::span<const int> targets, const GateDurations& durations = {});
GateOp make_gate(const GateKind& kind, std::initializer_list<int> targets, const GateDurations& durations = {});

/// Unitary matrix. U3(theta, phi, lambda) =
///   [[cos(t/2), -e^{i l} sin(t/2)], [e^{i p} sin(t/2), e^{i(p+l)} cos(t/2)]]
/// and every other single-qubit gate is expressed through it, except RZ
/// which keeps its symmetric phase diag(e^{-i t/2}, e^{i t/2}).
ComplexMatrix matrix_of(const GateKind& kind);

/// Native sequence (U1/U2/U3/CNOT) in application order. The product of
/// the native matrices equals matrix_of(kind) up to a global phase.
std::vector<GateKind> decompose_to_native(const GateKind& kind);

std::int64_t duration_of(const GateKind& kind, const GateDurations& durations);

}  // namespace noisyqaoa
