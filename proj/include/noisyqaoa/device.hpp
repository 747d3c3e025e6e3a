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

#include "noisyqaoa/gates.hpp"

#include <cstdint>
#include <filesystem>
#include <string>

namespace noisyqaoa {

/// Noise and timing parameters of a fully connected device with identical
/// qubits. Coherence times are in microseconds, gate times in nanoseconds.
struct DeviceModel {
    int n_qubits = 6;
    double t1_us = 45.0;
    double t2_us = 20.0;
    double err_1q = 1.5e-3;
    double err_2q = 4e-2;
    GateDurations durations{};

    double t1_scale = 1.0;
    double t2_scale = 1.0;
    double ge1_scale = 1.0;
    double ge2_scale = 1.0;

    /// Depolarizing probability per unit of reported gate error. The
    /// default of 2 reproduces a 2-qubit depolarizing p = 0.08 for a CNOT
    /// error of 0.04.
    double depolarizing_factor = 2.0;

    double t1_ns() const { return t1_us * t1_scale * 1000.0; }
    double t2_ns() const { return t2_us * t2_scale * 1000.0; }
    double gate_error_1q() const { return err_1q * ge1_scale; }
    double gate_error_2q() const { return err_2q * ge2_scale; }

    /// Throws std::invalid_argument on out-of-range parameters.
    void validate() const;
};

inline std::int64_t duration_of(const GateKind& kind, const DeviceModel& device) {
    return duration_of(kind, device.durations);
}

struct NoiseToggles {
    bool gate_error = false;
    bool relaxation = false;
    bool dephasing = false;

    static NoiseToggles none() { return {}; }
    static NoiseToggles all() { return {true, true, true}; }
    bool any() const { return gate_error || relaxation || dephasing; }
    bool operator==(const NoiseToggles&) const = default;
};

/// Device configuration file (JSON). Every key is optional:
///
///   {
///     "n_qubits": 6,
///     "t1_us": 45.0, "t2_us": 20.0,
///     "err_1q": 1.5e-3, "err_2q": 4e-2,
///     "durations_ns": {"U1": 0, "U2": 60, "U3": 120, "CNOT": 720},
///     "scales": {"t1": 1.0, "t2": 1.0, "ge1": 1.0, "ge2": 1.0},
///     "depolarizing_factor": 2.0
///   }
///
/// Unknown keys are rejected.
DeviceModel parse_device_config(const std::string& text);
DeviceModel load_device_config(const std::filesystem::path& path);
std::string to_json(const DeviceModel& device);

}  // namespace noisyqaoa
