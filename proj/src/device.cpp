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

#include "noisyqaoa/device.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace noisyqaoa {

using nlohmann::json;

void DeviceModel::validate() const {
    auto positive = [](double v, const char* name) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::invalid_argument(std::string("device: ") + name + " must be positive and finite");
        }
    };
    if (n_qubits < 1) {
        throw std::invalid_argument("device: n_qubits must be >= 1");
    }
    positive(t1_us, "t1_us");
    positive(t2_us, "t2_us");
    positive(t1_scale, "t1 scale");
    positive(t2_scale, "t2 scale");
    if (!(ge1_scale >= 0.0) || !(ge2_scale >= 0.0) || !(depolarizing_factor >= 0.0)) {
        throw std::invalid_argument("device: error scales must be non-negative");
    }
    for (double e : {err_1q, err_2q}) {
        if (!(e >= 0.0 && e <= 1.0)) {
            throw std::invalid_argument("device: gate error must lie in [0, 1]");
        }
    }
    for (double p : {gate_error_1q() * depolarizing_factor, gate_error_2q() * depolarizing_factor}) {
        if (p > 1.0) {
            throw std::invalid_argument("device: scaled depolarizing probability exceeds 1");
        }
    }
    const auto& d = durations;
    if (d.u1_ns < 0 || d.u2_ns < 0 || d.u3_ns < 0 || d.cnot_ns < 0) {
        throw std::invalid_argument("device: gate durations must be non-negative");
    }
}

namespace {

template <typename T>
void read(const json& obj, const char* key, T& out) {
    if (auto it = obj.find(key); it != obj.end()) {
        out = it->get<T>();
    }
}

void reject_unknown(const json& obj, std::initializer_list<const char*> known, const char* where) {
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw std::invalid_argument(std::string("device config: unknown key '") + key + "' in " + where);
        }
    }
}

}  // namespace

DeviceModel parse_device_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text, nullptr, true, true);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("device config: ") + e.what());
    }
    if (!root.is_object()) {
        throw std::invalid_argument("device config: top level must be an object");
    }
    reject_unknown(root,
                   {"n_qubits", "t1_us", "t2_us", "err_1q", "err_2q", "durations_ns", "scales",
                    "depolarizing_factor"},
                   "top level");
    DeviceModel d;
    try {
        read(root, "n_qubits", d.n_qubits);
        read(root, "t1_us", d.t1_us);
        read(root, "t2_us", d.t2_us);
        read(root, "err_1q", d.err_1q);
        read(root, "err_2q", d.err_2q);
        read(root, "depolarizing_factor", d.depolarizing_factor);
        if (auto it = root.find("durations_ns"); it != root.end()) {
            reject_unknown(*it, {"U1", "U2", "U3", "CNOT"}, "durations_ns");
            read(*it, "U1", d.durations.u1_ns);
            read(*it, "U2", d.durations.u2_ns);
            read(*it, "U3", d.durations.u3_ns);
            read(*it, "CNOT", d.durations.cnot_ns);
        }
        if (auto it = root.find("scales"); it != root.end()) {
            reject_unknown(*it, {"t1", "t2", "ge1", "ge2"}, "scales");
            read(*it, "t1", d.t1_scale);
            read(*it, "t2", d.t2_scale);
            read(*it, "ge1", d.ge1_scale);
            read(*it, "ge2", d.ge2_scale);
        }
    } catch (const json::type_error& e) {
        throw std::invalid_argument(std::string("device config: ") + e.what());
    }
    d.validate();
    return d;
}

DeviceModel load_device_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open device config " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_device_config(ss.str());
}

std::string to_json(const DeviceModel& d) {
    json j = {
        {"n_qubits", d.n_qubits},
        {"t1_us", d.t1_us},
        {"t2_us", d.t2_us},
        {"err_1q", d.err_1q},
        {"err_2q", d.err_2q},
        {"durations_ns",
         {{"U1", d.durations.u1_ns}, {"U2", d.durations.u2_ns}, {"U3", d.durations.u3_ns}, {"CNOT", d.durations.cnot_ns}}},
        {"scales", {{"t1", d.t1_scale}, {"t2", d.t2_scale}, {"ge1", d.ge1_scale}, {"ge2", d.ge2_scale}}},
        {"depolarizing_factor", d.depolarizing_factor},
    };
    return j.dump();
}

}  // namespace noisyqaoa
