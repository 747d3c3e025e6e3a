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

#include "noisyqaoa/qaoa.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace noisyqaoa {
namespace {

TEST(Kraus, SetsAreComplete) {
    for (double p : {0.0, 1e-4, 0.08, 0.5, 1.0}) {
        EXPECT_LE(kraus_completeness_error(depolarizing_kraus(p, 1)), 1e-12) << p;
        EXPECT_LE(kraus_completeness_error(depolarizing_kraus(p, 2)), 1e-12) << p;
    }
    for (double t : {0.0, 60.0, 720.0, 45000.0, 1e7}) {
        EXPECT_LE(kraus_completeness_error(amplitude_damping_kraus(t, 45000)), 1e-12) << t;
        EXPECT_LE(kraus_completeness_error(phase_damping_kraus(t, 20000)), 1e-12) << t;
    }
    EXPECT_EQ(depolarizing_kraus(0.1, 2).size(), 16u);
}

TEST(Kraus, RejectsOutOfRangeParameters) {
    EXPECT_THROW(depolarizing_kraus(-0.1, 1), std::invalid_argument);
    EXPECT_THROW(depolarizing_kraus(1.5, 1), std::invalid_argument);
    EXPECT_THROW(depolarizing_kraus(0.1, 3), std::invalid_argument);
    EXPECT_THROW(amplitude_damping_kraus(-1, 100), std::invalid_argument);
    EXPECT_THROW(amplitude_damping_kraus(1, 0), std::invalid_argument);
    EXPECT_THROW(phase_damping_kraus(1, -5), std::invalid_argument);
}

TEST(Kraus, DepolarizingMatchesMaximallyMixedReplacement) {
    std::mt19937_64 rng(4);
    const ComplexMatrix rho0 = oracle::random_density(rng, 2);
    const int t[] = {0, 1};
    const DensityMatrix out = apply_kraus(DensityMatrix(2, rho0), depolarizing_kraus(0.3, 2), t);
    // Full replacement on both qubits: (1-p) rho + p I/4.
    ComplexMatrix expected = rho0;
    expected *= 0.7;
    expected += cplx(0.3 / 4) * ComplexMatrix::identity(4);
    EXPECT_LT(max_abs_diff(out.matrix(), expected), 1e-12);
}

TEST(Kraus, PhaseDampingKeepsPopulations) {
    std::mt19937_64 rng(9);
    const ComplexMatrix rho0 = oracle::random_density(rng, 1);
    const int t[] = {0};
    const DensityMatrix out = apply_kraus(DensityMatrix(1, rho0), phase_damping_kraus(5000, 20000), t);
    EXPECT_NEAR(out.matrix()(0, 0).real(), rho0(0, 0).real(), 1e-15);
    EXPECT_NEAR(out.matrix()(1, 1).real(), rho0(1, 1).real(), 1e-15);
    // Coherence scaled by sqrt(1 - lambda) = exp(-t / 2T2).
    EXPECT_NEAR(std::abs(out.matrix()(0, 1)), std::abs(rho0(0, 1)) * std::exp(-0.125), 1e-12);
}

TEST(Kraus, AmplitudeDampingRelaxesToGround) {
    const int t[] = {0};
    const DensityMatrix out = apply_kraus(DensityMatrix::basis(1, 1), amplitude_damping_kraus(45000, 45000), t);
    EXPECT_NEAR(out.matrix()(1, 1).real(), std::exp(-1.0), 1e-12);
    const DensityMatrix late = apply_kraus(DensityMatrix::basis(1, 1), amplitude_damping_kraus(1e9, 45000), t);
    EXPECT_NEAR(late.matrix()(0, 0).real(), 1.0, 1e-12);
}

TEST(GateError, DepolarizingProbabilityPerGate) {
    DeviceModel dev;
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::u1(0.3), dev), 0.0);
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::rz(0.3), dev), 0.0);
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::u3(1, 2, 3), dev), 2 * 1.5e-3);
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::cnot(), dev), 0.08);
    dev.ge2_scale = 0.5;
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::cnot(), dev), 0.04);
    dev.depolarizing_factor = 1.0;
    EXPECT_DOUBLE_EQ(gate_depolarizing_probability(GateKind::cnot(), dev), 0.02);
}

// Cost block of one edge on a 2-qubit register: populations only pick up the
// two depolarizing steps, (1-p) x + p/4 twice.
TEST(GateError, CostBlockWalkthrough) {
    const cplx d[] = {0.0, 0.5, 0.0, 0.5};
    const DensityMatrix in(2, ComplexMatrix::diagonal(d));
    const Graph edge(2, {{0, 1}});
    const auto gates = build_cost_layer(edge, 1.0);
    const DensityMatrix out = simulate_circuit(gates, DeviceModel{}, {true, false, false}, in);
    const auto pops = out.diagonal();
    const double expected[] = {0.0384, 0.4616, 0.0384, 0.4616};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(pops[i], expected[i], 1e-12);
}

TEST(Simulate, MatchesGateByGateOracle) {
    std::mt19937_64 rng(31);
    DeviceModel dev;
    // Short coherence times so decoherence is visible in a short circuit.
    dev.t1_scale = 0.02;
    dev.t2_scale = 0.03;
    dev.ge1_scale = 10;
    for (int trial = 0; trial < 48; ++trial) {
        const int n = 1 + trial % 3;
        const NoiseToggles toggles{(trial & 1) != 0, (trial & 2) != 0, (trial & 4) != 0};
        const auto gates = oracle::random_circuit(rng, n, 10);
        const DensityMatrix out = simulate_circuit(gates, dev, toggles, n);
        EXPECT_LT(oracle::max_diff(out.matrix(), oracle::noisy_density(gates, dev, toggles, n)), 1e-12);
    }
}

TEST(Simulate, NoiselessEqualsStatevector) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 4;
        const auto gates = oracle::random_circuit(rng, n, 20);
        const DensityMatrix out = simulate_circuit(gates, DeviceModel{}, NoiseToggles::none(), n);
        EXPECT_LT(oracle::max_diff(out.matrix(), oracle::projector(oracle::statevector(gates, n))), 1e-9);
    }
}

TEST(Simulate, InvariantsHoldOverManyNoisyGates) {
    std::mt19937_64 rng(123);
    DeviceModel dev;
    dev.ge1_scale = 20;
    const int n = 3;
    DensityMatrix rho(n, oracle::random_density(rng, n));
    for (int i = 0; i < 1000; ++i) {
        const auto g = oracle::random_circuit(rng, n, 1).front();
        rho = apply_noisy_gate(rho, g, dev, NoiseToggles::all());
        ASSERT_NEAR(rho.matrix().trace().real(), 1.0, 1e-9);
        ASSERT_TRUE(is_hermitian(rho.matrix(), 1e-9));
    }
    EXPECT_NO_THROW(check_invariants(rho, true, 1e-9));
}

TEST(Simulate, IdleQubitsDecohere) {
    // Qubit 1 is excited and never touched; 10 CNOT-length gates on qubit 0
    // still relax it.
    DeviceModel dev;
    dev.durations.u3_ns = 720;
    std::vector<GateOp> gates;
    for (int i = 0; i < 10; ++i) gates.push_back(make_gate(GateKind::u3(0, 0, 0), {0}, dev.durations));
    const DensityMatrix out = simulate_circuit(gates, dev, {false, true, false}, DensityMatrix::basis(2, 2));
    EXPECT_NEAR(out.diagonal()[2], std::exp(-7200.0 / 45000.0), 1e-12);
}

TEST(Simulate, FrameChangesAreFree) {
    std::vector<GateOp> gates = {make_gate(GateKind::h(), {0})};
    const DensityMatrix base = simulate_circuit(gates, DeviceModel{}, NoiseToggles::all(), 1);
    for (int i = 0; i < 5; ++i) gates.push_back(make_gate(GateKind::u1(0.0), {0}));
    const DensityMatrix with_u1 = simulate_circuit(gates, DeviceModel{}, NoiseToggles::all(), 1);
    EXPECT_LT(max_abs_diff(base.matrix(), with_u1.matrix()), 1e-15);
}

TEST(Simulate, RejectsCircuitsOutsideTheRegister) {
    const GateOp far[] = {make_gate(GateKind::h(), {2})};
    EXPECT_THROW(simulate_circuit(far, DeviceModel{}, NoiseToggles::all(), 2), std::invalid_argument);
    EXPECT_THROW(simulate_pure(far, PureState::basis(2, 0)), std::invalid_argument);
    DeviceModel small;
    small.n_qubits = 2;
    const GateOp ok[] = {make_gate(GateKind::h(), {0})};
    EXPECT_THROW(simulate_circuit(ok, small, NoiseToggles::none(), 3), std::invalid_argument);
}

TEST(Device, ConfigRoundTripAndRejection) {
    DeviceModel d;
    d.t1_us = 60;
    d.err_2q = 0.02;
    d.durations.cnot_ns = 400;
    d.t2_scale = 2;
    const DeviceModel back = parse_device_config(to_json(d));
    EXPECT_DOUBLE_EQ(back.t1_us, 60);
    EXPECT_DOUBLE_EQ(back.err_2q, 0.02);
    EXPECT_EQ(back.durations.cnot_ns, 400);
    EXPECT_DOUBLE_EQ(back.t2_ns(), 40000);
    EXPECT_THROW(parse_device_config("{\"t1\": 5}"), std::invalid_argument);
    EXPECT_THROW(parse_device_config("{\"t1_us\": -5}"), std::invalid_argument);
    EXPECT_THROW(parse_device_config("[1, 2]"), std::invalid_argument);
    EXPECT_THROW(parse_device_config("{not json"), std::invalid_argument);
    EXPECT_THROW(parse_device_config("{\"err_2q\": 0.7}"), std::invalid_argument);
    EXPECT_THROW(load_device_config("/nonexistent/device.json"), std::invalid_argument);
}

TEST(Device, SampleConfigLoads) {
    const DeviceModel d = load_device_config(std::string(NOISYQAOA_DATA_DIR) + "/devices/modeled_qc.json");
    EXPECT_EQ(d.n_qubits, 6);
    EXPECT_DOUBLE_EQ(d.t1_ns(), 45000);
    EXPECT_DOUBLE_EQ(d.t2_ns(), 20000);
    EXPECT_DOUBLE_EQ(d.gate_error_1q(), 1.5e-3);
    EXPECT_DOUBLE_EQ(d.gate_error_2q(), 0.04);
}

}  // namespace
}  // namespace noisyqaoa
