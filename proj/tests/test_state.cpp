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


#include "noisyqaoa/state.hpp"

#include "noisyqaoa/gates.hpp"
#include "noisyqaoa/noise.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace noisyqaoa {
namespace {

TEST(PureState, ExpectationOfSigmaZ) {
    // 0.8^2 - 0.6^2
    const PureState psi(1, {0.8, 0.6});
    EXPECT_NEAR(expectation(psi, pauli::Z()), 0.28, 1e-12);
    EXPECT_NEAR(expectation(DensityMatrix::from_pure(psi), pauli::Z()), 0.28, 1e-12);
    const double z[] = {1.0, -1.0};
    EXPECT_NEAR(expectation_diag(psi, z), 0.28, 1e-12);
}

TEST(PureState, RejectsBadInput) {
    EXPECT_THROW(PureState(1, {1.0, 1.0}), std::invalid_argument);
    EXPECT_THROW(PureState(2, {1.0, 0.0}), std::invalid_argument);
    EXPECT_THROW(PureState(0, {1.0}), std::invalid_argument);
    EXPECT_THROW(PureState(kMaxQubits + 1, {}), std::invalid_argument);
    EXPECT_THROW(PureState::basis(2, 4), std::invalid_argument);
}

TEST(PureState, PlusStateIsUniform) {
    const PureState plus = PureState::plus(3);
    for (const auto& a : plus.amplitudes()) {
        EXPECT_NEAR(std::abs(a), 1.0 / std::sqrt(8.0), 1e-15);
    }
}

TEST(DensityMatrix, ValidatesHermiticityAndTrace) {
    EXPECT_THROW(DensityMatrix(1, ComplexMatrix{{1, 1}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(1, ComplexMatrix{{0.5, 0}, {0, 0.4}}), std::invalid_argument);
    EXPECT_THROW(DensityMatrix(2, ComplexMatrix::identity(2)), std::invalid_argument);
    EXPECT_NO_THROW(DensityMatrix(1, ComplexMatrix{{0.5, 0}, {0, 0.5}}));
}

TEST(DensityMatrix, Factories) {
    const DensityMatrix b = DensityMatrix::basis(2, 3);
    EXPECT_EQ(b.matrix()(3, 3), cplx(1));
    EXPECT_NEAR(b.matrix().trace().real(), 1.0, 0.0);
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(3);
    for (double p : mixed.diagonal()) EXPECT_NEAR(p, 0.125, 1e-15);
    EXPECT_THROW(DensityMatrix::basis(1, 2), std::invalid_argument);
}

TEST(DensityMatrix, CheckInvariantsCatchesNegativeEigenvalue) {
    // Hermitian, unit trace, eigenvalues 1.5 and -0.5.
    DensityMatrix rho(1, ComplexMatrix{{0.5, 1.0}, {1.0, 0.5}});
    EXPECT_THROW(check_invariants(rho, true), std::logic_error);
    EXPECT_NO_THROW(check_invariants(rho, false));
}

TEST(ApplyUnitary, MatchesDenseEmbedding) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + trial % 3;
        const ComplexMatrix rho0 = oracle::random_density(rng, n);
        const auto gates = oracle::random_circuit(rng, n, 1);
        const auto& g = gates.front();
        const auto t = oracle::targets_of(g);
        const DensityMatrix out = apply_unitary(DensityMatrix(n, rho0), oracle::gate_matrix(g.kind), t);
        const ComplexMatrix expected = oracle::conjugate(oracle::embed(oracle::gate_matrix(g.kind), t, n), rho0);
        EXPECT_LT(oracle::max_diff(out.matrix(), expected), 1e-12) << to_string(g.kind);
    }
}

TEST(ApplyUnitary, ReversedTargetsSwapControlAndTarget) {
    // CNOT on {1, 0}: qubit 1 controls. |10> (index 2) -> |11> (index 3).
    const int t[] = {1, 0};
    const PureState out = apply_unitary(PureState::basis(2, 2), oracle::gate_matrix(GateKind::cnot()), t);
    EXPECT_NEAR(std::abs(out.amplitudes()[3]), 1.0, 1e-15);
}

TEST(ApplyUnitary, RejectsBadTargetsAndNonUnitary) {
    const DensityMatrix rho = DensityMatrix::basis(2, 0);
    const int out_of_range[] = {2};
    const int repeated[] = {0, 0};
    const int one[] = {0};
    EXPECT_THROW(apply_unitary(rho, pauli::X(), out_of_range), std::invalid_argument);
    EXPECT_THROW(apply_unitary(rho, kron(pauli::X(), pauli::X()), repeated), std::invalid_argument);
    EXPECT_THROW(apply_unitary(rho, kron(pauli::X(), pauli::X()), one), std::invalid_argument);
    EXPECT_THROW(apply_unitary(rho, ComplexMatrix{{1, 1}, {0, 1}}, one), std::invalid_argument);
}

TEST(ApplyKraus, RejectsIncompleteSet) {
    const int t[] = {0};
    const std::vector<ComplexMatrix> half{ComplexMatrix{{std::sqrt(0.5), 0}, {0, std::sqrt(0.5)}}};
    EXPECT_THROW(apply_kraus(DensityMatrix::basis(1, 0), half, t), std::invalid_argument);
    EXPECT_THROW(apply_kraus(DensityMatrix::basis(1, 0), std::vector<ComplexMatrix>{}, t), std::invalid_argument);
    EXPECT_NEAR(kraus_completeness_error(half), 0.5, 1e-12);
}

TEST(ApplyKraus, MatchesDenseChannel) {
    std::mt19937_64 rng(8);
    const ComplexMatrix rho0 = oracle::random_density(rng, 3);
    const int t[] = {1};
    const auto k = amplitude_damping_kraus(300, 1000);
    const DensityMatrix out = apply_kraus(DensityMatrix(3, rho0), k, t);
    EXPECT_LT(oracle::max_diff(out.matrix(), oracle::amplitude_damp(rho0, 1 - std::exp(-0.3), 1, 3)), 1e-12);
}

// The in-place kernels against the generic operator-sum path.
TEST(Kernels, AgreeWithGenericPath) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int n = 1; n <= 4; ++n) {
        for (int q = 0; q < n; ++q) {
            const ComplexMatrix rho0 = oracle::random_density(rng, n);
            const ComplexMatrix g = oracle::u3(6 * u(rng), 6 * u(rng), 6 * u(rng));

            ComplexMatrix m = rho0;
            kernels::unitary_1q(m, n, g, q);
            EXPECT_LT(oracle::max_diff(m, oracle::conjugate(oracle::embed(g, {q}, n), rho0)), 1e-12);

            m = rho0;
            const cplx d0 = std::exp(oracle::kI * 0.3), d1 = std::exp(oracle::kI * -1.1);
            kernels::diagonal_1q(m, n, d0, d1, q);
            EXPECT_LT(oracle::max_diff(m, oracle::conjugate(oracle::embed(oracle::mat2(d0, 0, 0, d1), {q}, n), rho0)),
                      1e-12);

            const double gamma = u(rng), lambda = u(rng);
            m = rho0;
            kernels::damp(m, n, gamma, lambda, q);
            EXPECT_LT(
                oracle::max_diff(m, oracle::phase_damp(oracle::amplitude_damp(rho0, gamma, q, n), lambda, q, n)),
                1e-12);

            m = rho0;
            const double p = u(rng);
            const int t[] = {q};
            kernels::depolarize(m, n, p, t);
            EXPECT_LT(oracle::max_diff(m, oracle::depolarize(rho0, p, {q}, n)), 1e-12);

            for (int c = 0; c < n; ++c) {
                if (c == q) continue;
                m = rho0;
                kernels::cnot(m, n, c, q);
                EXPECT_LT(oracle::max_diff(m, oracle::conjugate(
                                                  oracle::embed(oracle::gate_matrix(GateKind::cnot()), {c, q}, n), rho0)),
                          1e-15);
                m = rho0;
                const int pair[] = {c, q};
                kernels::depolarize(m, n, p, pair);
                EXPECT_LT(oracle::max_diff(m, oracle::depolarize(rho0, p, {c, q}, n)), 1e-12);
            }
        }
    }
}

TEST(Kernels, NonHermitianInputIsHandled) {
    // The block kernel does not rely on rho being Hermitian.
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    ComplexMatrix a(8, 8);
    for (auto& x : a.data()) x = cplx(g(rng), g(rng));
    const ComplexMatrix h = oracle::gate_matrix(GateKind::h());
    ComplexMatrix m = a;
    kernels::unitary_1q(m, 3, h, 2);
    EXPECT_LT(oracle::max_diff(m, oracle::conjugate(oracle::embed(h, {2}, 3), a)), 1e-12);
}

TEST(PureKernels, MatchStatevectorOracle) {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + trial % 4;
        const auto gates = oracle::random_circuit(rng, n, 12);
        const auto expected = oracle::statevector(gates, n);
        const PureState out = simulate_pure(gates, PureState::basis(n, 0));
        for (std::size_t i = 0; i < expected.size(); ++i) {
            EXPECT_LT(std::abs(out.amplitudes()[i] - expected[i]), 1e-12);
        }
    }
}

TEST(Fidelity, PureAndMixed) {
    const PureState zero = PureState::basis(1, 0);
    EXPECT_NEAR(fidelity_to_pure(zero, DensityMatrix::basis(1, 0)), 1.0, 1e-15);
    EXPECT_NEAR(fidelity_to_pure(zero, DensityMatrix::basis(1, 1)), 0.0, 1e-15);
    EXPECT_NEAR(fidelity_to_pure(PureState::plus(2), DensityMatrix::maximally_mixed(2)), 0.25, 1e-15);
    EXPECT_THROW(fidelity_to_pure(zero, DensityMatrix::basis(2, 0)), std::invalid_argument);
}

TEST(Expectation, RejectsNonHermitianObservableAndBadLength) {
    const DensityMatrix rho = DensityMatrix::basis(1, 0);
    EXPECT_THROW(expectation(rho, ComplexMatrix{{0, 1}, {0, 0}}), std::invalid_argument);
    EXPECT_THROW(expectation(rho, ComplexMatrix::identity(4)), std::invalid_argument);
    const double three[] = {1, 2, 3};
    EXPECT_THROW(expectation_diag(rho, three), std::invalid_argument);
}

}  // namespace
}  // namespace noisyqaoa
