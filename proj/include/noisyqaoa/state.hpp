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

#include <cstdint>
#include <span>
#include <vector>

namespace noisyqaoa {

/// Dense simulation ceiling.
inline constexpr int kMaxQubits = 12;

/// State-vector of n qubits (qubit 0 = least significant index bit).
class PureState {
public:
    PureState(int n_qubits, std::vector<cplx> amplitudes);

    static PureState basis(int n_qubits, std::uint64_t index);
    /// |+>^{\otimes n}
    static PureState plus(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    std::span<const cplx> amplitudes() const { return amplitudes_; }
    std::span<cplx> amplitudes() { return amplitudes_; }

private:
    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

/// Density matrix of n qubits: Hermitian, unit trace, positive semidefinite.
///
/// Construction checks Hermiticity and trace. PSD is checked by
/// check_invariants(), which the evolution functions call in debug builds.
class DensityMatrix {
public:
    DensityMatrix(int n_qubits, ComplexMatrix mat);

    static DensityMatrix basis(int n_qubits, std::uint64_t index);
    static DensityMatrix from_pure(const PureState& psi);
    static DensityMatrix maximally_mixed(int n_qubits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return mat_.rows(); }
    const ComplexMatrix& matrix() const { return mat_; }

    /// Basis-state populations Re(rho_ii).
    std::vector<double> diagonal() const;

    /// Raw access for in-place kernels; callers keep the invariants.
    ComplexMatrix& mutable_matrix() { return mat_; }

private:
    int n_qubits_;
    ComplexMatrix mat_;
};

/// Throws std::logic_error if Hermiticity, trace or (optionally) PSD is
/// violated beyond `tol`.
void check_invariants(const DensityMatrix& rho, bool check_psd = true, double tol = 1e-9);

ComplexMatrix outer(const PureState& psi);

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u, std::span<const int> targets);
PureState apply_unitary(const PureState& psi, const ComplexMatrix& u, std::span<const int> targets);

DensityMatrix apply_kraus(const DensityMatrix& rho, std::span<const ComplexMatrix> kraus, std::span<const int> targets);

/// Max deviation of sum_k E_k^dagger E_k from identity.
double kraus_completeness_error(std::span<const ComplexMatrix> kraus);

double expectation(const PureState& psi, const ComplexMatrix& obs);
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs);

/// sum_i diag_obs[i] * Re(rho_ii).
double expectation_diag(const DensityMatrix& rho, std::span<const double> diag_obs);
double expectation_diag(const PureState& psi, std::span<const double> diag_obs);

/// <psi|rho|psi>, clamped into [0, 1].
double fidelity_to_pure(const PureState& psi, const DensityMatrix& rho);

namespace kernels {

// In-place building blocks on a 2^n x 2^n row-major matrix. Targets are
// assumed validated by the caller.

/// rho <- E~ rho, where E~ is `op` embedded on `targets`.
void left_multiply(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& op, std::span<const int> targets);
/// rho <- rho E~^dagger
void right_multiply_adjoint(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& op, std::span<const int> targets);

/// rho <- U rho U^dagger for a 2x2 U on one qubit.
void unitary_1q(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& u, int target);
/// rho <- D rho D^dagger for D = diag(d0, d1) on one unit-modulus qubit.
void diagonal_1q(ComplexMatrix& rho, int n_qubits, cplx d0, cplx d1, int target);
/// rho <- CNOT rho CNOT (a permutation of rows and columns).
void cnot(ComplexMatrix& rho, int n_qubits, int control, int target);

/// rho <- (1-p) rho + p * I/2^k (x) Tr_targets(rho), for k = targets.size().
void depolarize(ComplexMatrix& rho, int n_qubits, double p, std::span<const int> targets);

/// Amplitude damping (gamma) followed by phase damping (lambda) on one
/// qubit, in closed form.
void damp(ComplexMatrix& rho, int n_qubits, double gamma, double lambda, int target);

void unitary_1q(std::span<cplx> psi, const ComplexMatrix& u, int target);
void diagonal_1q(std::span<cplx> psi, cplx d0, cplx d1, int target);
void cnot(std::span<cplx> psi, int control, int target);

}  // namespace kernels

}  // namespace noisyqaoa
