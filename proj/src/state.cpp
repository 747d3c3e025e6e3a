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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace noisyqaoa {

namespace {

constexpr double kStructTol = 1e-9;

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) + "], got " +
                                    std::to_string(n));
    }
}

void check_targets(int n_qubits, const ComplexMatrix& op, std::span<const int> targets) {
    if (targets.empty()) {
        throw std::invalid_argument("operator needs at least one target qubit");
    }
    for (std::size_t a = 0; a < targets.size(); ++a) {
        if (targets[a] < 0 || targets[a] >= n_qubits) {
            throw std::invalid_argument("target qubit " + std::to_string(targets[a]) + " out of range");
        }
        for (std::size_t b = a + 1; b < targets.size(); ++b) {
            if (targets[a] == targets[b]) {
                throw std::invalid_argument("target qubits must be distinct");
            }
        }
    }
    const std::size_t local_dim = std::size_t{1} << targets.size();
    if (op.rows() != local_dim || op.cols() != local_dim) {
        throw std::invalid_argument("operator dimension does not match target count");
    }
}

struct LocalIndex {
    std::vector<std::size_t> offsets;
    std::size_t mask = 0;
};

LocalIndex local_index(std::span<const int> targets) {
    const std::size_t k = targets.size();
    LocalIndex li;
    li.offsets.assign(std::size_t{1} << k, 0);
    for (std::size_t l = 0; l < li.offsets.size(); ++l) {
        for (std::size_t m = 0; m < k; ++m) {
            if ((l >> (k - 1 - m)) & 1U) {
                li.offsets[l] |= std::size_t{1} << targets[m];
            }
        }
    }
    for (int t : targets) {
        li.mask |= std::size_t{1} << t;
    }
    return li;
}

void debug_check(const DensityMatrix& rho) {
#ifndef NDEBUG
    check_invariants(rho, true);
#else
    (void)rho;
#endif
}

}  // namespace

// ---------------------------------------------------------------- PureState

PureState::PureState(int n_qubits, std::vector<cplx> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amplitudes_.size() != (std::size_t{1} << n_qubits)) {
        throw std::invalid_argument("PureState: amplitude vector must have length 2^n");
    }
    double norm = 0.0;
    for (const auto& a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("PureState: non-finite amplitude");
        }
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > kStructTol) {
        throw std::invalid_argument("PureState: amplitudes are not normalized");
    }
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    std::vector<cplx> amps(std::size_t{1} << n_qubits);
    if (index >= amps.size()) {
        throw std::invalid_argument("PureState::basis: index out of range");
    }
    amps[index] = 1.0;
    return PureState(n_qubits, std::move(amps));
}

PureState PureState::plus(int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    return PureState(n_qubits, std::vector<cplx>(d, 1.0 / std::sqrt(static_cast<double>(d))));
}

// ------------------------------------------------------------ DensityMatrix

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix mat) : n_qubits_(n_qubits), mat_(std::move(mat)) {
    check_qubit_count(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    if (mat_.rows() != d || mat_.cols() != d) {
        throw std::invalid_argument("DensityMatrix: matrix must be 2^n x 2^n");
    }
    if (!mat_.all_finite()) {
        throw std::invalid_argument("DensityMatrix: non-finite entry");
    }
    if (!is_hermitian(mat_, kStructTol)) {
        throw std::invalid_argument("DensityMatrix: matrix is not Hermitian");
    }
    if (std::abs(mat_.trace() - 1.0) > kStructTol) {
        throw std::invalid_argument("DensityMatrix: trace is not 1");
    }
}

DensityMatrix DensityMatrix::basis(int n_qubits, std::uint64_t index) {
    check_qubit_count(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    if (index >= d) {
        throw std::invalid_argument("DensityMatrix::basis: index out of range");
    }
    ComplexMatrix m(d, d);
    m(index, index) = 1.0;
    return DensityMatrix(n_qubits, std::move(m));
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) { return DensityMatrix(psi.n_qubits(), outer(psi)); }

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
    check_qubit_count(n_qubits);
    const std::size_t d = std::size_t{1} << n_qubits;
    ComplexMatrix m = ComplexMatrix::identity(d);
    m *= 1.0 / static_cast<double>(d);
    return DensityMatrix(n_qubits, std::move(m));
}

std::vector<double> DensityMatrix::diagonal() const {
    std::vector<double> diag(dim());
    for (std::size_t i = 0; i < diag.size(); ++i) {
        diag[i] = mat_(i, i).real();
    }
    return diag;
}

void check_invariants(const DensityMatrix& rho, bool check_psd, double tol) {
    const auto& m = rho.matrix();
    if (!is_hermitian(m, tol)) {
        throw std::logic_error("density matrix lost Hermiticity");
    }
    if (std::abs(m.trace() - 1.0) > tol) {
        throw std::logic_error("density matrix lost unit trace");
    }
    if (check_psd && min_eigenvalue(m) < -tol) {
        throw std::logic_error("density matrix lost positivity");
    }
}

ComplexMatrix outer(const PureState& psi) {
    const auto amps = psi.amplitudes();
    ComplexMatrix m(amps.size(), amps.size());
    for (std::size_t r = 0; r < amps.size(); ++r) {
        for (std::size_t c = 0; c < amps.size(); ++c) {
            m(r, c) = amps[r] * std::conj(amps[c]);
        }
    }
    return m;
}

// ---------------------------------------------------------------- evolution

DensityMatrix apply_unitary(const DensityMatrix& rho, const ComplexMatrix& u, std::span<const int> targets) {
    check_targets(rho.n_qubits(), u, targets);
    if (!is_unitary(u, kStructTol)) {
        throw std::invalid_argument("apply_unitary: operator is not unitary");
    }
    DensityMatrix out = rho;
    kernels::left_multiply(out.mutable_matrix(), rho.n_qubits(), u, targets);
    kernels::right_multiply_adjoint(out.mutable_matrix(), rho.n_qubits(), u, targets);
    debug_check(out);
    return out;
}

PureState apply_unitary(const PureState& psi, const ComplexMatrix& u, std::span<const int> targets) {
    check_targets(psi.n_qubits(), u, targets);
    if (!is_unitary(u, kStructTol)) {
        throw std::invalid_argument("apply_unitary: operator is not unitary");
    }
    const LocalIndex li = local_index(targets);
    std::vector<cplx> amps(psi.amplitudes().begin(), psi.amplitudes().end());
    std::vector<cplx> v(li.offsets.size());
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if (base & li.mask) {
            continue;
        }
        for (std::size_t m = 0; m < v.size(); ++m) {
            v[m] = amps[base + li.offsets[m]];
        }
        for (std::size_t l = 0; l < v.size(); ++l) {
            cplx acc = 0.0;
            for (std::size_t m = 0; m < v.size(); ++m) {
                acc += u(l, m) * v[m];
            }
            amps[base + li.offsets[l]] = acc;
        }
    }
    return PureState(psi.n_qubits(), std::move(amps));
}

double kraus_completeness_error(std::span<const ComplexMatrix> kraus) {
    if (kraus.empty()) {
        throw std::invalid_argument("Kraus set is empty");
    }
    ComplexMatrix sum(kraus.front().cols(), kraus.front().cols());
    for (const auto& e : kraus) {
        sum += e.adjoint() * e;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(sum.rows()));
}

DensityMatrix apply_kraus(const DensityMatrix& rho, std::span<const ComplexMatrix> kraus,
                          std::span<const int> targets) {
    if (kraus.empty()) {
        throw std::invalid_argument("apply_kraus: empty Kraus set");
    }
    for (const auto& e : kraus) {
        check_targets(rho.n_qubits(), e, targets);
    }
    if (kraus_completeness_error(kraus) > kStructTol) {
        throw std::invalid_argument("apply_kraus: Kraus set is not complete");
    }
    ComplexMatrix acc(rho.dim(), rho.dim());
    for (const auto& e : kraus) {
        ComplexMatrix term = rho.matrix();
        kernels::left_multiply(term, rho.n_qubits(), e, targets);
        kernels::right_multiply_adjoint(term, rho.n_qubits(), e, targets);
        acc += term;
    }
    DensityMatrix out(rho.n_qubits(), std::move(acc));
    debug_check(out);
    return out;
}

// -------------------------------------------------------------- observables

namespace {

double real_checked(cplx value, const char* what) {
    if (std::abs(value.imag()) > kStructTol) {
        throw std::logic_error(std::string(what) + ": imaginary residue exceeds tolerance");
    }
    return value.real();
}

void check_observable(const ComplexMatrix& obs, std::size_t dim) {
    if (obs.rows() != dim || obs.cols() != dim) {
        throw std::invalid_argument("expectation: observable dimension mismatch");
    }
    if (!is_hermitian(obs, kStructTol)) {
        throw std::invalid_argument("expectation: observable is not Hermitian");
    }
}

}  // namespace

double expectation(const PureState& psi, const ComplexMatrix& obs) {
    check_observable(obs, psi.dim());
    const auto a = psi.amplitudes();
    cplx acc = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < a.size(); ++c) {
            row += obs(r, c) * a[c];
        }
        acc += std::conj(a[r]) * row;
    }
    return real_checked(acc, "expectation");
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
    check_observable(obs, rho.dim());
    const auto& m = rho.matrix();
    cplx acc = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            acc += m(i, j) * obs(j, i);
        }
    }
    return real_checked(acc, "expectation");
}

double expectation_diag(const DensityMatrix& rho, std::span<const double> diag_obs) {
    if (diag_obs.size() != rho.dim()) {
        throw std::invalid_argument("expectation_diag: observable length must be 2^n");
    }
    const auto& m = rho.matrix();
    double acc = 0.0;
    for (std::size_t i = 0; i < diag_obs.size(); ++i) {
        acc += diag_obs[i] * m(i, i).real();
    }
    return acc;
}

double expectation_diag(const PureState& psi, std::span<const double> diag_obs) {
    if (diag_obs.size() != psi.dim()) {
        throw std::invalid_argument("expectation_diag: observable length must be 2^n");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < diag_obs.size(); ++i) {
        acc += diag_obs[i] * std::norm(psi.amplitudes()[i]);
    }
    return acc;
}

double fidelity_to_pure(const PureState& psi, const DensityMatrix& rho) {
    if (psi.dim() != rho.dim()) {
        throw std::invalid_argument("fidelity_to_pure: dimension mismatch");
    }
    const auto a = psi.amplitudes();
    const auto& m = rho.matrix();
    cplx acc = 0.0;
    for (std::size_t r = 0; r < a.size(); ++r) {
        cplx row = 0.0;
        for (std::size_t c = 0; c < a.size(); ++c) {
            row += m(r, c) * a[c];
        }
        acc += std::conj(a[r]) * row;
    }
    const double f = real_checked(acc, "fidelity_to_pure");
    if (f < -kStructTol || f > 1.0 + kStructTol) {
        throw std::logic_error("fidelity_to_pure: value outside [0, 1]");
    }
    return std::clamp(f, 0.0, 1.0);
}

// ------------------------------------------------------------------ kernels

namespace kernels {

void left_multiply(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& op, std::span<const int> targets) {
    const std::size_t d = std::size_t{1} << n_qubits;
    const LocalIndex li = local_index(targets);
    const std::size_t L = li.offsets.size();
    std::vector<cplx> v(L);
    for (std::size_t base = 0; base < d; ++base) {
        if (base & li.mask) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t m = 0; m < L; ++m) {
                v[m] = rho(base + li.offsets[m], j);
            }
            for (std::size_t l = 0; l < L; ++l) {
                cplx acc = 0.0;
                for (std::size_t m = 0; m < L; ++m) {
                    acc += op(l, m) * v[m];
                }
                rho(base + li.offsets[l], j) = acc;
            }
        }
    }
}

void right_multiply_adjoint(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& op,
                            std::span<const int> targets) {
    const std::size_t d = std::size_t{1} << n_qubits;
    const LocalIndex li = local_index(targets);
    const std::size_t L = li.offsets.size();
    std::vector<cplx> v(L);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t base = 0; base < d; ++base) {
            if (base & li.mask) {
                continue;
            }
            for (std::size_t m = 0; m < L; ++m) {
                v[m] = rho(i, base + li.offsets[m]);
            }
            for (std::size_t l = 0; l < L; ++l) {
                cplx acc = 0.0;
                for (std::size_t m = 0; m < L; ++m) {
                    acc += v[m] * std::conj(op(l, m));
                }
                rho(i, base + li.offsets[l]) = acc;
            }
        }
    }
}

// Both sides at once on each 2x2 block {r, r|bit} x {c, c|bit}: rows r and
// r|bit are streamed together, so every access is contiguous.
void unitary_1q(ComplexMatrix& rho, int n_qubits, const ComplexMatrix& u, int target) {
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    const cplx v00 = std::conj(u00), v01 = std::conj(u01), v10 = std::conj(u10), v11 = std::conj(u11);
    cplx* data = rho.data().data();
    for (std::size_t hi = 0; hi < d; hi += 2 * bit) {
        for (std::size_t lo = 0; lo < bit; ++lo) {
            cplx* r0 = data + (hi + lo) * d;
            cplx* r1 = r0 + bit * d;
            for (std::size_t chi = 0; chi < d; chi += 2 * bit) {
                for (std::size_t clo = 0; clo < bit; ++clo) {
                    const std::size_t c0 = chi + clo;
                    const std::size_t c1 = c0 + bit;
                    // U B
                    const cplx a = u00 * r0[c0] + u01 * r1[c0];
                    const cplx b = u00 * r0[c1] + u01 * r1[c1];
                    const cplx c = u10 * r0[c0] + u11 * r1[c0];
                    const cplx e = u10 * r0[c1] + u11 * r1[c1];
                    // (U B) U^dagger
                    r0[c0] = a * v00 + b * v01;
                    r0[c1] = a * v10 + b * v11;
                    r1[c0] = c * v00 + e * v01;
                    r1[c1] = c * v10 + e * v11;
                }
            }
        }
    }
}

void cnot(ComplexMatrix& rho, int n_qubits, int control, int target) {
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    cplx* data = rho.data().data();
    // Rows, then columns within each row.
    for (std::size_t r = 0; r < d; ++r) {
        if ((r & cbit) && !(r & tbit)) {
            std::swap_ranges(data + r * d, data + (r + 1) * d, data + (r | tbit) * d);
        }
    }
    for (std::size_t r = 0; r < d; ++r) {
        cplx* row = data + r * d;
        for (std::size_t c = 0; c < d; ++c) {
            if ((c & cbit) && !(c & tbit)) {
                std::swap(row[c], row[c | tbit]);
            }
        }
    }
}

void diagonal_1q(ComplexMatrix& rho, int n_qubits, cplx d0, cplx d1, int target) {
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    // rho_ij *= d_{b_i} conj(d_{b_j}); equal bits pick up |d|^2 = 1.
    const cplx up = d0 * std::conj(d1);
    const cplx down = std::conj(up);
    cplx* data = rho.data().data();
    for (std::size_t i = 0; i < d; ++i) {
        cplx* row = data + i * d;
        const cplx f = (i & bit) ? down : up;
        for (std::size_t hi = 0; hi < d; hi += 2 * bit) {
            cplx* block = row + hi + ((i & bit) ? 0 : bit);
            for (std::size_t lo = 0; lo < bit; ++lo) {
                block[lo] *= f;
            }
        }
    }
}

void depolarize(ComplexMatrix& rho, int n_qubits, double p, std::span<const int> targets) {
    if (p == 0.0) {
        return;
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    const LocalIndex li = local_index(targets);
    const std::size_t L = li.offsets.size();
    std::vector<std::size_t> bases;
    bases.reserve(d / L);
    for (std::size_t b = 0; b < d; ++b) {
        if (!(b & li.mask)) bases.push_back(b);
    }
    // Partial traces over the targets, taken before scaling.
    const std::size_t nb = bases.size();
    std::vector<cplx> sigma(nb * nb);
    for (std::size_t a = 0; a < nb; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
            cplx acc = 0.0;
            for (std::size_t l = 0; l < L; ++l) {
                acc += rho(bases[a] + li.offsets[l], bases[b] + li.offsets[l]);
            }
            sigma[a * nb + b] = acc;
        }
    }
    rho *= 1.0 - p;
    const double mix = p / static_cast<double>(L);
    for (std::size_t a = 0; a < nb; ++a) {
        for (std::size_t b = 0; b < nb; ++b) {
            const cplx add = mix * sigma[a * nb + b];
            for (std::size_t l = 0; l < L; ++l) {
                rho(bases[a] + li.offsets[l], bases[b] + li.offsets[l]) += add;
            }
        }
    }
}

void damp(ComplexMatrix& rho, int n_qubits, double gamma, double lambda, int target) {
    if (gamma == 0.0 && lambda == 0.0) {
        return;
    }
    const std::size_t d = std::size_t{1} << n_qubits;
    const std::size_t bit = std::size_t{1} << target;
    const double coherence = std::sqrt(1.0 - gamma) * std::sqrt(1.0 - lambda);
    const double survive = 1.0 - gamma;
    cplx* data = rho.data().data();
    for (std::size_t hi = 0; hi < d; hi += 2 * bit) {
        for (std::size_t lo = 0; lo < bit; ++lo) {
            cplx* r0 = data + (hi + lo) * d;
            cplx* r1 = r0 + bit * d;
            for (std::size_t chi = 0; chi < d; chi += 2 * bit) {
                for (std::size_t clo = 0; clo < bit; ++clo) {
                    const std::size_t c0 = chi + clo;
                    const std::size_t c1 = c0 + bit;
                    r0[c0] += gamma * r1[c1];
                    r1[c1] *= survive;
                    r0[c1] *= coherence;
                    r1[c0] *= coherence;
                }
            }
        }
    }
}

void unitary_1q(std::span<cplx> psi, const ComplexMatrix& u, int target) {
    const std::size_t d = psi.size();
    const std::size_t bit = std::size_t{1} << target;
    const cplx u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::size_t hi = 0; hi < d; hi += 2 * bit) {
        for (std::size_t lo = 0; lo < bit; ++lo) {
            const cplx a = psi[hi + lo];
            const cplx b = psi[hi + lo + bit];
            psi[hi + lo] = u00 * a + u01 * b;
            psi[hi + lo + bit] = u10 * a + u11 * b;
        }
    }
}

void diagonal_1q(std::span<cplx> psi, cplx d0, cplx d1, int target) {
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t x = 0; x < psi.size(); ++x) {
        psi[x] *= (x & bit) ? d1 : d0;
    }
}

void cnot(std::span<cplx> psi, int control, int target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t x = 0; x < psi.size(); ++x) {
        if ((x & cbit) && !(x & tbit)) {
            std::swap(psi[x], psi[x | tbit]);
        }
    }
}

}  // namespace kernels

}  // namespace noisyqaoa
