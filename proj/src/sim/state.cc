// Copyright 2026 The qarch Authors
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

#include "qarch/sim/state.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qarch {

std::size_t qubits_for_dim(std::size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) {
        n++;
    }
    return n;
}

PureState::PureState(std::size_t n_qubits)
    : n_qubits_(n_qubits), amplitudes_(CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n_qubits))) {
    amplitudes_[0] = 1.0;
}

PureState::PureState(CVector amplitudes)
    : n_qubits_(qubits_for_dim(static_cast<std::size_t>(amplitudes.size()))), amplitudes_(std::move(amplitudes)) {
    double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTolerance) {
        throw std::invalid_argument("state is not normalized: squared norm " + std::to_string(norm2));
    }
}

PureState PureState::basis(std::size_t n_qubits, std::size_t index) {
    std::size_t dim = std::size_t{1} << n_qubits;
    if (index >= dim) {
        throw std::out_of_range("basis index out of range");
    }
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    v[static_cast<Eigen::Index>(index)] = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(CMatrix entries) : n_qubits_(0), entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("density matrix must be square");
    }
    n_qubits_ = qubits_for_dim(static_cast<std::size_t>(entries_.rows()));
    double asym = (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
    if (asym > kHermitianTolerance) {
        throw std::invalid_argument("density matrix is not Hermitian (deviation " + std::to_string(asym) + ")");
    }
    Complex tr = entries_.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > kTraceTolerance) {
        throw std::invalid_argument("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    // Symmetrize away sub-tolerance asymmetry so downstream eigensolvers see a Hermitian input.
    entries_ = 0.5 * (entries_ + entries_.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> solver(entries_, Eigen::EigenvaluesOnly);
    double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < kEigenvalueFloor) {
        throw std::invalid_argument("density matrix has negative eigenvalue " + std::to_string(min_eig));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState &state) {
    const CVector &a = state.amplitudes();
    return DensityMatrix(a * a.adjoint());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t n_qubits) {
    auto d = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    return DensityMatrix(CMatrix::Identity(d, d) / static_cast<double>(d));
}

QaeSplit QaeSplit::trailing(std::size_t n_qubits, std::size_t n_trash) {
    if (n_trash == 0 || n_trash > n_qubits) {
        throw std::invalid_argument("trash size must be in 1..n_qubits");
    }
    QaeSplit s;
    for (std::size_t q = 0; q < n_qubits; q++) {
        (q < n_qubits - n_trash ? s.latent : s.trash).push_back(q);
    }
    return s;
}

void QaeSplit::validate(std::size_t n_qubits) const {
    if (trash.empty()) {
        throw std::invalid_argument("QAE split needs at least one trash qubit");
    }
    std::vector<int> seen(n_qubits, 0);
    for (const auto *group : {&latent, &trash}) {
        for (std::size_t q : *group) {
            if (q >= n_qubits) {
                throw std::out_of_range("QAE split qubit " + std::to_string(q) + " out of range");
            }
            seen[q]++;
        }
    }
    if (std::any_of(seen.begin(), seen.end(), [](int c) {
            return c != 1;
        })) {
        throw std::invalid_argument("QAE split must partition the register into disjoint latent/trash sets");
    }
}

}  // namespace qarch
