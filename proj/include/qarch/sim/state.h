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

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace qarch {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;

/// Basis index convention: qubit 0 is the most significant bit, so |q0 q1 ... q_{n-1}>
/// has index sum_k q_k 2^(n-1-k).
inline std::size_t qubit_stride(std::size_t n_qubits, std::size_t q) {
    return std::size_t{1} << (n_qubits - 1 - q);
}

/// Normalized state vector of an n-qubit register.
class PureState {
   public:
    /// |0...0> on n qubits.
    explicit PureState(std::size_t n_qubits);
    /// Validates length 2^n and unit norm (within kNormTolerance).
    explicit PureState(CVector amplitudes);

    static PureState basis(std::size_t n_qubits, std::size_t index);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(amplitudes_.size());
    }
    const CVector &amplitudes() const {
        return amplitudes_;
    }
    Complex operator[](std::size_t i) const {
        return amplitudes_[static_cast<Eigen::Index>(i)];
    }

   private:
    std::size_t n_qubits_;
    CVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix on n qubits.
class DensityMatrix {
   public:
    /// Validates shape, hermiticity, trace and the eigenvalue floor.
    explicit DensityMatrix(CMatrix entries);

    static DensityMatrix from_pure(const PureState &state);
    static DensityMatrix maximally_mixed(std::size_t n_qubits);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    const CMatrix &entries() const {
        return entries_;
    }
    Complex operator()(std::size_t r, std::size_t c) const {
        return entries_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }

   private:
    std::size_t n_qubits_;
    CMatrix entries_;
};

/// Latent/trash partition of a QAE register.
struct QaeSplit {
    std::vector<std::size_t> latent;
    std::vector<std::size_t> trash;

    /// Latent = the first n - n_trash qubits, trash = the highest-index qubits.
    static QaeSplit trailing(std::size_t n_qubits, std::size_t n_trash);
    /// Throws unless latent and trash are disjoint, cover 0..n-1 and trash is nonempty.
    void validate(std::size_t n_qubits) const;
    bool operator==(const QaeSplit &) const = default;
};

/// Returns log2(dim) if dim is a power of two (>= 1), otherwise throws.
std::size_t qubits_for_dim(std::size_t dim);

}  // namespace qarch
