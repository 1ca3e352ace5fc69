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

#include <span>
#include <vector>

#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"

namespace qarch {

/// Maps (row, col) of a bipartition A|B of an n-qubit register to full basis indices.
///
/// Qubit order inside each group follows the order given; the full index of
/// (a, b) is `index(a, b)`. Group B may be empty (dim_b = 1).
class BipartiteLayout {
   public:
    BipartiteLayout(std::size_t n_qubits, std::span<const std::size_t> group_a, std::span<const std::size_t> group_b);
    explicit BipartiteLayout(std::size_t n_qubits, const QaeSplit &split);

    std::size_t dim_a() const {
        return dim_a_;
    }
    std::size_t dim_b() const {
        return dim_b_;
    }
    std::size_t index(std::size_t a, std::size_t b) const {
        return table_[a * dim_b_ + b];
    }

   private:
    std::size_t dim_a_;
    std::size_t dim_b_;
    std::vector<std::size_t> table_;
};

/// |<a|b>|^2.
double pure_fidelity(const PureState &a, const PureState &b);

/// Uhlmann fidelity Tr[sqrt(sqrt(rho) sigma sqrt(rho))]^2, via Hermitian
/// eigendecompositions with eigenvalues clamped at zero.
double state_fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

/// Reduced state on `keep` (output qubit order = ascending qubit index).
DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const std::size_t> keep);
/// Same as partial_trace(from_pure(state), keep) without forming the full matrix.
DensityMatrix reduced_density(const PureState &state, std::span<const std::size_t> keep);

/// Tr[rho |a><a|], the analytic SWAP-test fidelity for a pure reference.
double reference_overlap(const DensityMatrix &rho, const PureState &reference);

/// Simulates the ancilla + controlled-SWAP interference circuit on
/// |0><0| (x) trash (x) |a><a| and returns 2 P(ancilla = 0) - 1.
double swap_test_expectation(const DensityMatrix &trash_state, const PureState &reference);

/// Fraction of the encoded state's trash marginal that matches `reference`:
/// <a| Tr_A[|psi><psi|] |a>. `encoded` has already been acted on by the encoder.
double trash_overlap(const CVector &encoded, const BipartiteLayout &layout, const CVector &reference);

/// 1 - F(Tr_A[U psi psi^dag U^dag], |a><a|): zero iff the trash matches the reference.
double trash_cost(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference);

/// Local variant: 1 - mean over trash qubits of P(qubit = 0) after encoding.
double local_trash_cost(
    const Circuit &circuit, std::span<const double> theta, const PureState &input, const QaeSplit &split);

/// Round trip: encode with U, trace out the trash, substitute `reference` on the
/// trash, decode with U^dag and return the fidelity with `compare_to`.
double reconstruction_fidelity(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference,
    const PureState &compare_to);
/// Round-trip fidelity against the input itself.
double reconstruction_fidelity(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference);

/// Explicit density-matrix route for the decoded state U^dag (Tr_B[U rho U^dag] (x) |a><a|) U.
DensityMatrix reconstruct_state(
    const Circuit &circuit,
    std::span<const double> theta,
    const PureState &input,
    const QaeSplit &split,
    const PureState &reference);

/// Kronecker product a (x) b.
CMatrix kron(const CMatrix &a, const CMatrix &b);

}  // namespace qarch
