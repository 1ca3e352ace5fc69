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

#include "qarch/common/rng.h"
#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"

namespace qarch {

/// Independently per qubit, an X gate with probability p (bit-flip channel sample).
Circuit bitflip_noise_circuit(std::size_t n_qubits, double p, Rng &rng);

/// Independently per qubit: I with probability 1 - 3p/4, else X, Y or Z with p/4 each.
/// Identity draws are omitted from the returned circuit.
Circuit pauli_noise_circuit(std::size_t n_qubits, double p, Rng &rng);

/// Applies one sample of the per-qubit Pauli channel to `state`.
PureState pauli_channel_apply(const PureState &state, double p, Rng &rng);

/// (1 - p) rho + p I / d with d the Hilbert dimension of rho.
DensityMatrix depolarize(const DensityMatrix &rho, double p);

}  // namespace qarch
