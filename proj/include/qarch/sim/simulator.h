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

#include <array>
#include <optional>
#include <span>

#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"

namespace qarch {

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// Matrix of a one-qubit gate, or of the target action of a controlled gate.
Mat2 gate_matrix(GateKind kind, double angle = 0.0);

/// In-place kernel over a raw amplitude buffer of length 2^n_qubits. No validation.
void apply_gate_inplace(std::span<Complex> amps, std::size_t n_qubits, const GateInstance &gate, double angle);

/// Applies `gate` to `state`. `angle` must be supplied iff the gate is parametric.
PureState apply_gate(const PureState &state, const GateInstance &gate, std::optional<double> angle = std::nullopt);

/// Applies every gate of `circuit` in order, reading angles from `theta` by parameter slot.
PureState run_circuit(const PureState &input, const Circuit &circuit, std::span<const double> theta);

/// Unvalidated variant used in hot loops; `amps` must have length 2^circuit.n_qubits().
void run_circuit_inplace(std::span<Complex> amps, const Circuit &circuit, std::span<const double> theta);

/// Full 2^n x 2^n unitary; column k is run_circuit applied to |k>.
CMatrix circuit_unitary(const Circuit &circuit, std::span<const double> theta);

/// Unitary of a single gate on a given register width.
CMatrix gate_unitary(const GateInstance &gate, std::size_t n_qubits, double angle = 0.0);

}  // namespace qarch
