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

#include "qarch/sim/gates.h"
#include "qarch/tasks/task.h"

namespace qarch {

/// `layers` x (RZ on every qubit, then CRX on the ring (0,1), (1,2), ..., (n-1,0)).
/// Eight layers on 3 qubits give the 48-parameter denoising baseline.
Circuit rz_crx_ansatz(std::size_t n_qubits, std::size_t layers);

/// `layers` x (RY on every qubit, then the CNOT chain (0,1), ..., (n-2,n-1)).
Circuit ry_cnot_ansatz(std::size_t n_qubits, std::size_t layers);

/// Denoising: rz_crx_ansatz(n, 8). Compression tasks: ry_cnot_ansatz(n, 5).
/// Unitary regeneration has no fixed baseline (random search plays that role)
/// and throws std::invalid_argument.
Circuit baseline_circuit(const TaskSpec &task);

}  // namespace qarch
