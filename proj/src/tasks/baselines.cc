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

#include "qarch/tasks/baselines.h"

#include <stdexcept>

namespace qarch {

Circuit rz_crx_ansatz(std::size_t n_qubits, std::size_t layers) {
    Circuit c(n_qubits);
    for (std::size_t l = 0; l < layers; l++) {
        for (std::size_t q = 0; q < n_qubits; q++) {
            c.add(GateKind::RZ, q);
        }
        if (n_qubits < 2) {
            continue;
        }
        // Two qubits form a single pair, not a ring.
        std::size_t ring = n_qubits == 2 ? 1 : n_qubits;
        for (std::size_t q = 0; q < ring; q++) {
            c.add(GateKind::CRX, q, (q + 1) % n_qubits);
        }
    }
    return c;
}

Circuit ry_cnot_ansatz(std::size_t n_qubits, std::size_t layers) {
    Circuit c(n_qubits);
    for (std::size_t l = 0; l < layers; l++) {
        for (std::size_t q = 0; q < n_qubits; q++) {
            c.add(GateKind::RY, q);
        }
        for (std::size_t q = 0; q + 1 < n_qubits; q++) {
            c.add(GateKind::CNOT, q, q + 1);
        }
    }
    return c;
}

Circuit baseline_circuit(const TaskSpec &task) {
    switch (task.kind) {
        case TaskKind::Denoise:
            return rz_crx_ansatz(task.n_qubits, 8);
        case TaskKind::ImageCompress:
        case TaskKind::StateCompress:
            return ry_cnot_ansatz(task.n_qubits, 5);
        case TaskKind::UnitaryRegen:
            break;
    }
    throw std::invalid_argument("unitary regeneration has no baseline circuit; use random search");
}

}  // namespace qarch
