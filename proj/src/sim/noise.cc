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

#include "qarch/sim/noise.h"

#include <stdexcept>
#include <string>

#include "qarch/sim/simulator.h"

namespace qarch {

namespace {

void check_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("probability " + std::to_string(p) + " is outside [0, 1]");
    }
}

}  // namespace

Circuit bitflip_noise_circuit(std::size_t n_qubits, double p, Rng &rng) {
    check_probability(p);
    Circuit c(n_qubits);
    for (std::size_t q = 0; q < n_qubits; q++) {
        if (rng.bernoulli(p)) {
            c.add(GateKind::X, q);
        }
    }
    return c;
}

Circuit pauli_noise_circuit(std::size_t n_qubits, double p, Rng &rng) {
    check_probability(p);
    Circuit c(n_qubits);
    for (std::size_t q = 0; q < n_qubits; q++) {
        double u = rng.uniform();
        if (u < p / 4) {
            c.add(GateKind::X, q);
        } else if (u < p / 2) {
            c.add(GateKind::Y, q);
        } else if (u < 3 * p / 4) {
            c.add(GateKind::Z, q);
        }
    }
    return c;
}

PureState pauli_channel_apply(const PureState &state, double p, Rng &rng) {
    Circuit c = pauli_noise_circuit(state.n_qubits(), p, rng);
    return run_circuit(state, c, {});
}

DensityMatrix depolarize(const DensityMatrix &rho, double p) {
    check_probability(p);
    auto d = static_cast<Eigen::Index>(rho.dim());
    CMatrix out = (1.0 - p) * rho.entries() + (p / static_cast<double>(d)) * CMatrix::Identity(d, d);
    return DensityMatrix(std::move(out));
}

}  // namespace qarch
