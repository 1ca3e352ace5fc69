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

#include "qarch/sim/encoding.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qarch {

PureState amplitude_encode(std::span<const double> x) {
    if (x.empty()) {
        throw std::invalid_argument("amplitude_encode: empty input");
    }
    std::size_t n = 1;
    while ((std::size_t{1} << n) < x.size()) {
        n++;
    }
    double norm2 = 0.0;
    for (double v : x) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("amplitude_encode: non-finite entry");
        }
        norm2 += v * v;
    }
    if (norm2 == 0.0) {
        throw std::invalid_argument("amplitude_encode: all-zero input cannot be normalized");
    }
    double inv = 1.0 / std::sqrt(norm2);
    CVector amps = CVector::Zero(static_cast<Eigen::Index>(std::size_t{1} << n));
    for (std::size_t i = 0; i < x.size(); i++) {
        amps[static_cast<Eigen::Index>(i)] = x[i] * inv;
    }
    return PureState(std::move(amps));
}

PureState ghz_state(std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("ghz_state: n_qubits must be at least 1");
    }
    // Same constant as the H gate so prepared and analytic GHZ agree bit for bit.
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    CVector amps = CVector::Zero(dim);
    amps[0] = std::numbers::sqrt2 / 2.0;
    amps[dim - 1] = std::numbers::sqrt2 / 2.0;
    return PureState(std::move(amps));
}

Circuit ghz_prep_circuit(std::size_t n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("ghz_prep_circuit: n_qubits must be at least 1");
    }
    Circuit c(n_qubits);
    c.add(GateKind::H, 0);
    for (std::size_t q = 0; q + 1 < n_qubits; q++) {
        c.add(GateKind::CNOT, q, q + 1);
    }
    return c;
}

}  // namespace qarch
