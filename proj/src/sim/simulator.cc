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

#include "qarch/sim/simulator.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qarch {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_theta(const Circuit &circuit, std::span<const double> theta) {
    if (theta.size() != circuit.n_params()) {
        throw std::invalid_argument(
            "circuit has " + std::to_string(circuit.n_params()) + " parameters but theta has " +
            std::to_string(theta.size()));
    }
}

}  // namespace

Mat2 gate_matrix(GateKind kind, double angle) {
    const double r = std::numbers::sqrt2 / 2.0;
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    switch (kind) {
        case GateKind::H:
            return {r, r, r, -r};
        case GateKind::S:
            return {1.0, 0.0, 0.0, kI};
        case GateKind::T:
            return {1.0, 0.0, 0.0, std::exp(kI * (std::numbers::pi / 4.0))};
        case GateKind::I:
            return {1.0, 0.0, 0.0, 1.0};
        case GateKind::X:
        case GateKind::CNOT:
            return {0.0, 1.0, 1.0, 0.0};
        case GateKind::Y:
            return {0.0, -kI, kI, 0.0};
        case GateKind::Z:
            return {1.0, 0.0, 0.0, -1.0};
        case GateKind::RX:
        case GateKind::CRX:
            return {c, -kI * s, -kI * s, c};
        case GateKind::RY:
        case GateKind::CRY:
            return {c, -s, s, c};
        case GateKind::RZ:
        case GateKind::CRZ:
            return {std::exp(-kI * (angle / 2.0)), 0.0, 0.0, std::exp(kI * (angle / 2.0))};
    }
    throw std::logic_error("unreachable gate kind");
}

void apply_gate_inplace(std::span<Complex> amps, std::size_t n_qubits, const GateInstance &gate, double angle) {
    const Mat2 m = gate_matrix(gate.kind, angle);
    const std::size_t dim = amps.size();
    if (gate.arity() == 1) {
        const std::size_t stride = qubit_stride(n_qubits, gate.qubits[0]);
        for (std::size_t base = 0; base < dim; base += 2 * stride) {
            for (std::size_t i = base; i < base + stride; i++) {
                Complex a0 = amps[i];
                Complex a1 = amps[i + stride];
                amps[i] = m[0] * a0 + m[1] * a1;
                amps[i + stride] = m[2] * a0 + m[3] * a1;
            }
        }
        return;
    }
    const std::size_t cbit = qubit_stride(n_qubits, gate.qubits[0]);
    const std::size_t tbit = qubit_stride(n_qubits, gate.qubits[1]);
    for (std::size_t i = 0; i < dim; i++) {
        if ((i & cbit) == 0 || (i & tbit) != 0) {
            continue;
        }
        std::size_t j = i | tbit;
        Complex a0 = amps[i];
        Complex a1 = amps[j];
        amps[i] = m[0] * a0 + m[1] * a1;
        amps[j] = m[2] * a0 + m[3] * a1;
    }
}

PureState apply_gate(const PureState &state, const GateInstance &gate, std::optional<double> angle) {
    std::size_t n = state.n_qubits();
    for (std::size_t k = 0; k < gate.arity(); k++) {
        if (gate.qubits[k] >= n) {
            throw std::out_of_range("gate target " + std::to_string(gate.qubits[k]) + " out of range");
        }
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw std::invalid_argument("two-qubit gate needs distinct qubits");
    }
    if (gate_is_parametric(gate.kind) != angle.has_value()) {
        throw std::invalid_argument(
            std::string(gate_name(gate.kind)) +
            (angle ? " takes no angle but one was supplied" : " requires an angle but none was supplied"));
    }
    CVector amps = state.amplitudes();
    apply_gate_inplace(std::span<Complex>(amps.data(), amps.size()), n, gate, angle.value_or(0.0));
    return PureState(std::move(amps));
}

void run_circuit_inplace(std::span<Complex> amps, const Circuit &circuit, std::span<const double> theta) {
    const std::size_t n = circuit.n_qubits();
    for (const auto &g : circuit.gates()) {
        apply_gate_inplace(amps, n, g, g.param_slot ? theta[*g.param_slot] : 0.0);
    }
}

PureState run_circuit(const PureState &input, const Circuit &circuit, std::span<const double> theta) {
    if (input.n_qubits() != circuit.n_qubits()) {
        throw std::invalid_argument(
            "input has " + std::to_string(input.n_qubits()) + " qubits but circuit has " +
            std::to_string(circuit.n_qubits()));
    }
    check_theta(circuit, theta);
    CVector amps = input.amplitudes();
    run_circuit_inplace(std::span<Complex>(amps.data(), amps.size()), circuit, theta);
    return PureState(std::move(amps));
}

CMatrix circuit_unitary(const Circuit &circuit, std::span<const double> theta) {
    check_theta(circuit, theta);
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << circuit.n_qubits());
    CMatrix u = CMatrix::Identity(dim, dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        run_circuit_inplace(std::span<Complex>(u.col(k).data(), static_cast<std::size_t>(dim)), circuit, theta);
    }
    return u;
}

CMatrix gate_unitary(const GateInstance &gate, std::size_t n_qubits, double angle) {
    auto dim = static_cast<Eigen::Index>(std::size_t{1} << n_qubits);
    CMatrix u = CMatrix::Identity(dim, dim);
    for (Eigen::Index k = 0; k < dim; k++) {
        apply_gate_inplace(std::span<Complex>(u.col(k).data(), static_cast<std::size_t>(dim)), n_qubits, gate, angle);
    }
    return u;
}

}  // namespace qarch
