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

#include "qarch/sim/gates.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qarch {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::T:
            return "T";
        case GateKind::I:
            return "I";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::RX:
            return "RX";
        case GateKind::RY:
            return "RY";
        case GateKind::RZ:
            return "RZ";
        case GateKind::CRX:
            return "CRX";
        case GateKind::CRY:
            return "CRY";
        case GateKind::CRZ:
            return "CRZ";
    }
    throw std::logic_error("unreachable gate kind");
}

GateKind gate_from_name(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CRX:
        case GateKind::CRY:
        case GateKind::CRZ:
            return 2;
        default:
            return 1;
    }
}

bool gate_is_parametric(GateKind kind) {
    switch (kind) {
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
        case GateKind::CRX:
        case GateKind::CRY:
        case GateKind::CRZ:
            return true;
        default:
            return false;
    }
}

GateInstance GateInstance::one(GateKind kind, std::size_t q, std::optional<std::size_t> slot) {
    return GateInstance{kind, {q, q}, slot};
}

GateInstance GateInstance::two(
    GateKind kind, std::size_t control, std::size_t target, std::optional<std::size_t> slot) {
    return GateInstance{kind, {control, target}, slot};
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
}

Circuit::Circuit(std::size_t n_qubits, std::vector<GateInstance> gates) : n_qubits_(n_qubits) {
    std::vector<bool> seen;
    for (auto &g : gates) {
        check_targets(g);
        if (gate_is_parametric(g.kind) != g.param_slot.has_value()) {
            throw std::invalid_argument(
                "gate " + std::string(gate_name(g.kind)) + ": parameter slot present iff gate is parametric");
        }
        if (g.param_slot) {
            std::size_t s = *g.param_slot;
            if (s >= seen.size()) {
                seen.resize(s + 1, false);
            }
            if (seen[s]) {
                throw std::invalid_argument("parameter slot " + std::to_string(s) + " used twice");
            }
            seen[s] = true;
        }
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) {
            return b;
        })) {
        throw std::invalid_argument("parameter slots must be exactly 0..n_params-1");
    }
    n_params_ = seen.size();
    gates_ = std::move(gates);
}

void Circuit::check_targets(const GateInstance &g) const {
    std::size_t a = g.arity();
    for (std::size_t k = 0; k < a; k++) {
        if (g.qubits[k] >= n_qubits_) {
            throw std::out_of_range(
                "gate " + std::string(gate_name(g.kind)) + " targets qubit " + std::to_string(g.qubits[k]) +
                " on a " + std::to_string(n_qubits_) + "-qubit circuit");
        }
    }
    if (a == 2 && g.qubits[0] == g.qubits[1]) {
        throw std::invalid_argument("two-qubit gate " + std::string(gate_name(g.kind)) + " needs distinct qubits");
    }
}

Circuit &Circuit::add(GateKind kind, std::size_t q) {
    if (gate_arity(kind) != 1) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " is not a one-qubit gate");
    }
    GateInstance g = GateInstance::one(kind, q);
    check_targets(g);
    if (gate_is_parametric(kind)) {
        g.param_slot = n_params_++;
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::add(GateKind kind, std::size_t control, std::size_t target) {
    if (gate_arity(kind) != 2) {
        throw std::invalid_argument(std::string(gate_name(kind)) + " is not a two-qubit gate");
    }
    GateInstance g = GateInstance::two(kind, control, target);
    check_targets(g);
    if (gate_is_parametric(kind)) {
        g.param_slot = n_params_++;
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw std::invalid_argument("cannot append circuits of different widths");
    }
    for (GateInstance g : other.gates_) {
        if (g.param_slot) {
            g.param_slot = *g.param_slot + n_params_;
        }
        gates_.push_back(g);
    }
    n_params_ += other.n_params_;
    return *this;
}

std::string Circuit::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto &g : gates_) {
        if (!first) {
            out << ' ';
        }
        first = false;
        out << gate_name(g.kind);
        if (g.param_slot) {
            out << '[' << *g.param_slot << ']';
        }
        out << '(' << g.qubits[0];
        if (g.arity() == 2) {
            out << ',' << g.qubits[1];
        }
        out << ')';
    }
    return out.str();
}

std::size_t circuit_depth(const Circuit &circuit) {
    std::vector<std::size_t> level(circuit.n_qubits(), 0);
    std::size_t depth = 0;
    for (const auto &g : circuit.gates()) {
        std::size_t at = level[g.qubits[0]];
        if (g.arity() == 2) {
            at = std::max(at, level[g.qubits[1]]);
        }
        at += 1;
        level[g.qubits[0]] = at;
        if (g.arity() == 2) {
            level[g.qubits[1]] = at;
        }
        depth = std::max(depth, at);
    }
    return depth;
}

}  // namespace qarch
