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

#include "qarch/ir/cell.h"

#include <stdexcept>

namespace qarch {

Cell::Cell(std::size_t n_qubits) : n_qubits_(n_qubits), node_ops_(n_qubits) {
    if (n_qubits == 0) {
        throw std::invalid_argument("a cell needs at least one qubit");
    }
}

void Cell::check_qubit(std::size_t q) const {
    if (q >= n_qubits_) {
        throw std::out_of_range(
            "qubit " + std::to_string(q) + " out of range for a " + std::to_string(n_qubits_) + "-qubit cell");
    }
}

void Cell::check_edge(std::size_t control, std::size_t target) const {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("edge endpoints must differ (got " + std::to_string(control) + ")");
    }
}

const std::vector<GateKind> &Cell::node(std::size_t q) const {
    check_qubit(q);
    return node_ops_[q];
}

const std::vector<GateKind> &Cell::edge(std::size_t control, std::size_t target) const {
    static const std::vector<GateKind> kEmpty;
    auto it = edge_ops_.find({control, target});
    return it == edge_ops_.end() ? kEmpty : it->second;
}

static void require_arity(GateKind kind, std::size_t arity) {
    if (gate_arity(kind) != arity) {
        throw std::invalid_argument(
            std::string(gate_name(kind)) + " cannot be placed on a " + (arity == 1 ? "node" : "edge"));
    }
}

void Cell::push_node(std::size_t q, GateKind kind) {
    check_qubit(q);
    require_arity(kind, 1);
    node_ops_[q].push_back(kind);
}

void Cell::set_node(std::size_t q, std::vector<GateKind> ops) {
    check_qubit(q);
    for (auto k : ops) {
        require_arity(k, 1);
    }
    node_ops_[q] = std::move(ops);
}

void Cell::push_edge(std::size_t control, std::size_t target, GateKind kind) {
    check_edge(control, target);
    require_arity(kind, 2);
    edge_ops_[{control, target}].push_back(kind);
}

void Cell::set_edge(std::size_t control, std::size_t target, std::vector<GateKind> ops) {
    check_edge(control, target);
    for (auto k : ops) {
        require_arity(k, 2);
    }
    if (ops.empty()) {
        edge_ops_.erase({control, target});
    } else {
        edge_ops_[{control, target}] = std::move(ops);
    }
}

std::size_t Cell::n_gates() const {
    std::size_t n = 0;
    for (const auto &ops : node_ops_) {
        n += ops.size();
    }
    for (const auto &[e, ops] : edge_ops_) {
        n += ops.size();
    }
    return n;
}

std::string Cell::str() const {
    std::string out = "n=" + std::to_string(n_qubits_);
    for (std::size_t q = 0; q < n_qubits_; q++) {
        out += "|" + std::to_string(q) + ":";
        for (std::size_t k = 0; k < node_ops_[q].size(); k++) {
            if (k) {
                out += ",";
            }
            out += gate_name(node_ops_[q][k]);
        }
    }
    for (const auto &[e, ops] : edge_ops_) {
        out += "|" + std::to_string(e.first) + ">" + std::to_string(e.second) + ":";
        for (std::size_t k = 0; k < ops.size(); k++) {
            if (k) {
                out += ",";
            }
            out += gate_name(ops[k]);
        }
    }
    return out;
}

uint64_t cell_fingerprint(const Cell &cell) {
    return hash_string(cell.str());
}

Cell random_cell(const GateVocab &space, std::size_t n_qubits, Rng &rng, std::size_t layer_budget) {
    if (layer_budget < 1) {
        throw std::invalid_argument("layer_budget must be at least 1");
    }
    Cell cell(n_qubits);
    const auto &rot = space.rotation_kinds();
    const auto &ent = space.entangle_kinds();
    for (std::size_t q = 0; q < n_qubits; q++) {
        if (rot.empty()) {
            break;
        }
        std::size_t count = rng.index(layer_budget + 1);
        for (std::size_t k = 0; k < count; k++) {
            cell.push_node(q, rot[rng.index(rot.size())]);
        }
    }
    if (ent.empty()) {
        return cell;
    }
    for (std::size_t i = 0; i < n_qubits; i++) {
        for (std::size_t j = i + 1; j < n_qubits; j++) {
            if (!rng.bernoulli(0.5)) {
                continue;
            }
            bool forward = rng.bernoulli(0.5);
            GateKind op = ent[rng.index(ent.size())];
            if (forward) {
                cell.push_edge(i, j, op);
            } else {
                cell.push_edge(j, i, op);
            }
        }
    }
    return cell;
}

Cell expand_cell(const Cell &seed, const GateVocab &space, Rng &rng, std::size_t layer_budget) {
    Cell extra = random_cell(space, seed.n_qubits(), rng, layer_budget);
    Cell out = seed;
    for (std::size_t q = 0; q < seed.n_qubits(); q++) {
        for (GateKind k : extra.node(q)) {
            out.push_node(q, k);
        }
    }
    for (const auto &[e, ops] : extra.edge_ops()) {
        if (out.edge(e.first, e.second).empty()) {
            out.set_edge(e.first, e.second, ops);
        }
    }
    return out;
}

Circuit cell_to_circuit(const Cell &cell) {
    Circuit c(cell.n_qubits());
    for (std::size_t q = 0; q < cell.n_qubits(); q++) {
        for (GateKind k : cell.node(q)) {
            c.add(k, q);
        }
    }
    for (const auto &[e, ops] : cell.edge_ops()) {
        for (GateKind k : ops) {
            c.add(k, e.first, e.second);
        }
    }
    return c;
}

Cell circuit_to_cell(const Circuit &circuit, const GateVocab &vocab) {
    Cell cell(circuit.n_qubits());
    for (const auto &g : circuit.gates()) {
        if (!vocab.contains(g.kind)) {
            throw std::invalid_argument(
                "gate kind " + std::string(gate_name(g.kind)) + " is not in the vocabulary");
        }
        if (g.arity() == 1) {
            cell.push_node(g.qubits[0], g.kind);
        } else {
            cell.push_edge(g.qubits[0], g.qubits[1], g.kind);
        }
    }
    return cell;
}

CellMetrics metrics(const Circuit &circuit) {
    CellMetrics m;
    m.n_params = circuit.n_params();
    m.n_layers = circuit_depth(circuit);
    m.n_gates = circuit.size();
    for (const auto &g : circuit.gates()) {
        if (g.arity() == 2) {
            m.n_two_qubit++;
        }
    }
    return m;
}

CellMetrics metrics(const Cell &cell) {
    return metrics(cell_to_circuit(cell));
}

std::string_view quantity_name(Quantity q) {
    switch (q) {
        case Quantity::NParams:
            return "n_params";
        case Quantity::NLayers:
            return "n_layers";
        case Quantity::NTwoQubit:
            return "n_two_qubit";
        case Quantity::NGates:
            return "n_gates";
    }
    throw std::invalid_argument("unknown quantity");
}

Quantity quantity_from_name(std::string_view name) {
    for (Quantity q : {Quantity::NParams, Quantity::NLayers, Quantity::NTwoQubit, Quantity::NGates}) {
        if (quantity_name(q) == name) {
            return q;
        }
    }
    throw std::invalid_argument("unknown constraint quantity '" + std::string(name) + "'");
}

std::size_t quantity_value(const CellMetrics &m, Quantity q) {
    switch (q) {
        case Quantity::NParams:
            return m.n_params;
        case Quantity::NLayers:
            return m.n_layers;
        case Quantity::NTwoQubit:
            return m.n_two_qubit;
        case Quantity::NGates:
            return m.n_gates;
    }
    throw std::invalid_argument("unknown quantity");
}

SoftConstraint::SoftConstraint(Quantity quantity, std::size_t bound) : quantity(quantity), bound(bound) {
    if (bound < 1) {
        throw std::invalid_argument("soft constraint bound must be at least 1");
    }
}

bool eval_soft_constraint(const SoftConstraint &c, const Cell &cell) {
    return c.satisfied(metrics(cell));
}

}  // namespace qarch
