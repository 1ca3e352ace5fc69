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

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qarch/common/rng.h"
#include "qarch/ir/vocab.h"
#include "qarch/sim/gates.h"

namespace qarch {

/// Qubit-node graph: each qubit carries an ordered list of single-qubit ops
/// (its self-loop) and each directed (control, target) edge an ordered list of
/// two-qubit ops. Gate order across locations is not represented.
class Cell {
   public:
    using Edge = std::pair<std::size_t, std::size_t>;

    explicit Cell(std::size_t n_qubits);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    const std::vector<std::vector<GateKind>> &node_ops() const {
        return node_ops_;
    }
    /// Only nonempty lists are stored.
    const std::map<Edge, std::vector<GateKind>> &edge_ops() const {
        return edge_ops_;
    }
    const std::vector<GateKind> &node(std::size_t q) const;
    /// Empty list when the edge carries no ops.
    const std::vector<GateKind> &edge(std::size_t control, std::size_t target) const;

    void push_node(std::size_t q, GateKind kind);
    void set_node(std::size_t q, std::vector<GateKind> ops);
    void push_edge(std::size_t control, std::size_t target, GateKind kind);
    /// An empty list removes the edge.
    void set_edge(std::size_t control, std::size_t target, std::vector<GateKind> ops);

    std::size_t n_gates() const;
    bool empty() const {
        return n_gates() == 0;
    }

    /// Compact one-line text, e.g. "n=2|0:RY|1:|0>1:CNOT".
    std::string str() const;

    bool operator==(const Cell &) const = default;

   private:
    void check_qubit(std::size_t q) const;
    void check_edge(std::size_t control, std::size_t target) const;

    std::size_t n_qubits_;
    std::vector<std::vector<GateKind>> node_ops_;
    std::map<Edge, std::vector<GateKind>> edge_ops_;
};

/// 64-bit content hash of a cell (stable across runs and platforms).
uint64_t cell_fingerprint(const Cell &cell);

/// Per qubit, 0..layer_budget uniformly drawn single-qubit ops; per unordered
/// pair, with probability 1/2 one directed edge (uniform direction) with one
/// uniformly drawn two-qubit op.
Cell random_cell(const GateVocab &space, std::size_t n_qubits, Rng &rng, std::size_t layer_budget = 1);

/// Seed plus a random_cell draw: node ops are appended after the seed's, and
/// a drawn edge op is only placed on edges the seed leaves empty, so edge lists
/// stay at length <= 1.
Cell expand_cell(const Cell &seed, const GateVocab &space, Rng &rng, std::size_t layer_budget = 1);

/// Canonical order: node ops qubit by qubit, then edges in lexicographic
/// (control, target) order. Parametric gates take fresh slots in emission order.
Circuit cell_to_circuit(const Cell &cell);

/// Throws std::invalid_argument when a gate kind is not in `vocab`.
Cell circuit_to_cell(const Circuit &circuit, const GateVocab &vocab);

struct CellMetrics {
    std::size_t n_params = 0;
    std::size_t n_layers = 0;
    std::size_t n_two_qubit = 0;
    std::size_t n_gates = 0;

    bool operator==(const CellMetrics &) const = default;
};

CellMetrics metrics(const Circuit &circuit);
CellMetrics metrics(const Cell &cell);

enum class Quantity : uint8_t { NParams, NLayers, NTwoQubit, NGates };

std::string_view quantity_name(Quantity q);
/// Accepts "n_params", "n_layers", "n_two_qubit", "n_gates".
Quantity quantity_from_name(std::string_view name);
std::size_t quantity_value(const CellMetrics &m, Quantity q);

/// Upper bound g(cell) <= bound on one resource count.
struct SoftConstraint {
    Quantity quantity;
    std::size_t bound;

    /// Throws std::invalid_argument when bound < 1.
    SoftConstraint(Quantity quantity, std::size_t bound);

    bool satisfied(const CellMetrics &m) const {
        return quantity_value(m, quantity) <= bound;
    }
    /// Strictly below the bound: the cell may still grow.
    bool has_headroom(const CellMetrics &m) const {
        return quantity_value(m, quantity) < bound;
    }

    bool operator==(const SoftConstraint &) const = default;
};

bool eval_soft_constraint(const SoftConstraint &c, const Cell &cell);

}  // namespace qarch
