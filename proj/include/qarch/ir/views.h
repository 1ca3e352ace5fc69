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

#include <span>
#include <vector>

#include "qarch/ir/cell.h"
#include "qarch/ir/vocab.h"

namespace qarch {

/// One-hot tensors describing a cell, flattened row-major.
///
/// rotation: n_qubits x max_seq x V_rot, entangle: n_qubits x n_qubits x V_ent.
/// Unused slots (and the diagonal of the entangle view) are one-hot at NO_OP.
struct CellViews {
    std::size_t n_qubits = 0;
    std::size_t max_seq = 0;
    std::size_t v_rot = 0;
    std::size_t v_ent = 0;
    std::vector<double> rotation;
    std::vector<double> entangle;

    double rot(std::size_t q, std::size_t s, std::size_t v) const {
        return rotation[(q * max_seq + s) * v_rot + v];
    }
    double ent(std::size_t c, std::size_t t, std::size_t v) const {
        return entangle[(c * n_qubits + t) * v_ent + v];
    }
};

/// Integer action grids: rotation is n_qubits x max_seq, entangle n_qubits x n_qubits.
struct Actions {
    std::size_t n_qubits = 0;
    std::size_t max_seq = 0;
    std::vector<std::size_t> rotation;
    std::vector<std::size_t> entangle;

    Actions() = default;
    /// All slots NO_OP.
    Actions(std::size_t n_qubits, std::size_t max_seq);

    bool operator==(const Actions &) const = default;
};

/// Throws std::invalid_argument when a node list exceeds max_seq or an edge
/// carries more than one op.
CellViews encode_views(const Cell &cell, const GateVocab &vocab, std::size_t max_seq);

/// Argmax of every one-hot row.
Actions argmax_actions(const CellViews &views);

/// NO_OP slots emit nothing; diagonal entangle entries are ignored. Throws
/// std::out_of_range for ids beyond the vocabulary.
Cell decode_actions(const Actions &actions, const GateVocab &vocab);

/// Actions that re-encode `cell` exactly (same overflow rules as encode_views).
Actions cell_actions(const Cell &cell, const GateVocab &vocab, std::size_t max_seq);

/// Longest node list over `cells`, rounded up to a multiple of 8 (minimum 8).
std::size_t default_max_seq(std::span<const Cell> cells);

}  // namespace qarch
