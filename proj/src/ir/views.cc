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

#include "qarch/ir/views.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qarch {

Actions::Actions(std::size_t n_qubits, std::size_t max_seq)
    : n_qubits(n_qubits),
      max_seq(max_seq),
      rotation(n_qubits * max_seq, GateVocab::kNoOp),
      entangle(n_qubits * n_qubits, GateVocab::kNoOp) {
}

Actions cell_actions(const Cell &cell, const GateVocab &vocab, std::size_t max_seq) {
    const std::size_t n = cell.n_qubits();
    Actions a(n, max_seq);
    for (std::size_t q = 0; q < n; q++) {
        const auto &ops = cell.node(q);
        if (ops.size() > max_seq) {
            throw std::invalid_argument(
                "qubit " + std::to_string(q) + " has " + std::to_string(ops.size()) + " ops, more than max_seq " +
                std::to_string(max_seq));
        }
        for (std::size_t s = 0; s < ops.size(); s++) {
            a.rotation[q * max_seq + s] = vocab.rotation_id(ops[s]);
        }
    }
    for (const auto &[e, ops] : cell.edge_ops()) {
        if (ops.size() > 1) {
            throw std::invalid_argument(
                "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                ") carries more than one op and has no one-hot view");
        }
        a.entangle[e.first * n + e.second] = vocab.entangle_id(ops[0]);
    }
    return a;
}

CellViews encode_views(const Cell &cell, const GateVocab &vocab, std::size_t max_seq) {
    Actions a = cell_actions(cell, vocab, max_seq);
    CellViews v;
    v.n_qubits = cell.n_qubits();
    v.max_seq = max_seq;
    v.v_rot = vocab.rotation_size();
    v.v_ent = vocab.entangle_size();
    v.rotation.assign(v.n_qubits * max_seq * v.v_rot, 0.0);
    v.entangle.assign(v.n_qubits * v.n_qubits * v.v_ent, 0.0);
    for (std::size_t i = 0; i < a.rotation.size(); i++) {
        v.rotation[i * v.v_rot + a.rotation[i]] = 1.0;
    }
    for (std::size_t i = 0; i < a.entangle.size(); i++) {
        v.entangle[i * v.v_ent + a.entangle[i]] = 1.0;
    }
    return v;
}

Actions argmax_actions(const CellViews &views) {
    Actions a(views.n_qubits, views.max_seq);
    auto argmax = [](const std::vector<double> &data, std::size_t row, std::size_t width) {
        auto first = data.begin() + static_cast<std::ptrdiff_t>(row * width);
        return static_cast<std::size_t>(std::max_element(first, first + static_cast<std::ptrdiff_t>(width)) - first);
    };
    for (std::size_t i = 0; i < a.rotation.size(); i++) {
        a.rotation[i] = argmax(views.rotation, i, views.v_rot);
    }
    for (std::size_t i = 0; i < a.entangle.size(); i++) {
        a.entangle[i] = argmax(views.entangle, i, views.v_ent);
    }
    return a;
}

Cell decode_actions(const Actions &actions, const GateVocab &vocab) {
    const std::size_t n = actions.n_qubits;
    if (actions.rotation.size() != n * actions.max_seq || actions.entangle.size() != n * n) {
        throw std::invalid_argument("action grids do not match their declared shape");
    }
    Cell cell(n);
    for (std::size_t q = 0; q < n; q++) {
        for (std::size_t s = 0; s < actions.max_seq; s++) {
            if (auto k = vocab.rotation_kind(actions.rotation[q * actions.max_seq + s])) {
                cell.push_node(q, *k);
            }
        }
    }
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t t = 0; t < n; t++) {
            if (c == t) {
                continue;
            }
            if (auto k = vocab.entangle_kind(actions.entangle[c * n + t])) {
                cell.push_edge(c, t, *k);
            }
        }
    }
    return cell;
}

std::size_t default_max_seq(std::span<const Cell> cells) {
    std::size_t longest = 0;
    for (const auto &c : cells) {
        for (const auto &ops : c.node_ops()) {
            longest = std::max(longest, ops.size());
        }
    }
    std::size_t rounded = (longest + 7) / 8 * 8;
    return std::max<std::size_t>(rounded, 8);
}

}  // namespace qarch
