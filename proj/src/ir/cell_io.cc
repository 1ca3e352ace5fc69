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

#include "qarch/ir/cell_io.h"

#include <stdexcept>
#include <string>

namespace qarch {

nlohmann::json cell_to_json(const Cell &cell) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto &ops : cell.node_ops()) {
        nlohmann::json list = nlohmann::json::array();
        for (GateKind k : ops) {
            list.push_back(std::string(gate_name(k)));
        }
        nodes.push_back(std::move(list));
    }
    nlohmann::json edges = nlohmann::json::array();
    for (const auto &[e, ops] : cell.edge_ops()) {
        nlohmann::json list = nlohmann::json::array();
        for (GateKind k : ops) {
            list.push_back(std::string(gate_name(k)));
        }
        edges.push_back({{"control", e.first}, {"target", e.second}, {"ops", std::move(list)}});
    }
    return {{"format", 1}, {"n_qubits", cell.n_qubits()}, {"node_ops", std::move(nodes)}, {"edge_ops", std::move(edges)}};
}

Cell cell_from_json(const nlohmann::json &doc) {
    try {
        if (!doc.is_object()) {
            throw std::invalid_argument("cell document must be an object");
        }
        if (doc.at("format").get<int>() != 1) {
            throw std::invalid_argument("unsupported cell format " + doc.at("format").dump());
        }
        Cell cell(doc.at("n_qubits").get<std::size_t>());
        const auto &nodes = doc.at("node_ops");
        if (nodes.size() != cell.n_qubits()) {
            throw std::invalid_argument("node_ops must have one list per qubit");
        }
        for (std::size_t q = 0; q < nodes.size(); q++) {
            for (const auto &name : nodes[q]) {
                cell.push_node(q, gate_from_name(name.get<std::string>()));
            }
        }
        for (const auto &e : doc.at("edge_ops")) {
            auto c = e.at("control").get<std::size_t>();
            auto t = e.at("target").get<std::size_t>();
            for (const auto &name : e.at("ops")) {
                cell.push_edge(c, t, gate_from_name(name.get<std::string>()));
            }
        }
        return cell;
    } catch (const nlohmann::json::exception &ex) {
        throw std::invalid_argument(std::string("malformed cell document: ") + ex.what());
    } catch (const std::out_of_range &ex) {
        throw std::invalid_argument(std::string("malformed cell document: ") + ex.what());
    }
}

}  // namespace qarch
