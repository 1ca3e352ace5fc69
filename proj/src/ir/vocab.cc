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

#include "qarch/ir/vocab.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qarch {

GateVocab::GateVocab(std::span<const GateKind> space) {
    if (space.empty()) {
        throw std::invalid_argument("gate vocabulary needs a nonempty search space");
    }
    for (GateKind k : space) {
        auto &dst = gate_arity(k) == 1 ? rotation_ : entangle_;
        if (std::find(dst.begin(), dst.end(), k) == dst.end()) {
            dst.push_back(k);
        }
    }
    auto by_name = [](GateKind a, GateKind b) {
        return gate_name(a) < gate_name(b);
    };
    std::sort(rotation_.begin(), rotation_.end(), by_name);
    std::sort(entangle_.begin(), entangle_.end(), by_name);
}

std::vector<GateKind> GateVocab::kinds() const {
    std::vector<GateKind> out = rotation_;
    out.insert(out.end(), entangle_.begin(), entangle_.end());
    return out;
}

bool GateVocab::contains(GateKind kind) const {
    const auto &v = gate_arity(kind) == 1 ? rotation_ : entangle_;
    return std::find(v.begin(), v.end(), kind) != v.end();
}

static std::size_t lookup(const std::vector<GateKind> &v, GateKind kind) {
    auto it = std::find(v.begin(), v.end(), kind);
    if (it == v.end()) {
        throw std::invalid_argument("gate kind " + std::string(gate_name(kind)) + " is not in the vocabulary");
    }
    return static_cast<std::size_t>(it - v.begin()) + 1;
}

std::size_t GateVocab::rotation_id(GateKind kind) const {
    return lookup(rotation_, kind);
}

std::size_t GateVocab::entangle_id(GateKind kind) const {
    return lookup(entangle_, kind);
}

std::optional<GateKind> GateVocab::rotation_kind(std::size_t id) const {
    if (id >= rotation_size()) {
        throw std::out_of_range("rotation id " + std::to_string(id) + " out of range");
    }
    if (id == kNoOp) {
        return std::nullopt;
    }
    return rotation_[id - 1];
}

std::optional<GateKind> GateVocab::entangle_kind(std::size_t id) const {
    if (id >= entangle_size()) {
        throw std::out_of_range("entangle id " + std::to_string(id) + " out of range");
    }
    if (id == kNoOp) {
        return std::nullopt;
    }
    return entangle_[id - 1];
}

}  // namespace qarch
