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

#include <optional>
#include <span>
#include <vector>

#include "qarch/sim/gates.h"

namespace qarch {

/// Bijection between the gate kinds of a search space and dense integer ids.
///
/// Single-qubit kinds form the rotation category and two-qubit kinds the
/// entangle category. Id 0 of each category is the reserved NO_OP; the remaining
/// kinds follow at 1..V-1 in order of their canonical names.
class GateVocab {
   public:
    static constexpr std::size_t kNoOp = 0;

    /// Throws std::invalid_argument on an empty space.
    explicit GateVocab(std::span<const GateKind> space);

    std::size_t rotation_size() const {
        return rotation_.size() + 1;
    }
    std::size_t entangle_size() const {
        return entangle_.size() + 1;
    }
    const std::vector<GateKind> &rotation_kinds() const {
        return rotation_;
    }
    const std::vector<GateKind> &entangle_kinds() const {
        return entangle_;
    }
    /// All kinds (rotation then entangle).
    std::vector<GateKind> kinds() const;
    bool contains(GateKind kind) const;

    std::size_t rotation_id(GateKind kind) const;
    std::size_t entangle_id(GateKind kind) const;
    /// nullopt for NO_OP; throws std::out_of_range for ids >= size.
    std::optional<GateKind> rotation_kind(std::size_t id) const;
    std::optional<GateKind> entangle_kind(std::size_t id) const;

    bool operator==(const GateVocab &) const = default;

   private:
    std::vector<GateKind> rotation_;
    std::vector<GateKind> entangle_;
};

}  // namespace qarch
