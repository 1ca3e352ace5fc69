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

#include <array>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qarch {

/// Supported gate kinds. Angles are in radians; rotations follow
/// R_P(theta) = exp(-i theta P / 2).
enum class GateKind : uint8_t { H, S, T, I, X, Y, Z, CNOT, RX, RY, RZ, CRX, CRY, CRZ };

inline constexpr std::array<GateKind, 14> kAllGateKinds = {
    GateKind::H,    GateKind::S,  GateKind::T,  GateKind::I,  GateKind::X,   GateKind::Y,   GateKind::Z,
    GateKind::CNOT, GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CRX, GateKind::CRY, GateKind::CRZ};

std::string_view gate_name(GateKind kind);
/// Inverse of gate_name. Throws std::invalid_argument on unknown names.
GateKind gate_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool gate_is_parametric(GateKind kind);

/// A gate placed on concrete qubits. For two-qubit gates `qubits[0]` is the control.
struct GateInstance {
    GateKind kind;
    std::array<std::size_t, 2> qubits{0, 0};
    std::optional<std::size_t> param_slot;

    static GateInstance one(GateKind kind, std::size_t q, std::optional<std::size_t> slot = std::nullopt);
    static GateInstance two(
        GateKind kind, std::size_t control, std::size_t target, std::optional<std::size_t> slot = std::nullopt);

    std::size_t arity() const {
        return gate_arity(kind);
    }
    bool operator==(const GateInstance &) const = default;
};

/// Ordered gate list over `n_qubits` with a dense parameter-slot numbering.
///
/// Invariant: every gate's targets are distinct and in range, parametric gates
/// carry a slot, and the slots are exactly 0..n_params-1, each used once.
class Circuit {
   public:
    explicit Circuit(std::size_t n_qubits);
    /// Validating constructor for an explicit gate list.
    Circuit(std::size_t n_qubits, std::vector<GateInstance> gates);

    /// Appends a gate, assigning the next free parameter slot if parametric.
    Circuit &add(GateKind kind, std::size_t q);
    Circuit &add(GateKind kind, std::size_t control, std::size_t target);
    /// Appends all gates of `other`, renumbering its parameter slots after ours.
    Circuit &append(const Circuit &other);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    std::size_t n_params() const {
        return n_params_;
    }
    const std::vector<GateInstance> &gates() const {
        return gates_;
    }
    std::size_t size() const {
        return gates_.size();
    }
    bool empty() const {
        return gates_.empty();
    }

    /// Text like "H(0) CNOT(0,1) RY[0](2)".
    std::string str() const;

    bool operator==(const Circuit &) const = default;

   private:
    void check_targets(const GateInstance &g) const;

    std::size_t n_qubits_;
    std::vector<GateInstance> gates_;
    std::size_t n_params_ = 0;
};

/// Depth of greedy as-soon-as-possible scheduling: each gate is placed one
/// step after the latest gate already on any of its qubits.
std::size_t circuit_depth(const Circuit &circuit);

}  // namespace qarch
