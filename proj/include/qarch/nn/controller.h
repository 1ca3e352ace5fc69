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
#include <string>
#include <vector>

#include <json.hpp>

#include "qarch/common/rng.h"
#include "qarch/ir/views.h"

namespace qarch {

struct ControllerConfig {
    std::size_t n_qubits = 0;
    std::size_t max_seq = 8;
    std::size_t v_rot = 0;
    std::size_t v_ent = 0;
    std::size_t embed = 32;
    std::size_t ff_hidden = 64;
    std::size_t heads = 4;
    std::size_t blocks = 2;
    /// Initial weight on the parent's own op in every logit row.
    double copy_gain = 3.0;

    /// n_qubits * max_seq rotation tokens followed by n(n-1) edge tokens.
    std::size_t n_tokens() const {
        return n_qubits * max_seq + n_qubits * (n_qubits - 1);
    }
    void validate() const;
    bool operator==(const ControllerConfig &) const = default;
};

struct TensorInfo {
    std::string name;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t offset = 0;
};

/// Per-slot unnormalized log-probabilities, laid out like CellViews.
/// Diagonal entangle rows are unused (zero).
struct Logits {
    std::size_t n_qubits = 0;
    std::size_t max_seq = 0;
    std::size_t v_rot = 0;
    std::size_t v_ent = 0;
    std::vector<double> rotation;
    std::vector<double> entangle;
};

/// Transformer mutation policy.
///
/// Tokens are the parent's ops: embedded with W_s (rotation slots) or W_m
/// (ordered qubit pairs) plus a learned positional embedding, passed through
/// pre-norm encoder blocks (multi-head attention, then a GELU feed-forward,
/// each with a residual), normalized, and projected to 2e features. The first
/// e features of a rotation token and the last e of an edge token are scored
/// against the same embedding tables, plus copy_gain on the parent's op.
class Controller {
   public:
    /// Uniform +-1/sqrt(fan_in) weights, unit norm gains, zero biases.
    Controller(const ControllerConfig &config, Rng &rng);
    Controller(const ControllerConfig &config, std::vector<double> params);

    const ControllerConfig &config() const {
        return config_;
    }
    const std::vector<TensorInfo> &tensors() const {
        return tensors_;
    }
    const TensorInfo &tensor(const std::string &name) const;
    std::vector<double> &params() {
        return params_;
    }
    const std::vector<double> &params() const {
        return params_;
    }

    Logits forward(const CellViews &views) const;
    /// Gradient of -log pi(actions | views) * reward with respect to params().
    std::vector<double> reinforce_grads(const CellViews &views, const Actions &actions, double reward) const;

   private:
    struct Cache;
    void build_layout();
    void check_views(const CellViews &views) const;
    Logits run(const Actions &parent, Cache *cache) const;

    ControllerConfig config_;
    std::vector<TensorInfo> tensors_;
    std::vector<double> params_;
};

struct SampledActions {
    Actions actions;
    double log_prob = 0.0;
};

/// Categorical draw per slot (argmax when greedy); log_prob sums the log
/// softmax of the chosen indices. Diagonal entangle slots stay NO_OP.
SampledActions sample_actions(const Logits &logits, Rng &rng, bool greedy = false);
double log_prob(const Logits &logits, const Actions &actions);
/// Numerically stable softmax of one row.
std::vector<double> softmax(std::span<const double> row);

nlohmann::json controller_to_json(const Controller &c);
Controller controller_from_json(const nlohmann::json &doc);

}  // namespace qarch
