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

// Central finite-difference check of controller REINFORCE gradients, shared by
// the unit tests and the acceptance runner.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qarch/common/rng.h"
#include "qarch/ir/cell.h"
#include "qarch/ir/views.h"
#include "qarch/ir/vocab.h"
#include "qarch/nn/controller.h"

namespace qarch::gradcheck {

struct Report {
    std::size_t checked = 0;
    std::size_t failed = 0;
    double worst_rel = 0.0;
};

/// Relative error with an absolute floor: coordinates whose gradient is below
/// `floor` in magnitude are compared on the floor's scale, where central
/// differences are dominated by round-off.
inline double relative_error(double analytic, double numeric, double floor = 1e-6) {
    return std::abs(analytic - numeric) / std::max({std::abs(analytic), std::abs(numeric), floor});
}

/// Builds a tiny controller (e=4, 1 head, 1 block, 2 qubits), samples a parent
/// cell and actions, and compares reinforce_grads with central differences of
/// -reward * log pi on `n_coords` random coordinates.
inline Report run(uint64_t seed, std::size_t n_coords, double step = 1e-5, double tol = 1e-3) {
    std::vector<GateKind> space{GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::CNOT, GateKind::CRX};
    GateVocab vocab(space);
    ControllerConfig cfg;
    cfg.n_qubits = 2;
    cfg.max_seq = 8;
    cfg.v_rot = vocab.rotation_size();
    cfg.v_ent = vocab.entangle_size();
    cfg.embed = 4;
    cfg.ff_hidden = 8;
    cfg.heads = 1;
    cfg.blocks = 1;
    Rng rng = Rng::derive(seed, "gradcheck");
    Controller ctrl(cfg, rng);
    // Perturb every parameter so gains, biases and copy_gain are generic.
    for (auto &p : ctrl.params()) {
        p += rng.uniform(-0.3, 0.3);
    }
    Cell parent = random_cell(vocab, 2, rng, 3);
    CellViews views = encode_views(parent, vocab, cfg.max_seq);
    SampledActions sampled = sample_actions(ctrl.forward(views), rng);
    const double reward = rng.uniform(0.5, 1.5);
    std::vector<double> grad = ctrl.reinforce_grads(views, sampled.actions, reward);

    auto loss = [&](const Controller &c) {
        return -reward * log_prob(c.forward(views), sampled.actions);
    };
    Report rep;
    for (std::size_t k = 0; k < n_coords; k++) {
        std::size_t i = rng.index(ctrl.params().size());
        Controller plus = ctrl, minus = ctrl;
        plus.params()[i] += step;
        minus.params()[i] -= step;
        double numeric = (loss(plus) - loss(minus)) / (2 * step);
        double rel = relative_error(grad[i], numeric);
        rep.checked++;
        rep.failed += rel > tol;
        rep.worst_rel = std::max(rep.worst_rel, rel);
    }
    return rep;
}

}  // namespace qarch::gradcheck
