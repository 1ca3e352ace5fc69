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
#include <optional>
#include <span>
#include <vector>

#include "qarch/common/rng.h"
#include "qarch/ir/cell.h"
#include "qarch/opt/nelder_mead.h"
#include "qarch/tasks/task.h"

namespace qarch {

struct TrainedCircuit {
    std::vector<double> theta;
    double train_cost = 0.0;
    /// Mean validation fidelity (higher is better).
    double score = 0.0;
    std::size_t evals = 0;
};

/// Minimizes the task's training cost over theta and scores the result on the
/// validation set. theta starts at `warm_start` when its length matches the
/// circuit, otherwise uniform on [-pi, pi]. Without a budget,
/// OptBudget::for_params(n_params) is used.
TrainedCircuit train_circuit(
    const Circuit &circuit,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    Rng &rng,
    std::span<const double> warm_start = {});

struct ScoredCell {
    Cell cell{1};
    std::vector<double> theta;
    double score = 0.0;
    double train_cost = 0.0;
    std::size_t evals = 0;
    CellMetrics metrics;
};

/// Materializes the cell's circuit only now, then trains and scores it.
ScoredCell score_cell(
    const Cell &cell,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    Rng &rng,
    std::span<const double> warm_start = {});

/// Scores every cell with its own generator derived from (seed, cell content),
/// so results do not depend on list order or on the number of worker threads.
std::vector<ScoredCell> evaluate_population(
    std::span<const Cell> cells,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    uint64_t seed,
    std::size_t jobs = 1);

/// Generator used by evaluate_population for `cell`.
Rng cell_rng(uint64_t seed, const Cell &cell);

}  // namespace qarch
