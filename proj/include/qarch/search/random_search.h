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

#include "qarch/ir/cell.h"
#include "qarch/ir/vocab.h"
#include "qarch/opt/score.h"
#include "qarch/tasks/task.h"

namespace qarch {

/// Index of the best entry: highest score, then fewer parameters, then lowest index.
std::size_t select_best(std::span<const ScoredCell> population);

struct RandomSearchConfig {
    /// Number of cells to score.
    std::size_t n_cells = 30;
    std::size_t layer_budget = 1;
    std::optional<SoftConstraint> constraint;
    std::optional<OptBudget> opt_budget;
    uint64_t seed = 0;
    std::size_t jobs = 1;
    /// Draws per slot before giving up on finding an admissible cell.
    std::size_t max_resample = 200;
};

struct RandomSearchResult {
    ScoredCell best;
    std::vector<ScoredCell> evaluated;
    /// best_so_far[i] = max score over evaluated[0..i].
    std::vector<double> best_so_far;
    std::size_t total_evals = 0;
};

/// Independent random cells drawn sequentially from one stream, so a smaller
/// budget with the same seed scores a prefix of a larger one.
RandomSearchResult random_search(const TaskSpec &task, const GateVocab &space, const RandomSearchConfig &config);

}  // namespace qarch
