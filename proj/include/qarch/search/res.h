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
#include <string_view>
#include <vector>

#include "qarch/ir/cell.h"
#include "qarch/ir/vocab.h"
#include "qarch/opt/score.h"
#include "qarch/tasks/task.h"

namespace qarch {

/// Budget: the constraint is an upper bound; keep expanding the best cell
///   while it has headroom, admitting only candidates within the bound.
/// Literal: expand only while the best cell violates the constraint, and
///   return the best satisfying cell seen.
enum class ResMode : uint8_t { Budget, Literal };
std::string_view res_mode_name(ResMode m);
ResMode res_mode_from_name(std::string_view name);

struct ResConfig {
    std::size_t population_size = 30;
    SoftConstraint constraint{Quantity::NLayers, 3};
    std::size_t layer_budget_per_phase = 1;
    std::optional<OptBudget> opt_budget;
    std::size_t max_phases = 10;
    uint64_t seed = 0;
    ResMode mode = ResMode::Budget;
    /// Draws per population slot before the slot is left empty.
    std::size_t max_resample = 200;
    std::size_t jobs = 1;

    void validate() const;
};

struct PhaseTrace {
    std::size_t phase = 0;
    double best_score = 0.0;
    CellMetrics best_metrics;
    /// Optimizer evaluations spent on cells scored in this phase.
    std::size_t evals = 0;
    /// Cells newly scored in this phase.
    std::size_t scored = 0;
};

struct ResResult {
    ScoredCell best;
    std::vector<PhaseTrace> trace;
    /// Scored population of the last phase (the carried-over seed included).
    std::vector<ScoredCell> final_population;
    std::size_t total_evals = 0;
    std::size_t cells_scored = 0;
};

/// Random Elastic Search: a random population phase followed by expansion
/// phases seeded with the current best cell. The best cell is carried into
/// each new population unchanged, so the best score never decreases.
ResResult res_search(const TaskSpec &task, const GateVocab &space, const ResConfig &config);

}  // namespace qarch
