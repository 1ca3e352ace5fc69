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

#include "qarch/search/res.h"

#include <stdexcept>
#include <string>

#include "qarch/search/random_search.h"

namespace qarch {

std::string_view res_mode_name(ResMode m) {
    return m == ResMode::Budget ? "budget" : "literal";
}

ResMode res_mode_from_name(std::string_view name) {
    if (name == "budget") {
        return ResMode::Budget;
    }
    if (name == "literal") {
        return ResMode::Literal;
    }
    throw std::invalid_argument("unknown RES mode '" + std::string(name) + "'");
}

void ResConfig::validate() const {
    if (population_size < 1) {
        throw std::invalid_argument("RES population_size must be at least 1");
    }
    if (max_phases < 1) {
        throw std::invalid_argument("RES max_phases must be at least 1");
    }
    if (layer_budget_per_phase < 1) {
        throw std::invalid_argument("RES layer_budget_per_phase must be at least 1");
    }
    if (max_resample < 1) {
        throw std::invalid_argument("RES max_resample must be at least 1");
    }
    if (opt_budget) {
        opt_budget->validate();
    }
}

namespace {

struct Tracker {
    ResResult &res;
    std::optional<ScoredCell> best_admissible;
    const SoftConstraint &constraint;

    void record(std::size_t phase, const std::vector<ScoredCell> &scored, const ScoredCell &phase_best) {
        PhaseTrace t;
        t.phase = phase;
        t.best_score = phase_best.score;
        t.best_metrics = phase_best.metrics;
        for (const auto &s : scored) {
            t.evals += s.evals;
            if (constraint.satisfied(s.metrics) &&
                (!best_admissible || s.score > best_admissible->score ||
                 (s.score == best_admissible->score && s.metrics.n_params < best_admissible->metrics.n_params))) {
                best_admissible = s;
            }
        }
        t.scored = scored.size();
        res.total_evals += t.evals;
        res.cells_scored += t.scored;
        res.trace.push_back(t);
    }
};

}  // namespace

ResResult res_search(const TaskSpec &task, const GateVocab &space, const ResConfig &config) {
    config.validate();
    const bool budget_mode = config.mode == ResMode::Budget;
    const auto &constraint = config.constraint;
    ResResult res;
    Tracker tracker{res, std::nullopt, constraint};

    // Phase 1: independent random cells.
    Rng rng = Rng::derive(config.seed, "res/sample", 1);
    std::vector<Cell> cells;
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < config.population_size; i++) {
        for (std::size_t attempt = 0; attempt < config.max_resample; attempt++) {
            Cell c = random_cell(space, task.n_qubits, rng, config.layer_budget_per_phase);
            if (!budget_mode || eval_soft_constraint(constraint, c)) {
                cells.push_back(std::move(c));
                break;
            }
            rejected++;
        }
    }
    if (cells.empty()) {
        throw std::runtime_error(
            "RES found no cell with " + std::string(quantity_name(constraint.quantity)) +
            " <= " + std::to_string(constraint.bound) + " after " + std::to_string(rejected) +
            " draws; loosen the constraint or lower layer_budget_per_phase");
    }
    std::vector<ScoredCell> population = evaluate_population(cells, task, config.opt_budget, config.seed, config.jobs);
    ScoredCell best = population[select_best(population)];
    tracker.record(1, population, best);

    for (std::size_t phase = 2; phase <= config.max_phases; phase++) {
        bool expand = budget_mode ? constraint.has_headroom(best.metrics) : !constraint.satisfied(best.metrics);
        if (!expand) {
            break;
        }
        Rng prng = Rng::derive(config.seed, "res/sample", phase);
        std::vector<Cell> children;
        const std::size_t seed_gates = best.cell.n_gates();
        for (std::size_t i = 0; i + 1 < config.population_size || (config.population_size == 1 && i == 0); i++) {
            for (std::size_t attempt = 0; attempt < config.max_resample; attempt++) {
                Cell c = expand_cell(best.cell, space, prng, config.layer_budget_per_phase);
                if (c.n_gates() > seed_gates && (!budget_mode || eval_soft_constraint(constraint, c))) {
                    children.push_back(std::move(c));
                    break;
                }
            }
        }
        if (children.empty()) {
            break;
        }
        std::vector<ScoredCell> scored = evaluate_population(children, task, config.opt_budget, config.seed, config.jobs);
        std::vector<ScoredCell> next;
        next.reserve(scored.size() + 1);
        next.push_back(best);
        next.insert(next.end(), scored.begin(), scored.end());
        population = std::move(next);
        best = population[select_best(population)];
        tracker.record(phase, scored, best);
    }

    if (!tracker.best_admissible) {
        throw std::runtime_error("RES found no cell satisfying the constraint");
    }
    res.best = budget_mode ? best : *tracker.best_admissible;
    res.final_population = std::move(population);
    return res;
}

}  // namespace qarch
