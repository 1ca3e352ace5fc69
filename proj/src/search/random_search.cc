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

#include "qarch/search/random_search.h"

#include <stdexcept>

namespace qarch {

std::size_t select_best(std::span<const ScoredCell> population) {
    if (population.empty()) {
        throw std::invalid_argument("select_best on an empty population");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < population.size(); i++) {
        const auto &a = population[i];
        const auto &b = population[best];
        if (a.score > b.score || (a.score == b.score && a.metrics.n_params < b.metrics.n_params)) {
            best = i;
        }
    }
    return best;
}

RandomSearchResult random_search(const TaskSpec &task, const GateVocab &space, const RandomSearchConfig &config) {
    if (config.n_cells < 1) {
        throw std::invalid_argument("random search needs a budget of at least one cell");
    }
    Rng rng = Rng::derive(config.seed, "random-search");
    std::vector<Cell> cells;
    for (std::size_t i = 0; i < config.n_cells; i++) {
        bool found = false;
        for (std::size_t attempt = 0; attempt < config.max_resample && !found; attempt++) {
            Cell c = random_cell(space, task.n_qubits, rng, config.layer_budget);
            if (!config.constraint || eval_soft_constraint(*config.constraint, c)) {
                cells.push_back(std::move(c));
                found = true;
            }
        }
        if (!found) {
            throw std::runtime_error("random search could not sample a cell satisfying the constraint");
        }
    }
    RandomSearchResult res;
    res.evaluated = evaluate_population(cells, task, config.opt_budget, config.seed, config.jobs);
    double running = -1.0;
    for (const auto &s : res.evaluated) {
        running = std::max(running, s.score);
        res.best_so_far.push_back(running);
        res.total_evals += s.evals;
    }
    res.best = res.evaluated[select_best(res.evaluated)];
    return res;
}

}  // namespace qarch
