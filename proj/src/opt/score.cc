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

#include "qarch/opt/score.h"

#include <numbers>
#include <stdexcept>

#include "qarch/common/parallel.h"

namespace qarch {

TrainedCircuit train_circuit(
    const Circuit &circuit,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    Rng &rng,
    std::span<const double> warm_start) {
    if (circuit.n_qubits() != task.n_qubits) {
        throw std::invalid_argument(
            "circuit width " + std::to_string(circuit.n_qubits()) + " does not match task width " +
            std::to_string(task.n_qubits));
    }
    const std::size_t np = circuit.n_params();
    std::vector<double> theta0;
    if (warm_start.size() == np) {
        theta0.assign(warm_start.begin(), warm_start.end());
    } else {
        theta0.resize(np);
        for (auto &v : theta0) {
            v = rng.uniform(-std::numbers::pi, std::numbers::pi);
        }
    }
    TrainedCircuit out;
    if (np == 0) {
        out.train_cost = training_cost(task, circuit, {});
        out.evals = 1;
    } else {
        OptBudget b = budget ? *budget : OptBudget::for_params(np);
        OptResult r = minimize(
            [&](std::span<const double> th) {
                return training_cost(task, circuit, th);
            },
            theta0,
            b,
            rng);
        theta0 = std::move(r.theta_star);
        out.train_cost = r.cost;
        out.evals = r.evals_used;
    }
    out.theta = std::move(theta0);
    out.score = validation_score(task, circuit, out.theta);
    return out;
}

ScoredCell score_cell(
    const Cell &cell,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    Rng &rng,
    std::span<const double> warm_start) {
    if (cell.n_qubits() != task.n_qubits) {
        throw std::invalid_argument(
            "cell width " + std::to_string(cell.n_qubits()) + " does not match task width " +
            std::to_string(task.n_qubits));
    }
    Circuit circuit = cell_to_circuit(cell);
    TrainedCircuit t = train_circuit(circuit, task, budget, rng, warm_start);
    ScoredCell out;
    out.cell = cell;
    out.theta = std::move(t.theta);
    out.score = t.score;
    out.train_cost = t.train_cost;
    out.evals = t.evals;
    out.metrics = metrics(circuit);
    return out;
}

Rng cell_rng(uint64_t seed, const Cell &cell) {
    return Rng::derive(seed, "score-cell", cell_fingerprint(cell));
}

std::vector<ScoredCell> evaluate_population(
    std::span<const Cell> cells,
    const TaskSpec &task,
    const std::optional<OptBudget> &budget,
    uint64_t seed,
    std::size_t jobs) {
    std::vector<ScoredCell> out(cells.size());
    parallel_for(cells.size(), jobs, [&](std::size_t i) {
        Rng rng = cell_rng(seed, cells[i]);
        out[i] = score_cell(cells[i], task, budget, rng);
    });
    return out;
}

}  // namespace qarch
