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

#include "qarch/search/relm.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qarch/common/parallel.h"
#include "qarch/nn/adam.h"
#include "qarch/search/random_search.h"

namespace qarch {

std::string_view init_mode_name(InitMode m) {
    return m == InitMode::Res ? "res" : "random_search";
}

InitMode init_mode_from_name(std::string_view name) {
    if (name == "res") {
        return InitMode::Res;
    }
    if (name == "random_search" || name == "rs") {
        return InitMode::RandomSearch;
    }
    throw std::invalid_argument("unknown init mode '" + std::string(name) + "'");
}

std::string_view reward_mode_name(RewardMode m) {
    return m == RewardMode::Qae ? "qae" : "unitary";
}

RewardMode reward_mode_from_name(std::string_view name) {
    if (name == "qae") {
        return RewardMode::Qae;
    }
    if (name == "unitary") {
        return RewardMode::Unitary;
    }
    throw std::invalid_argument("unknown reward mode '" + std::string(name) + "'");
}

std::string_view reward_sign_name(RewardSign s) {
    return s == RewardSign::Text ? "text" : "printed";
}

RewardSign reward_sign_from_name(std::string_view name) {
    if (name == "text") {
        return RewardSign::Text;
    }
    if (name == "printed") {
        return RewardSign::Printed;
    }
    throw std::invalid_argument("unknown reward sign '" + std::string(name) + "'");
}

void RewardSpec::validate() const {
    if (!(eps_tan > 0.0 && eps_tan < 1.0)) {
        throw std::invalid_argument("eps_tan must lie in (0, 1)");
    }
    if (!std::isfinite(alpha)) {
        throw std::invalid_argument("reward alpha must be finite");
    }
}

double qae_reward(double f_parent, double f_child, double eps_tan, RewardSign sign) {
    if (f_parent > f_child) {
        return sign == RewardSign::Text ? f_child - f_parent : f_parent - f_child;
    }
    return std::tan(std::min(f_child, 1.0 - eps_tan) * std::numbers::pi / 2.0);
}

double unitary_reward(double l_parent, double l_child, double alpha, double eps_tan) {
    const double limit = (1.0 - eps_tan) * std::numbers::pi / 2.0;
    double arg = alpha * (l_child - l_parent) * std::numbers::pi / 2.0;
    return std::tan(std::clamp(arg, -limit, limit));
}

TournamentResult tournament_step(ScoredPopulation &pop, std::size_t k, Rng &rng) {
    if (k < 1) {
        throw std::invalid_argument("tournament size must be at least 1");
    }
    if (pop.entries.size() < k) {
        throw std::invalid_argument(
            "population of " + std::to_string(pop.entries.size()) + " is smaller than tournament size " +
            std::to_string(k));
    }
    // Partial Fisher-Yates over indices.
    std::vector<std::size_t> idx(pop.entries.size());
    for (std::size_t i = 0; i < idx.size(); i++) {
        idx[i] = i;
    }
    for (std::size_t i = 0; i < k; i++) {
        std::swap(idx[i], idx[i + rng.index(idx.size() - i)]);
    }
    std::size_t best = idx[0], worst = idx[0];
    for (std::size_t i = 1; i < k; i++) {
        const auto &c = pop.entries[idx[i]];
        if (c.score > pop.entries[best].score) {
            best = idx[i];
        }
        if (c.score < pop.entries[worst].score) {
            worst = idx[i];
        }
    }
    TournamentResult r{pop.entries[best], pop.entries[worst]};
    pop.entries.erase(pop.entries.begin() + static_cast<std::ptrdiff_t>(worst));
    return r;
}

Mutation mutate(const Controller &controller, const Cell &parent, const GateVocab &vocab, Rng &rng, bool greedy) {
    CellViews views = encode_views(parent, vocab, controller.config().max_seq);
    Logits logits = controller.forward(views);
    SampledActions s = sample_actions(logits, rng, greedy);
    return Mutation{decode_actions(s.actions, vocab), std::move(s.actions), s.log_prob};
}

void RelmConfig::validate() const {
    if (epochs < 1) {
        throw std::invalid_argument("RELM epochs must be at least 1");
    }
    if (tournament_size < 1) {
        throw std::invalid_argument("RELM tournament_size must be at least 1");
    }
    if (tournament_size > population_size) {
        throw std::invalid_argument(
            "RELM tournament_size " + std::to_string(tournament_size) + " exceeds population_size " +
            std::to_string(population_size));
    }
    if (batch_size < 1) {
        throw std::invalid_argument("RELM batch_size must be at least 1");
    }
    if (!(learning_rate > 0.0)) {
        throw std::invalid_argument("RELM learning_rate must be positive");
    }
    reward.validate();
    if (opt_budget) {
        opt_budget->validate();
    }
}

ScoredPopulation init_population(
    const TaskSpec &task, const GateVocab &space, const RelmConfig &config, std::optional<ResResult> *res_out) {
    ScoredPopulation pop;
    pop.capacity = config.population_size;
    if (config.init_mode == InitMode::RandomSearch) {
        RandomSearchConfig rc;
        rc.n_cells = config.population_size;
        rc.layer_budget = config.random_layer_budget;
        rc.opt_budget = config.opt_budget;
        rc.seed = Rng::derive(config.seed, "relm/init").seed();
        rc.jobs = config.jobs;
        pop.entries = random_search(task, space, rc).evaluated;
        return pop;
    }
    ResConfig rc = config.res;
    rc.population_size = config.population_size;
    rc.seed = Rng::derive(config.seed, "relm/init").seed();
    rc.jobs = config.jobs;
    if (!rc.opt_budget) {
        rc.opt_budget = config.opt_budget;
    }
    ResResult res = res_search(task, space, rc);
    pop.entries = res.final_population;
    if (pop.entries.size() < pop.capacity) {
        // Top up with random cells that respect the RES constraint.
        Rng rng = Rng::derive(rc.seed, "relm/topup");
        std::vector<Cell> extra;
        std::size_t attempts = 0;
        while (pop.entries.size() + extra.size() < pop.capacity && attempts < rc.max_resample * pop.capacity) {
            attempts++;
            Cell c = random_cell(space, task.n_qubits, rng, rc.layer_budget_per_phase);
            if (eval_soft_constraint(rc.constraint, c)) {
                extra.push_back(std::move(c));
            }
        }
        auto scored = evaluate_population(extra, task, rc.opt_budget, rc.seed, rc.jobs);
        pop.entries.insert(pop.entries.end(), scored.begin(), scored.end());
    }
    if (res_out) {
        *res_out = std::move(res);
    }
    return pop;
}

namespace {

bool better(const ScoredCell &a, const ScoredCell &b) {
    return a.score > b.score || (a.score == b.score && a.metrics.n_params < b.metrics.n_params);
}

}  // namespace

RelmResult relm_search(const TaskSpec &task, const GateVocab &space, const RelmConfig &config, ScoredPopulation pop) {
    config.validate();
    if (pop.entries.size() < config.tournament_size) {
        throw std::invalid_argument(
            "initial population of " + std::to_string(pop.entries.size()) + " is smaller than tournament size " +
            std::to_string(config.tournament_size));
    }
    if (pop.capacity == 0) {
        pop.capacity = pop.entries.size();
    }
    RelmResult result;
    result.best = pop.entries[select_best(pop.entries)];
    result.init_best_score = result.best.score;

    ControllerConfig cc = config.controller;
    cc.n_qubits = task.n_qubits;
    cc.v_rot = space.rotation_size();
    cc.v_ent = space.entangle_size();
    if (config.max_seq > 0) {
        cc.max_seq = config.max_seq;
    } else {
        std::vector<Cell> cells;
        for (const auto &e : pop.entries) {
            cells.push_back(e.cell);
        }
        cc.max_seq = default_max_seq(cells);
    }
    Rng init_rng = Rng::derive(config.seed, "relm/controller");
    Controller controller(cc, init_rng);
    Adam adam(controller.params().size(), AdamConfig{config.learning_rate});
    const bool qae = config.reward.mode == RewardMode::Qae;
    double smoothed = 0.0;

    for (std::size_t epoch = 1; epoch <= config.epochs; epoch++) {
        Rng rng = Rng::derive(config.seed, "relm/epoch", epoch);
        TournamentResult tr = tournament_step(pop, config.tournament_size, rng);
        const ScoredCell &parent = tr.best;
        CellViews views = encode_views(parent.cell, space, cc.max_seq);
        Logits logits = controller.forward(views);

        std::vector<SampledActions> samples;
        std::vector<Cell> children;
        std::vector<bool> admissible;
        for (std::size_t b = 0; b < config.batch_size; b++) {
            samples.push_back(sample_actions(logits, rng, false));
            children.push_back(decode_actions(samples.back().actions, space));
            admissible.push_back(!config.constraint || eval_soft_constraint(*config.constraint, children.back()));
        }

        std::vector<std::optional<ScoredCell>> scored(children.size());
        parallel_for(children.size(), config.jobs, [&](std::size_t b) {
            if (!admissible[b]) {
                return;
            }
            Rng crng = cell_rng(config.seed, children[b]);
            std::span<const double> warm;
            if (config.warm_start) {
                warm = parent.theta;
            }
            scored[b] = score_cell(children[b], task, config.opt_budget, crng, warm);
        });

        EpochTrace et;
        et.epoch = epoch;
        et.parent_score = parent.score;
        std::vector<double> grad(controller.params().size(), 0.0);
        std::optional<std::size_t> best_child;
        double reward_sum = 0.0;
        for (std::size_t b = 0; b < children.size(); b++) {
            double f_child = scored[b] ? scored[b]->score : 0.0;
            if (!scored[b]) {
                et.violating_children++;
            } else {
                et.evals += scored[b]->evals;
                if (!best_child || better(*scored[b], *scored[*best_child])) {
                    best_child = b;
                }
            }
            double r = qae ? qae_reward(parent.score, f_child, config.reward.eps_tan, config.reward.sign)
                           : unitary_reward(1.0 - parent.score, 1.0 - f_child, config.reward.alpha, config.reward.eps_tan);
            reward_sum += r;
            std::vector<double> g = controller.reinforce_grads(views, samples[b].actions, r);
            for (std::size_t i = 0; i < grad.size(); i++) {
                grad[i] += g[i] / static_cast<double>(children.size());
            }
        }
        adam.step(controller.params(), grad);

        et.mean_reward = reward_sum / static_cast<double>(children.size());
        smoothed = epoch == 1 ? et.mean_reward : 0.7 * smoothed + 0.3 * et.mean_reward;
        et.smoothed_reward = smoothed;
        if (best_child) {
            const ScoredCell &child = *scored[*best_child];
            et.best_child_score = child.score;
            pop.entries.push_back(child);
            et.admitted = true;
            if (better(child, result.best)) {
                result.best = child;
            }
        } else {
            pop.entries.push_back(tr.worst);
        }
        et.best_score = result.best.score;
        result.total_evals += et.evals;
        result.trace.push_back(et);
    }
    result.final_population = std::move(pop);
    return result;
}

RelmResult run_relm(const TaskSpec &task, const GateVocab &space, const RelmConfig &config) {
    config.validate();
    std::optional<ResResult> res;
    ScoredPopulation pop = init_population(task, space, config, &res);
    RelmResult out = relm_search(task, space, config, std::move(pop));
    out.res = std::move(res);
    return out;
}

}  // namespace qarch
