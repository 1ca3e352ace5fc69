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
#include "qarch/ir/views.h"
#include "qarch/ir/vocab.h"
#include "qarch/nn/controller.h"
#include "qarch/opt/score.h"
#include "qarch/search/res.h"
#include "qarch/tasks/task.h"

namespace qarch {

enum class InitMode : uint8_t { RandomSearch, Res };
enum class RewardMode : uint8_t { Qae, Unitary };
/// Sign of the worse-child branch of the autoencoder reward: Text gives
/// f_child - f_parent (negative), Printed gives f_parent - f_child.
enum class RewardSign : uint8_t { Text, Printed };

std::string_view init_mode_name(InitMode m);
InitMode init_mode_from_name(std::string_view name);
std::string_view reward_mode_name(RewardMode m);
RewardMode reward_mode_from_name(std::string_view name);
std::string_view reward_sign_name(RewardSign s);
RewardSign reward_sign_from_name(std::string_view name);

struct RewardSpec {
    RewardMode mode = RewardMode::Qae;
    double alpha = 1.5;
    /// tan arguments are kept within (1 - eps_tan) * pi/2 of zero.
    double eps_tan = 1e-3;
    RewardSign sign = RewardSign::Text;

    void validate() const;
};

/// f_parent > f_child: f_child - f_parent (Text) or f_parent - f_child (Printed).
/// Otherwise: tan(min(f_child, 1 - eps_tan) * pi/2).
double qae_reward(double f_parent, double f_child, double eps_tan = 1e-3, RewardSign sign = RewardSign::Text);

/// tan(alpha * (l_child - l_parent) * pi/2), argument clipped to +-(1 - eps_tan) pi/2.
double unitary_reward(double l_parent, double l_child, double alpha = 1.5, double eps_tan = 1e-3);

struct ScoredPopulation {
    std::vector<ScoredCell> entries;
    std::size_t capacity = 0;
};

struct TournamentResult {
    ScoredCell best;
    ScoredCell worst;
};

/// Samples K members without replacement, removes the worst of them from the
/// population and returns the best (which stays, unless K = 1 makes it the
/// removed one too). Ties go to the earlier-sampled member.
TournamentResult tournament_step(ScoredPopulation &pop, std::size_t k, Rng &rng);

struct Mutation {
    Cell child{1};
    Actions actions;
    double log_prob = 0.0;
};

Mutation mutate(
    const Controller &controller,
    const Cell &parent,
    const GateVocab &vocab,
    Rng &rng,
    bool greedy = false);

struct RelmConfig {
    std::size_t epochs = 30;
    std::size_t tournament_size = 5;
    std::size_t batch_size = 32;
    double learning_rate = 3e-4;
    InitMode init_mode = InitMode::Res;
    RewardSpec reward;
    std::size_t population_size = 30;
    /// Only embed, ff_hidden, heads, blocks and copy_gain are read; the rest is
    /// derived from the task and the initial population.
    ControllerConfig controller;
    /// 0 picks default_max_seq of the initial population.
    std::size_t max_seq = 0;
    /// Children violating this are not scored and never admitted.
    std::optional<SoftConstraint> constraint;
    /// Start children from the parent's theta when the parameter count matches.
    bool warm_start = true;
    std::optional<OptBudget> opt_budget;
    /// Used for the RES initializer (population_size and seed are overridden).
    ResConfig res;
    /// Layer budget of random cells in the random_search initializer.
    std::size_t random_layer_budget = 1;
    uint64_t seed = 0;
    std::size_t jobs = 1;

    void validate() const;
};

struct EpochTrace {
    std::size_t epoch = 0;
    double parent_score = 0.0;
    double mean_reward = 0.0;
    double smoothed_reward = 0.0;
    double best_child_score = 0.0;
    double best_score = 0.0;
    std::size_t violating_children = 0;
    bool admitted = false;
    std::size_t evals = 0;
};

struct RelmResult {
    ScoredCell best;
    double init_best_score = 0.0;
    std::vector<EpochTrace> trace;
    ScoredPopulation final_population;
    /// Present when the population came from RES.
    std::optional<ResResult> res;
    std::size_t total_evals = 0;
};

/// Random-search or RES population, scored, at most config.population_size entries.
ScoredPopulation init_population(
    const TaskSpec &task, const GateVocab &space, const RelmConfig &config, std::optional<ResResult> *res_out = nullptr);

/// Evolution loop over `pop` with a freshly initialized controller.
RelmResult relm_search(const TaskSpec &task, const GateVocab &space, const RelmConfig &config, ScoredPopulation pop);

/// init_population followed by relm_search.
RelmResult run_relm(const TaskSpec &task, const GateVocab &space, const RelmConfig &config);

}  // namespace qarch
