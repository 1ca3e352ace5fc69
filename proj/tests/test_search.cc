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


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracles.h"
#include "qarch/common/rng.h"
#include "qarch/nn/controller.h"
#include "qarch/search/random_search.h"
#include "qarch/search/relm.h"
#include "qarch/search/res.h"
#include "qarch/sim/simulator.h"
#include "qarch/tasks/task.h"

namespace qarch {
namespace {

// Regenerate H|0>: a one-qubit target reachable with one gate.
TaskSpec hadamard_task() {
    HiddenTarget t;
    t.subtask = Subtask::Single;
    t.layers = 1;
    t.circuit = Circuit(1);
    t.circuit.add(GateKind::H, 0);
    t.unitary = circuit_unitary(t.circuit, {});
    t.state = run_circuit(PureState(1), t.circuit, {});
    return make_unitary_task(t, 1);
}

TaskSpec small_denoise() {
    DenoiseTaskOptions o;
    o.data.n_train = 20;
    o.data.n_validation = 20;
    o.data.n_test_per_p = 10;
    o.data.test_grid = {0.0, 0.5};
    return make_denoise_task(NoiseKind::Bitflip, 4, o);
}

GateVocab hadamard_space() {
    std::vector<GateKind> k{GateKind::H, GateKind::RY};
    return GateVocab(k);
}

GateVocab denoise_space() {
    std::vector<GateKind> k{GateKind::RY, GateKind::RZ, GateKind::CNOT};
    return GateVocab(k);
}

bool node_prefix_contained(const Cell &seed, const Cell &child) {
    for (std::size_t q = 0; q < seed.n_qubits(); q++) {
        const auto &s = seed.node(q);
        const auto &c = child.node(q);
        if (c.size() < s.size() || !std::equal(s.begin(), s.end(), c.begin())) {
            return false;
        }
    }
    for (const auto &[e, ops] : seed.edge_ops()) {
        const auto &c = child.edge(e.first, e.second);
        if (c.size() < ops.size() || !std::equal(ops.begin(), ops.end(), c.begin())) {
            return false;
        }
    }
    return true;
}

TEST(HadamardOracle, ExactSolutionWithinTwoGates) {
    // Exhaustive over sequences of at most two gates from {H, RY(grid)}.
    using oracle::M;
    std::vector<M> ops{oracle::single(GateKind::H, 0.0)};
    for (int i = 0; i < 64; i++) {
        ops.push_back(oracle::single(GateKind::RY, 2 * std::numbers::pi * i / 64));
    }
    const M target = oracle::single(GateKind::H, 0.0);
    auto loss = [&](const M &u) { return 1.0 - std::norm((target.col(0).adjoint() * u.col(0))(0, 0)); };
    double best = 1.0;
    for (const auto &a : ops) {
        best = std::min(best, loss(a));
        for (const auto &b : ops) {
            best = std::min(best, loss(b * a));
        }
    }
    EXPECT_LE(best, 1e-12);
}

TEST(ResSearch, MatchesHadamardWithinTwoPhases) {
    TaskSpec task = hadamard_task();
    ResConfig c;
    c.population_size = 10;
    c.constraint = SoftConstraint(Quantity::NLayers, 2);
    c.max_phases = 2;
    c.seed = 3;
    ResResult r = res_search(task, hadamard_space(), c);
    EXPECT_LE(r.trace.size(), 2u);
    double cost = training_cost(task, cell_to_circuit(r.best.cell), r.best.theta);
    EXPECT_LE(cost, 1e-3);
    EXPECT_NEAR(r.best.score, 1.0 - cost, 1e-9);
}

TEST(ResSearch, BindingConstraintGivesOnePhase) {
    TaskSpec task = small_denoise();
    ResConfig c;
    c.population_size = 6;
    c.constraint = SoftConstraint(Quantity::NLayers, 1);
    c.layer_budget_per_phase = 1;
    c.seed = 5;
    ResResult r = res_search(task, denoise_space(), c);
    ASSERT_EQ(r.trace.size(), 1u);
    EXPECT_LE(r.best.metrics.n_layers, 1u);
}

TEST(ResSearch, ConstraintMonotonicityDeterminism) {
    TaskSpec task = small_denoise();
    ResConfig c;
    c.population_size = 6;
    c.constraint = SoftConstraint(Quantity::NLayers, 3);
    c.seed = 11;
    c.opt_budget = OptBudget{200, 1e-6, 1e-9, 1};
    ResResult a = res_search(task, denoise_space(), c);
    EXPECT_TRUE(eval_soft_constraint(c.constraint, a.best.cell));
    EXPECT_TRUE(c.constraint.satisfied(a.best.metrics));
    ASSERT_FALSE(a.trace.empty());
    for (std::size_t i = 1; i < a.trace.size(); i++) {
        EXPECT_GE(a.trace[i].best_score, a.trace[i - 1].best_score);
        EXPECT_EQ(a.trace[i].phase, a.trace[i - 1].phase + 1);
    }
    EXPECT_EQ(a.best.score, a.trace.back().best_score);
    for (const auto &s : a.final_population) {
        EXPECT_TRUE(eval_soft_constraint(c.constraint, s.cell));
    }

    c.jobs = 2;
    ResResult b = res_search(task, denoise_space(), c);
    EXPECT_EQ(a.best.cell, b.best.cell);
    EXPECT_EQ(a.best.theta, b.best.theta);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); i++) {
        EXPECT_EQ(a.trace[i].best_score, b.trace[i].best_score);
        EXPECT_EQ(a.trace[i].evals, b.trace[i].evals);
    }
    EXPECT_EQ(a.total_evals, b.total_evals);
}

TEST(ResSearch, LaterPhasesContainEarlierBest) {
    TaskSpec task = small_denoise();
    ResConfig c;
    c.population_size = 5;
    c.constraint = SoftConstraint(Quantity::NGates, 12);
    c.seed = 2;
    c.opt_budget = OptBudget{150, 1e-6, 1e-9, 1};
    c.max_phases = 1;
    ResResult one = res_search(task, denoise_space(), c);
    c.max_phases = 2;
    ResResult two = res_search(task, denoise_space(), c);
    ASSERT_EQ(two.trace.size(), 2u);
    EXPECT_EQ(two.trace[0].best_score, one.trace[0].best_score);
    for (const auto &s : two.final_population) {
        EXPECT_TRUE(node_prefix_contained(one.best.cell, s.cell)) << s.cell.str();
    }
}

TEST(ResSearch, LiteralModeStopsOnceSatisfied) {
    TaskSpec task = hadamard_task();
    ResConfig c;
    c.population_size = 4;
    c.constraint = SoftConstraint(Quantity::NLayers, 5);
    c.mode = ResMode::Literal;
    ResResult r = res_search(task, hadamard_space(), c);
    EXPECT_EQ(r.trace.size(), 1u);
}

TEST(ResSearch, InvalidConfig) {
    ResConfig c;
    c.population_size = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    EXPECT_THROW(SoftConstraint(Quantity::NLayers, 0), std::invalid_argument);
}

TEST(RandomSearch, PrefixAndBestSoFar) {
    TaskSpec task = hadamard_task();
    RandomSearchConfig c;
    c.n_cells = 8;
    c.seed = 9;
    auto big = random_search(task, hadamard_space(), c);
    c.n_cells = 3;
    auto small = random_search(task, hadamard_space(), c);
    ASSERT_EQ(big.evaluated.size(), 8u);
    for (std::size_t i = 0; i < 3; i++) {
        EXPECT_EQ(small.evaluated[i].cell, big.evaluated[i].cell);
        EXPECT_EQ(small.evaluated[i].score, big.evaluated[i].score);
    }
    double run = -1.0;
    for (std::size_t i = 0; i < big.evaluated.size(); i++) {
        run = std::max(run, big.evaluated[i].score);
        EXPECT_EQ(big.best_so_far[i], run);
    }
    EXPECT_EQ(big.best.score, run);
}

TEST(QaeReward, Examples) {
    EXPECT_NEAR(qae_reward(0.9, 0.5), -0.4, 1e-15);
    EXPECT_NEAR(qae_reward(0.9, 0.5, 1e-3, RewardSign::Printed), 0.4, 1e-15);
    EXPECT_NEAR(qae_reward(0.3, 0.5), 1.0, 1e-12);
    EXPECT_NEAR(qae_reward(0.6, 0.6), std::tan(0.6 * std::numbers::pi / 2), 1e-12);
    EXPECT_TRUE(std::isfinite(qae_reward(0.2, 1.0)));
    EXPECT_NEAR(qae_reward(0.2, 1.0), std::tan((1 - 1e-3) * std::numbers::pi / 2), 1e-9);
    for (double fp : {0.0, 0.3, 0.99}) {
        for (double fc : {0.01, 0.5, 1.0}) {
            double r = qae_reward(fp, fc);
            if (fc < fp) {
                EXPECT_LT(r, 0.0);
            } else {
                EXPECT_GT(r, 0.0);
            }
        }
    }
}

TEST(UnitaryReward, Examples) {
    EXPECT_EQ(unitary_reward(0.4, 0.4), 0.0);
    EXPECT_NEAR(unitary_reward(0.1, 0.3, 1.5), 0.5095254494944288, 1e-12);
    EXPECT_NEAR(unitary_reward(0.3, 0.1, 1.5), -0.5095254494944288, 1e-12);
    const double lim = std::tan((1 - 1e-3) * std::numbers::pi / 2);
    EXPECT_NEAR(unitary_reward(0.0, 1.0, 100.0), lim, 1e-9);
    EXPECT_NEAR(unitary_reward(1.0, 0.0, 100.0), -lim, 1e-9);
    EXPECT_TRUE(std::isfinite(unitary_reward(0.0, 1.0, 1.0)));
}

ScoredCell entry(double score) {
    ScoredCell s;
    s.score = score;
    return s;
}

TEST(Tournament, FullSizeIsGlobal) {
    ScoredPopulation pop{{entry(0.9), entry(0.5), entry(0.7)}, 3};
    Rng rng(1);
    auto r = tournament_step(pop, 3, rng);
    EXPECT_EQ(r.best.score, 0.9);
    EXPECT_EQ(r.worst.score, 0.5);
    ASSERT_EQ(pop.entries.size(), 2u);
    for (const auto &e : pop.entries) {
        EXPECT_NE(e.score, 0.5);
    }
}

TEST(Tournament, SubsetAndErrors) {
    Rng rng(4);
    for (int i = 0; i < 50; i++) {
        ScoredPopulation pop{{entry(0.1), entry(0.2), entry(0.3), entry(0.4), entry(0.5)}, 5};
        auto r = tournament_step(pop, 2, rng);
        EXPECT_GT(r.best.score, r.worst.score);
        EXPECT_EQ(pop.entries.size(), 4u);
        EXPECT_TRUE(std::any_of(pop.entries.begin(), pop.entries.end(), [&](const ScoredCell &e) {
            return e.score == r.best.score;
        }));
    }
    ScoredPopulation one{{entry(0.3)}, 1};
    auto r = tournament_step(one, 1, rng);
    EXPECT_EQ(r.best.score, 0.3);
    EXPECT_TRUE(one.entries.empty());
    ScoredPopulation small{{entry(0.3)}, 1};
    EXPECT_THROW(tournament_step(small, 2, rng), std::invalid_argument);
    EXPECT_THROW(tournament_step(small, 0, rng), std::invalid_argument);
}

ControllerConfig small_controller(const GateVocab &v, std::size_t n) {
    ControllerConfig c;
    c.n_qubits = n;
    c.max_seq = 8;
    c.v_rot = v.rotation_size();
    c.v_ent = v.entangle_size();
    c.embed = 8;
    c.ff_hidden = 16;
    c.heads = 2;
    c.blocks = 1;
    return c;
}

TEST(Mutate, CopyOnlyControllerIsIdentity) {
    auto v = denoise_space();
    auto cfg = small_controller(v, 3);
    Rng init(0);
    Controller probe(cfg, init);
    std::vector<double> params(probe.params().size(), 0.0);
    params[probe.tensor("copy_gain").offset] = 60.0;
    Controller c(cfg, params);
    Rng rng(5);
    for (int i = 0; i < 20; i++) {
        Cell parent = random_cell(v, 3, rng, 2);
        EXPECT_EQ(mutate(c, parent, v, rng, true).child, parent);
        Mutation m = mutate(c, parent, v, rng, false);
        EXPECT_EQ(m.child, parent);
        EXPECT_EQ(m.actions, cell_actions(parent, v, cfg.max_seq));
        EXPECT_LE(m.log_prob, 0.0);
        EXPECT_GT(m.log_prob, -1e-6);
    }
}

TEST(Mutate, AllNoOpDecodesEmpty) {
    auto v = denoise_space();
    Cell c = decode_actions(Actions(3, 8), v);
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(c.n_qubits(), 3u);
}

TEST(Mutate, FreshControllerExplores) {
    auto v = denoise_space();
    auto cfg = small_controller(v, 3);
    Rng init(7);
    Controller c(cfg, init);
    Rng rng(8);
    Cell parent = random_cell(v, 3, rng, 1);
    int differ = 0;
    for (int i = 0; i < 100; i++) {
        Mutation m = mutate(c, parent, v, rng);
        EXPECT_TRUE(std::isfinite(m.log_prob));
        EXPECT_NO_THROW(cell_to_circuit(m.child));
        differ += m.child != parent;
    }
    EXPECT_GT(differ, 0);
}

RelmConfig tiny_relm(uint64_t seed) {
    RelmConfig c;
    c.epochs = 3;
    c.tournament_size = 2;
    c.batch_size = 3;
    c.population_size = 4;
    c.learning_rate = 1e-2;
    c.controller.embed = 8;
    c.controller.ff_hidden = 16;
    c.controller.heads = 2;
    c.controller.blocks = 1;
    c.res.constraint = SoftConstraint(Quantity::NLayers, 2);
    c.res.max_phases = 2;
    c.opt_budget = OptBudget{120, 1e-6, 1e-9, 1};
    c.seed = seed;
    return c;
}

TEST(Relm, MinimalRun) {
    TaskSpec task = hadamard_task();
    RelmConfig c = tiny_relm(1);
    c.epochs = 1;
    c.tournament_size = 1;
    c.batch_size = 1;
    c.population_size = 1;
    c.init_mode = InitMode::RandomSearch;
    c.reward.mode = RewardMode::Unitary;
    RelmResult r = run_relm(task, hadamard_space(), c);
    EXPECT_EQ(r.trace.size(), 1u);
    EXPECT_EQ(r.best.cell.n_qubits(), 1u);
    EXPECT_NO_THROW(cell_to_circuit(r.best.cell));
    EXPECT_EQ(r.final_population.entries.size(), 1u);
    EXPECT_FALSE(r.res.has_value());
}

TEST(Relm, InvariantsAndDeterminism) {
    TaskSpec task = small_denoise();
    RelmConfig c = tiny_relm(21);
    RelmResult a = run_relm(task, denoise_space(), c);
    ASSERT_TRUE(a.res.has_value());
    ASSERT_EQ(a.trace.size(), c.epochs);
    EXPECT_EQ(a.final_population.entries.size(), c.population_size);
    double prev = a.init_best_score;
    for (const auto &t : a.trace) {
        EXPECT_GE(t.best_score, prev);
        prev = t.best_score;
        EXPECT_TRUE(std::isfinite(t.mean_reward));
        EXPECT_TRUE(std::isfinite(t.smoothed_reward));
    }
    EXPECT_EQ(a.best.score, a.trace.back().best_score);
    EXPECT_GE(a.best.score, a.init_best_score);

    c.jobs = 2;
    RelmResult b = run_relm(task, denoise_space(), c);
    EXPECT_EQ(a.best.cell, b.best.cell);
    EXPECT_EQ(a.best.theta, b.best.theta);
    ASSERT_EQ(a.trace.size(), b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); i++) {
        EXPECT_EQ(a.trace[i].mean_reward, b.trace[i].mean_reward);
        EXPECT_EQ(a.trace[i].best_score, b.trace[i].best_score);
    }
}

TEST(Relm, ResInitRespectsConstraint) {
    TaskSpec task = small_denoise();
    RelmConfig c = tiny_relm(5);
    auto pop = init_population(task, denoise_space(), c);
    EXPECT_EQ(pop.capacity, c.population_size);
    EXPECT_EQ(pop.entries.size(), c.population_size);
    for (const auto &e : pop.entries) {
        EXPECT_TRUE(eval_soft_constraint(c.res.constraint, e.cell)) << e.cell.str();
    }
}

TEST(Relm, ConstrainedChildrenNeverAdmitted) {
    TaskSpec task = small_denoise();
    RelmConfig c = tiny_relm(8);
    c.constraint = SoftConstraint(Quantity::NLayers, 2);
    RelmResult r = run_relm(task, denoise_space(), c);
    for (const auto &e : r.final_population.entries) {
        EXPECT_TRUE(eval_soft_constraint(*c.constraint, e.cell));
    }
    EXPECT_TRUE(eval_soft_constraint(*c.constraint, r.best.cell));
}

TEST(Relm, NeverEndsBelowItsInitialization) {
    TaskSpec task = hadamard_task();
    int ok = 0;
    for (uint64_t seed = 1; seed <= 10; seed++) {
        RelmConfig c = tiny_relm(seed);
        c.reward.mode = RewardMode::Unitary;
        RelmResult r = run_relm(task, hadamard_space(), c);
        ok += r.best.score >= r.init_best_score;
    }
    EXPECT_GT(ok, 5);
}

TEST(Relm, InvalidConfig) {
    RelmConfig c;
    c.tournament_size = 31;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = RelmConfig{};
    c.batch_size = 0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
    c = RelmConfig{};
    c.learning_rate = 0.0;
    EXPECT_THROW(c.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace qarch
