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

#include <cmath>
#include <limits>
#include <numbers>

#include "qarch/common/rng.h"
#include "qarch/opt/nelder_mead.h"
#include "qarch/opt/score.h"
#include "qarch/sim/quantum_info.h"
#include "qarch/sim/simulator.h"
#include "qarch/tasks/task.h"

namespace qarch {
namespace {

TEST(OptBudget, DefaultsAndValidation) {
    auto b = OptBudget::for_params(4);
    EXPECT_EQ(b.max_evals, 750u);
    EXPECT_EQ(b.restarts, 3u);
    EXPECT_EQ(b.x_tol, 1e-6);
    EXPECT_EQ(b.f_tol, 1e-9);
    EXPECT_THROW((OptBudget{0, 1e-6, 1e-9, 3}.validate()), std::invalid_argument);
    EXPECT_THROW((OptBudget{10, 0.0, 1e-9, 3}.validate()), std::invalid_argument);
    EXPECT_THROW((OptBudget{10, 1e-6, -1.0, 3}.validate()), std::invalid_argument);
    EXPECT_THROW((OptBudget{10, 1e-6, 1e-9, 0}.validate()), std::invalid_argument);
}

TEST(Minimize, Parabola) {
    Rng rng(1);
    std::vector<double> t0{0.0};
    auto r = minimize([](std::span<const double> t) { return (t[0] - 2) * (t[0] - 2); }, t0, OptBudget{}, rng);
    EXPECT_NEAR(r.theta_star[0], 2.0, 1e-4);
    EXPECT_TRUE(std::isfinite(r.cost));
}

TEST(Minimize, RyToOne) {
    Rng rng(2);
    std::vector<double> t0{0.1};
    Circuit c(1);
    c.add(GateKind::RY, 0);
    auto f = [&](std::span<const double> t) {
        return 1.0 - pure_fidelity(run_circuit(PureState(1), c, t), PureState::basis(1, 1));
    };
    auto r = minimize(f, t0, OptBudget{}, rng);
    EXPECT_NEAR(std::remainder(r.theta_star[0] - std::numbers::pi, 2 * std::numbers::pi), 0.0, 1e-3);
}

TEST(Minimize, Rosenbrock) {
    auto rosen = [](std::span<const double> t) {
        return (t[0] - 1) * (t[0] - 1) + 100 * (t[1] - t[0] * t[0]) * (t[1] - t[0] * t[0]);
    };
    // Brute-force oracle: the grid minimum sits at (1, 1) with value 0.
    double best = std::numeric_limits<double>::infinity();
    double bx = 0, by = 0;
    for (int i = -200; i <= 200; i++) {
        for (int j = -200; j <= 300; j++) {
            double p[2] = {i * 0.01, j * 0.01};
            double v = rosen(p);
            if (v < best) {
                best = v;
                bx = p[0];
                by = p[1];
            }
        }
    }
    ASSERT_NEAR(bx, 1.0, 1e-9);
    ASSERT_NEAR(by, 1.0, 1e-9);
    Rng rng(3);
    std::vector<double> t0{-1.0, 1.0};
    auto r = minimize(rosen, t0, OptBudget{2000, 1e-10, 1e-14, 3}, rng);
    EXPECT_LE(r.cost, 1e-3);
    EXPECT_LE(r.evals_used, 2000u);
}

TEST(Minimize, NeverWorseThanStartAndDeterministic) {
    auto f = [](std::span<const double> t) {
        double s = 0;
        for (std::size_t i = 0; i < t.size(); i++) {
            s += std::sin(3 * t[i]) + 0.1 * t[i] * t[i] + std::cos(t[i] * t[(i + 1) % t.size()]);
        }
        return s;
    };
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng init(seed);
        std::vector<double> t0(4);
        for (auto &x : t0) {
            x = init.uniform(-3, 3);
        }
        Rng a(seed), b(seed);
        OptBudget budget{200, 1e-6, 1e-9, 3};
        auto r1 = minimize(f, t0, budget, a);
        auto r2 = minimize(f, t0, budget, b);
        EXPECT_LE(r1.cost, f(t0));
        EXPECT_EQ(r1.theta_star, r2.theta_star);
        EXPECT_EQ(r1.cost, r2.cost);
        EXPECT_EQ(r1.evals_used, r2.evals_used);
        EXPECT_LE(r1.evals_used, budget.max_evals);
        EXPECT_DOUBLE_EQ(f(r1.theta_star), r1.cost);
    }
}

TEST(Minimize, NonFiniteCostsAreAvoided) {
    Rng rng(4);
    std::vector<double> t0{0.5};
    auto f = [](std::span<const double> t) {
        return t[0] < 0 ? std::numeric_limits<double>::quiet_NaN() : (t[0] - 1) * (t[0] - 1);
    };
    auto r = minimize(f, t0, OptBudget{}, rng);
    EXPECT_TRUE(std::isfinite(r.cost));
    EXPECT_NEAR(r.theta_star[0], 1.0, 1e-4);
}

TEST(Minimize, EmptyParameterVector) {
    Rng rng(5);
    int calls = 0;
    auto r = minimize([&](std::span<const double>) { return ++calls, 0.25; }, {}, OptBudget{}, rng);
    EXPECT_EQ(r.cost, 0.25);
    EXPECT_EQ(r.evals_used, 1u);
    EXPECT_TRUE(r.converged);
}

TaskSpec clean_denoise() {
    DenoiseTaskOptions o;
    o.data.train_p = 0.0;
    o.data.n_train = 10;
    o.data.n_validation = 10;
    o.data.n_test_per_p = 10;
    o.data.test_grid = {0.0};
    return make_denoise_task(NoiseKind::Bitflip, 0, o);
}

TEST(ScoreCell, ZeroParameterCellIsEvaluatedDirectly) {
    TaskSpec task = clean_denoise();
    // CNOT(0,1) CNOT(0,2) maps GHZ to |+>|00>: a perfect encoder without parameters.
    Cell c(3);
    c.push_edge(0, 1, GateKind::CNOT);
    c.push_edge(0, 2, GateKind::CNOT);
    Rng rng(1);
    auto s = score_cell(c, task, std::nullopt, rng);
    EXPECT_EQ(s.evals, 1u);
    EXPECT_TRUE(s.theta.empty());
    EXPECT_NEAR(s.score, 1.0, 1e-9);
    EXPECT_NEAR(s.train_cost, 0.0, 1e-12);
}

TEST(ScoreCell, Deterministic) {
    TaskSpec task = make_denoise_task(NoiseKind::Bitflip, 3);
    Cell c(3);
    c.push_node(0, GateKind::RY);
    c.push_node(1, GateKind::RX);
    c.push_edge(0, 1, GateKind::CRX);
    c.push_edge(1, 2, GateKind::CNOT);
    OptBudget b{300, 1e-6, 1e-9, 2};
    Rng a = cell_rng(9, c), bb = cell_rng(9, c);
    auto s1 = score_cell(c, task, b, a);
    auto s2 = score_cell(c, task, b, bb);
    EXPECT_EQ(s1.score, s2.score);
    EXPECT_EQ(s1.theta, s2.theta);
    EXPECT_EQ(s1.train_cost, s2.train_cost);
    EXPECT_GE(s1.score, 0.0);
    EXPECT_LE(s1.score, 1.0);
}

TEST(ScoreCell, WidthMismatch) {
    TaskSpec task = clean_denoise();
    Rng rng(1);
    EXPECT_THROW(score_cell(Cell(2), task, std::nullopt, rng), std::invalid_argument);
}

TEST(EvaluatePopulation, IndependentOfOrderAndJobs) {
    TaskSpec task = make_denoise_task(NoiseKind::Bitflip, 4);
    std::vector<GateKind> space = generic_space();
    GateVocab v(space);
    Rng rng(2);
    std::vector<Cell> cells;
    for (int i = 0; i < 6; i++) {
        cells.push_back(random_cell(v, 3, rng));
    }
    OptBudget b{120, 1e-6, 1e-9, 2};
    auto serial = evaluate_population(cells, task, b, 17, 1);
    auto parallel = evaluate_population(cells, task, b, 17, 3);
    std::vector<Cell> rev(cells.rbegin(), cells.rend());
    auto reversed = evaluate_population(rev, task, b, 17, 1);
    for (std::size_t i = 0; i < cells.size(); i++) {
        EXPECT_EQ(serial[i].score, parallel[i].score);
        EXPECT_EQ(serial[i].theta, parallel[i].theta);
        EXPECT_EQ(serial[i].score, reversed[cells.size() - 1 - i].score);
    }
}

}  // namespace
}  // namespace qarch
