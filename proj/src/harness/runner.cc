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

#include "qarch/harness/runner.h"

#include <chrono>
#include <filesystem>
#include <ostream>

#include "qarch/common/parallel.h"
#include "qarch/opt/score.h"
#include "qarch/search/random_search.h"
#include "qarch/tasks/baselines.h"

namespace qarch {

namespace {

void finish_run(SeedRun &out, const TaskSpec &task, const ScoredCell &best) {
    out.best_cell = best.cell;
    out.theta = best.theta;
    out.metrics = best.metrics;
    out.train_cost = best.train_cost;
    out.validation_score = best.score;
    Circuit circuit = cell_to_circuit(best.cell);
    out.test_score = test_score(task, circuit, best.theta);
    if (task.kind == TaskKind::Denoise) {
        out.denoising = evaluate_denoising(task, circuit, best.theta);
    }
}

BaselineRun run_baseline(const TaskSpec &task, const std::optional<OptBudget> &budget, uint64_t seed) {
    Circuit circuit = baseline_circuit(task);
    Rng rng = Rng::derive(seed, "baseline");
    TrainedCircuit t = train_circuit(circuit, task, budget, rng);
    BaselineRun b;
    b.n_params = circuit.n_params();
    b.theta = t.theta;
    b.train_cost = t.train_cost;
    b.validation_score = t.score;
    b.test_score = test_score(task, circuit, t.theta);
    if (task.kind == TaskKind::Denoise) {
        b.denoising = evaluate_denoising(task, circuit, t.theta);
    }
    return b;
}

}  // namespace

SeedRun run_seed(const RunConfig &config, const TaskSpec &task, uint64_t seed, std::size_t jobs) {
    SeedRun out;
    out.seed = seed;
    auto t0 = std::chrono::steady_clock::now();
    try {
        GateVocab space = build_space(config, task);
        std::optional<OptBudget> budget = optimizer_budget(config);
        if (config.algorithm == "rs") {
            RandomSearchConfig c = config.rs;
            c.seed = seed;
            c.opt_budget = budget;
            c.jobs = jobs;
            RandomSearchResult r = random_search(task, space, c);
            out.rs_best_so_far = r.best_so_far;
            out.total_evals = r.total_evals;
            out.init_best_score = r.best_so_far.empty() ? 0.0 : r.best_so_far.front();
            finish_run(out, task, r.best);
        } else if (config.algorithm == "res") {
            ResConfig c = config.res;
            c.seed = seed;
            c.opt_budget = budget;
            c.jobs = jobs;
            ResResult r = res_search(task, space, c);
            out.res_trace = r.trace;
            out.total_evals = r.total_evals;
            out.init_best_score = r.trace.empty() ? 0.0 : r.trace.front().best_score;
            finish_run(out, task, r.best);
        } else if (config.algorithm == "relm") {
            RelmConfig c = config.relm;
            c.seed = seed;
            c.opt_budget = budget;
            c.jobs = jobs;
            c.reward.mode = task.kind == TaskKind::UnitaryRegen ? RewardMode::Unitary : RewardMode::Qae;
            c.res = config.res;
            c.res.opt_budget = budget;
            c.res.jobs = jobs;
            RelmResult r = run_relm(task, space, c);
            out.relm_trace = r.trace;
            if (r.res) {
                out.res_trace = r.res->trace;
            }
            out.total_evals = r.total_evals;
            out.init_best_score = r.init_best_score;
            finish_run(out, task, r.best);
        } else {
            throw std::invalid_argument("unknown algorithm '" + config.algorithm + "'");
        }
        if (config.baseline && task.kind != TaskKind::UnitaryRegen) {
            out.baseline = run_baseline(task, budget, seed);
        }
    } catch (const std::exception &ex) {
        out.status = "error";
        out.error = ex.what();
    }
    out.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

RunRecord run(const RunConfig &config, const RunOptions &options) {
    validate_config(config);
    TaskSpec task = build_task(config.task);
    RunRecord rec;
    rec.toolkit_version = toolkit_version();
    rec.config = config_to_json(config);
    rec.task = task.name;
    rec.algorithm = config.algorithm;
    rec.runs.resize(config.seeds.size());
    // Parallelize across seeds when there are several; otherwise inside the search.
    std::size_t outer = config.seeds.size() > 1 ? config.jobs : 1;
    std::size_t inner = config.seeds.size() > 1 ? 1 : config.jobs;
    parallel_for(config.seeds.size(), outer, [&](std::size_t i) {
        rec.runs[i] = run_seed(config, task, config.seeds[i], inner);
    });
    if (options.log) {
        for (const auto &r : rec.runs) {
            *options.log << rec.task << " " << rec.algorithm << " seed=" << r.seed << " status=" << r.status;
            if (r.status == "ok") {
                *options.log << " validation=" << r.validation_score << " test=" << r.test_score
                             << " n_params=" << r.metrics.n_params << " n_layers=" << r.metrics.n_layers;
            } else {
                *options.log << " error=" << r.error;
            }
            *options.log << "\n";
        }
    }
    return rec;
}

std::string record_path(const RunConfig &config, const RunRecord &record) {
    return (std::filesystem::path(config.output_dir) / (record.task + "-" + record.algorithm + ".json")).string();
}

}  // namespace qarch
