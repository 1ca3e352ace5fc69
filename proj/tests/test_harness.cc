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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "qarch/harness/config.h"
#include "qarch/harness/export.h"
#include "qarch/harness/record.h"
#include "qarch/harness/runner.h"

namespace qarch {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string &name) {
    fs::path p = fs::temp_directory_path() / ("qarch_test_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(p);
    return p;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Small but complete run configuration.
const char *kSmall = R"(
task:
  kind: denoise
  n_train: 20
  n_validation: 20
  n_test_per_p: 10
  test_grid: [0.0, 0.5, 1.0]
algorithm: res
seed: [1, 2]
optimizer: {max_evals: 150, restarts: 1}
res: {population_size: 4, max_phases: 2}
relm: {population_size: 4, tournament_size: 2, epochs: 2, batch_size: 2, embed: 8, ff_hidden: 16, heads: 2, blocks: 1}
)";

std::string without_wall_time(RunRecord r) {
    for (auto &s : r.runs) {
        s.wall_time_s = 0.0;
    }
    return serialize_record(r);
}

TEST(Config, MinimalDocumentGetsDefaults) {
    RunConfig c = parse_config_text("{task: denoise-bitflip, algorithm: res, seed: [1]}");
    EXPECT_EQ(c.task.kind, "denoise");
    EXPECT_EQ(c.task.noise, "bitflip");
    EXPECT_EQ(c.algorithm, "res");
    EXPECT_EQ(c.seeds, (std::vector<uint64_t>{1}));
    EXPECT_EQ(c.res.population_size, 30u);
    EXPECT_EQ(c.relm.population_size, 30u);
    EXPECT_EQ(c.relm.epochs, 30u);
    EXPECT_EQ(c.relm.tournament_size, 5u);
    EXPECT_EQ(c.relm.batch_size, 32u);
    EXPECT_EQ(c.relm.controller.embed, 32u);
    EXPECT_EQ(c.relm.controller.ff_hidden, 64u);
    EXPECT_EQ(c.relm.learning_rate, 3e-4);
    EXPECT_EQ(c.task.n_train, 100u);
    EXPECT_EQ(c.task.test_grid.size(), 11u);
    EXPECT_EQ(c.res.constraint, SoftConstraint(Quantity::NLayers, 3));
    EXPECT_FALSE(optimizer_budget(c).has_value());
}

TEST(Config, UnknownKeysAreNamed) {
    try {
        parse_config_text("{task: denoise-bitflip, algoritm: res, seed: [1]}");
        FAIL() << "accepted unknown key";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("'algoritm'"), std::string::npos) << e.what();
    }
    try {
        parse_config_text("{seed: [1], res: {popsize: 3}}");
        FAIL() << "accepted unknown nested key";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("res.popsize"), std::string::npos) << e.what();
    }
}

TEST(Config, TypeAndConsistencyErrors) {
    EXPECT_THROW(parse_config_text("{seed: [1], jobs: many}"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: [1], res: {population_size: -2}}"), ConfigError);
    EXPECT_THROW(parse_config_text("task: [unclosed"), ConfigError);
    EXPECT_THROW(parse_config_text("seed: [1]\nres: {population_size: 4}\nres: {max_phases: 2}\n"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: []}"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: [1], algorithm: bfs}"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: [1], task: {train_p: 1.5}}"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: [1], space: [RX, FOO]}"), ConfigError);
    EXPECT_THROW(parse_config_text("{seed: [1], res: {constraint: {quantity: n_params, bound: 3, x: 1}}}"), ConfigError);
    try {
        parse_config_text("{seed: [1], relm: {tournament_size: 40}}");
        FAIL() << "accepted K > P";
    } catch (const ConfigError &e) {
        EXPECT_NE(std::string(e.what()).find("tournament_size 40 exceeds population_size 30"), std::string::npos)
            << e.what();
    }
}

TEST(Config, SeedOnlyDifferenceLeavesOtherFieldsEqual) {
    auto a = config_to_json(parse_config_text("{task: image-tetris, seed: [1]}"));
    auto b = config_to_json(parse_config_text("{task: image-tetris, seed: 7}"));
    EXPECT_NE(a, b);
    a.erase("seed");
    b.erase("seed");
    EXPECT_EQ(a, b);
    EXPECT_EQ(parse_config_text("{seeds: [4, 5]}").seeds, (std::vector<uint64_t>{4, 5}));
}

TEST(Config, EnvironmentOverrides) {
    std::map<std::string, std::string> env{
        {"QARCH_RES__POPULATION_SIZE", "7"}, {"QARCH_ALGORITHM", "relm"}, {"QARCH_TASK__TRAIN_P", "0.3"}};
    RunConfig c = parse_config_text("{seed: [1], res: {population_size: 12}}", env);
    EXPECT_EQ(c.res.population_size, 7u);
    EXPECT_EQ(c.algorithm, "relm");
    EXPECT_EQ(c.task.train_p, 0.3);
    EXPECT_THROW(parse_config_text("{seed: [1]}", {{"QARCH_RES__BOGUS", "1"}}), ConfigError);
}

TEST(Config, ResolvedJsonRoundTrips) {
    RunConfig c = parse_config_text(kSmall);
    auto doc = config_to_json(c);
    EXPECT_EQ(config_to_json(config_from_json(doc)), doc);
    EXPECT_EQ(optimizer_budget(c)->max_evals, 150u);
}

TEST(Config, TaskBuilders) {
    RunConfig u = parse_config_text("{seed: [1], task: {kind: unitary, n_qubits: 3, layers: 2, subtask: single}}");
    TaskSpec t = build_task(u.task);
    EXPECT_EQ(t.kind, TaskKind::UnitaryRegen);
    EXPECT_EQ(t.n_qubits, 3u);
    EXPECT_EQ(default_constraint(t), SoftConstraint(Quantity::NLayers, 2));
    EXPECT_EQ(u.res.constraint, SoftConstraint(Quantity::NLayers, 2));
    RunConfig s = parse_config_text("{seed: [1], task: state, space: [RY, CNOT]}");
    TaskSpec st = build_task(s.task);
    GateVocab v = build_space(s, st);
    EXPECT_EQ(v.kinds(), (std::vector<GateKind>{GateKind::RY, GateKind::CNOT}));
}

TEST(Record, RoundTripIsLossless) {
    RunConfig c = parse_config_text(kSmall);
    RunRecord r = run(c);
    ASSERT_EQ(r.runs.size(), 2u);
    r.runs[0].init_best_score = std::numeric_limits<double>::quiet_NaN();
    r.runs[1].train_cost = -std::numeric_limits<double>::infinity();
    std::string s = serialize_record(r);
    RunRecord back = parse_record(s);
    EXPECT_EQ(serialize_record(back), s);
    EXPECT_TRUE(std::isnan(back.runs[0].init_best_score));
    EXPECT_EQ(back.runs[1].train_cost, -std::numeric_limits<double>::infinity());
    EXPECT_EQ(back.runs[0].theta, r.runs[0].theta);
    EXPECT_EQ(back.runs[0].best_cell, r.runs[0].best_cell);
    EXPECT_EQ(back.toolkit_version, std::string(toolkit_version()));
    EXPECT_THROW(parse_record("{\"format\": 99}"), std::invalid_argument);
    EXPECT_THROW(parse_record("not json"), std::invalid_argument);
}

TEST(Record, AtomicWriteLeavesNoTemporary) {
    fs::path dir = scratch("atomic");
    fs::path file = dir / "nested" / "rec.json";
    RunRecord r;
    r.task = "t";
    r.algorithm = "rs";
    write_record(file.string(), r);
    write_record(file.string(), r);
    EXPECT_TRUE(fs::exists(file));
    std::size_t n = 0;
    for (const auto &e : fs::directory_iterator(file.parent_path())) {
        (void)e;
        n++;
    }
    EXPECT_EQ(n, 1u);
    EXPECT_EQ(slurp(file), serialize_record(r));
    EXPECT_EQ(serialize_record(read_record(file.string())), serialize_record(r));
    fs::remove_all(dir);
}

TEST(Run, RepeatableModuloWallTime) {
    RunConfig c = parse_config_text(kSmall);
    RunRecord a = run(c);
    c.jobs = 2;
    RunRecord b = run(c);
    for (const auto &s : a.runs) {
        EXPECT_EQ(s.status, "ok") << s.error;
        EXPECT_FALSE(s.res_trace.empty());
        EXPECT_EQ(s.denoising.size(), 3u);
    }
    a.config["jobs"] = 2;
    EXPECT_EQ(without_wall_time(a), without_wall_time(b));
}

TEST(Run, ParameterBudgetIsRespected) {
    RunConfig c = parse_config_text(std::string(kSmall) + "\nbaseline: true\n");
    c.res.constraint = SoftConstraint(Quantity::NParams, 21);
    c.res.max_phases = 3;
    RunRecord r = run(c);
    for (const auto &s : r.runs) {
        ASSERT_EQ(s.status, "ok") << s.error;
        EXPECT_LE(s.metrics.n_params, 21u);
        ASSERT_TRUE(s.baseline.has_value());
        EXPECT_EQ(s.baseline->n_params, 48u);
        EXPECT_EQ(s.baseline->denoising.size(), 3u);
    }
}

TEST(Run, RelmWithResInitKeepsBothTraces) {
    RunConfig c = parse_config_text(kSmall, {{"QARCH_ALGORITHM", "relm"}, {"QARCH_SEED", "[3]"}});
    RunRecord r = run(c);
    ASSERT_EQ(r.runs.size(), 1u);
    const auto &s = r.runs[0];
    ASSERT_EQ(s.status, "ok") << s.error;
    EXPECT_FALSE(s.res_trace.empty());
    EXPECT_EQ(s.relm_trace.size(), 2u);
    EXPECT_GE(s.validation_score, s.init_best_score);
}

TEST(Run, SeedFailuresAreCaptured) {
    RunConfig c = parse_config_text(kSmall);
    TaskSpec task = build_task(c.task);
    c.res.population_size = 0;
    SeedRun s = run_seed(c, task, 1);
    EXPECT_EQ(s.status, "error");
    EXPECT_NE(s.error.find("population"), std::string::npos) << s.error;
    EXPECT_FALSE(s.best_cell.has_value());
}

TEST(Export, HeadersAndRows) {
    RunConfig c = parse_config_text(kSmall, {{"QARCH_ALGORITHM", "relm"}, {"QARCH_SEED", "3"}});
    RunRecord r = run(c);
    auto tables = export_tables({r});
    std::map<std::string, CsvTable> by;
    for (auto &t : tables) {
        by[t.file] = t;
    }
    EXPECT_EQ(by.at("denoising.csv").header, "p,mean_fidelity,std_fidelity,algorithm,seed");
    EXPECT_EQ(by.at("relm_rewards.csv").header, "epoch,smoothed_reward,best_score");
    EXPECT_EQ(by.at("denoising.csv").rows.size(), 3u);
    EXPECT_EQ(by.at("relm_rewards.csv").rows.size(), 2u);
    EXPECT_EQ(by.at("summary.csv").rows.size(), 1u);
    EXPECT_EQ(by.at("denoising.csv").rows[0].substr(0, 2), "0,");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(by.at("summary.csv").str().find("wall"), std::string::npos);
}

TEST(Export, EmptyDirectoryGivesHeadersOnly) {
    fs::path in = scratch("empty_in");
    fs::path out = scratch("empty_out");
    fs::create_directories(in);
    auto records = load_records(in.string());
    EXPECT_TRUE(records.empty());
    auto files = export_csv(records, out.string());
    EXPECT_FALSE(files.empty());
    for (const auto &f : files) {
        std::string text = slurp(f);
        EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1) << f;
    }
    EXPECT_EQ(slurp(out / "relm_rewards.csv"), "epoch,smoothed_reward,best_score\n");
    fs::remove_all(in);
    fs::remove_all(out);
}

TEST(Export, MixedFormatsRejected) {
    RunRecord a, b;
    b.format = kRecordFormat + 1;
    EXPECT_THROW(export_tables({a, b}), std::invalid_argument);
}

}  // namespace
}  // namespace qarch
