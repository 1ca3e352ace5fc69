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

// qarch command-line driver: gen-data, search, eval, export.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "qarch/harness/config.h"
#include "qarch/harness/export.h"
#include "qarch/harness/record.h"
#include "qarch/harness/runner.h"
#include "qarch/ir/cell.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitRuntime = 2;

using nlohmann::json;

json state_json(const qarch::PureState &s) {
    json a = json::array();
    for (std::size_t i = 0; i < s.dim(); i++) {
        a.push_back({s[i].real(), s[i].imag()});
    }
    return a;
}

json samples_json(const std::vector<qarch::Sample> &samples) {
    json a = json::array();
    for (const auto &s : samples) {
        a.push_back({{"input", state_json(s.input)}, {"label", state_json(s.label)}});
    }
    return a;
}

json dataset_json(const qarch::TaskSpec &task) {
    json slices = json::array();
    for (const auto &s : task.noise_test) {
        slices.push_back({{"p", s.p}, {"samples", samples_json(s.samples)}});
    }
    json split = nullptr;
    if (task.split) {
        split = {{"latent", task.split->latent}, {"trash", task.split->trash}};
    }
    return {{"format", 1},
            {"task", task.name},
            {"n_qubits", task.n_qubits},
            {"cost_mode", std::string(qarch::cost_mode_name(task.cost_mode))},
            {"split", split},
            {"train", samples_json(task.train)},
            {"validation", samples_json(task.validation)},
            {"test", samples_json(task.test)},
            {"noise_test", slices}};
}

qarch::RunConfig load_config(const std::string &path) {
    return qarch::parse_config_file(path, qarch::environment_overrides());
}

int cmd_gen_data(const std::string &config_path, const std::string &out) {
    qarch::RunConfig cfg = load_config(config_path);
    qarch::TaskSpec task = qarch::build_task(cfg.task);
    std::string dir = out.empty() ? cfg.output_dir : out;
    std::string path = (std::filesystem::path(dir) / "dataset.json").string();
    qarch::write_file_atomic(path, dataset_json(task).dump() + "\n");
    std::cout << path << "\n";
    return kExitOk;
}

int cmd_search(const std::string &config_path, const std::vector<uint64_t> &seeds, const std::string &out,
               std::size_t jobs, const std::string &algo) {
    qarch::RunConfig cfg = load_config(config_path);
    if (!seeds.empty()) {
        cfg.seeds = seeds;
    }
    if (!out.empty()) {
        cfg.output_dir = out;
    }
    if (jobs > 0) {
        cfg.jobs = jobs;
    }
    if (!algo.empty()) {
        cfg.algorithm = algo;
    }
    qarch::validate_config(cfg);
    qarch::RunRecord rec = qarch::run(cfg, {&std::cerr});
    std::string path = qarch::record_path(cfg, rec);
    qarch::write_record(path, rec);
    std::cout << path << "\n";
    std::size_t failed = 0;
    for (const auto &r : rec.runs) {
        failed += r.status != "ok";
    }
    return failed == rec.runs.size() ? kExitRuntime : kExitOk;
}

int cmd_eval(const std::string &record_path, double tol) {
    qarch::RunRecord rec = qarch::read_record(record_path);
    qarch::RunConfig cfg = qarch::config_from_json(rec.config);
    qarch::TaskSpec task = qarch::build_task(cfg.task);
    std::size_t mismatches = 0;
    for (const auto &r : rec.runs) {
        if (r.status != "ok" || !r.best_cell) {
            std::cout << "seed=" << r.seed << " skipped (" << r.status << ")\n";
            continue;
        }
        qarch::Circuit circuit = qarch::cell_to_circuit(*r.best_cell);
        double val = qarch::validation_score(task, circuit, r.theta);
        double test = qarch::test_score(task, circuit, r.theta);
        bool ok = std::abs(val - r.validation_score) <= tol && std::abs(test - r.test_score) <= tol &&
                  qarch::metrics(*r.best_cell) == r.metrics;
        mismatches += !ok;
        std::cout << "seed=" << r.seed << " validation=" << qarch::format_number(val)
                  << " test=" << qarch::format_number(test) << (ok ? " match" : " MISMATCH") << "\n";
    }
    return mismatches == 0 ? kExitOk : kExitRuntime;
}

int cmd_export(const std::vector<std::string> &inputs, const std::string &out) {
    std::vector<qarch::RunRecord> records;
    for (const auto &in : inputs) {
        if (!std::filesystem::exists(in)) {
            throw std::invalid_argument("no such record or directory '" + in + "'");
        }
        auto more = qarch::load_records(in);
        records.insert(records.end(), more.begin(), more.end());
    }
    for (const auto &p : qarch::export_csv(records, out)) {
        std::cout << p << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qarch: quantum circuit architecture search toolkit"};
    app.set_version_flag("--version", std::string(qarch::toolkit_version()));
    app.require_subcommand(1);

    std::string config_path, out, algo, record;
    std::vector<uint64_t> seeds;
    std::vector<std::string> inputs;
    std::size_t jobs = 0;
    double tol = 1e-9;

    auto *gen = app.add_subcommand("gen-data", "Generate the task dataset and write dataset.json");
    gen->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    gen->add_option("--out", out, "Output directory (default: output_dir from the config)");

    auto *search = app.add_subcommand("search", "Run a search and write the run record");
    search->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    search->add_option("--seed", seeds, "Seed (repeatable; replaces the config's seeds)");
    search->add_option("--out", out, "Output directory");
    search->add_option("--jobs", jobs, "Parallelism degree")->check(CLI::PositiveNumber);
    search->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember({"rs", "res", "relm"}));

    auto *eval = app.add_subcommand("eval", "Recompute the scores stored in a run record");
    eval->add_option("record", record, "Run record")->required()->check(CLI::ExistingFile);
    eval->add_option("--tol", tol, "Absolute tolerance");

    auto *exp = app.add_subcommand("export", "Export run records as CSV");
    exp->add_option("inputs", inputs, "Record files or directories")->required();
    exp->add_option("--out", out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*gen) {
            return cmd_gen_data(config_path, out);
        }
        if (*search) {
            return cmd_search(config_path, seeds, out, jobs, algo);
        }
        if (*eval) {
            return cmd_eval(record, tol);
        }
        return cmd_export(inputs, out);
    } catch (const qarch::ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
}
