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

#include "qarch/harness/export.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <stdexcept>

namespace qarch {

namespace {

std::string join(std::initializer_list<std::string> cells) {
    std::string out;
    for (const auto &c : cells) {
        if (!out.empty()) {
            out += ',';
        }
        out += c;
    }
    return out;
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string CsvTable::str() const {
    std::string out = header + "\n";
    for (const auto &r : rows) {
        out += r + "\n";
    }
    return out;
}

std::vector<CsvTable> export_tables(const std::vector<RunRecord> &records) {
    for (const auto &r : records) {
        if (r.format != records.front().format) {
            throw std::invalid_argument("cannot export records with mixed format versions");
        }
    }
    CsvTable summary{"summary.csv",
                     "task,algorithm,seed,status,n_params,n_layers,n_two_qubit,n_gates,train_cost,validation_score,"
                     "test_score,init_best_score,total_evals",
                     {}};
    CsvTable denoise{"denoising.csv", "p,mean_fidelity,std_fidelity,algorithm,seed", {}};
    CsvTable rewards{"relm_rewards.csv", "epoch,smoothed_reward,best_score", {}};
    CsvTable res{"res_trace.csv", "task,algorithm,seed,phase,best_score,n_params,n_layers,n_two_qubit,evals,scored", {}};
    CsvTable rs{"rs_trace.csv", "task,algorithm,seed,cell,best_so_far", {}};
    auto f = format_number;
    for (const auto &rec : records) {
        const std::string task = csv_field(rec.task);
        const std::string algo = csv_field(rec.algorithm);
        for (const auto &run : rec.runs) {
            const std::string seed = std::to_string(run.seed);
            const auto &m = run.metrics;
            summary.rows.push_back(join({task, algo, seed, run.status, std::to_string(m.n_params),
                                         std::to_string(m.n_layers), std::to_string(m.n_two_qubit),
                                         std::to_string(m.n_gates), f(run.train_cost), f(run.validation_score),
                                         f(run.test_score), f(run.init_best_score), std::to_string(run.total_evals)}));
            if (run.status != "ok") {
                continue;
            }
            for (const auto &p : run.denoising) {
                denoise.rows.push_back(join({f(p.p), f(p.mean_fidelity), f(p.std_fidelity), algo, seed}));
            }
            if (run.baseline) {
                const auto &b = *run.baseline;
                summary.rows.push_back(join({task, "baseline", seed, "ok", std::to_string(b.n_params), "", "", "",
                                             f(b.train_cost), f(b.validation_score), f(b.test_score), "", ""}));
                for (const auto &p : b.denoising) {
                    denoise.rows.push_back(join({f(p.p), f(p.mean_fidelity), f(p.std_fidelity), "baseline", seed}));
                }
            }
            for (const auto &e : run.relm_trace) {
                rewards.rows.push_back(join({std::to_string(e.epoch), f(e.smoothed_reward), f(e.best_score)}));
            }
            for (const auto &t : run.res_trace) {
                res.rows.push_back(join({task, algo, seed, std::to_string(t.phase), f(t.best_score),
                                         std::to_string(t.best_metrics.n_params),
                                         std::to_string(t.best_metrics.n_layers),
                                         std::to_string(t.best_metrics.n_two_qubit), std::to_string(t.evals),
                                         std::to_string(t.scored)}));
            }
            for (std::size_t i = 0; i < run.rs_best_so_far.size(); i++) {
                rs.rows.push_back(join({task, algo, seed, std::to_string(i), f(run.rs_best_so_far[i])}));
            }
        }
    }
    return {summary, denoise, rewards, res, rs};
}

std::vector<RunRecord> load_records(const std::string &path) {
    namespace fs = std::filesystem;
    std::vector<RunRecord> out;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto &e : fs::directory_iterator(path)) {
            if (e.is_regular_file() && e.path().extension() == ".json") {
                files.push_back(e.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto &p : files) {
            out.push_back(read_record(p.string()));
        }
    } else {
        out.push_back(read_record(path));
    }
    return out;
}

std::vector<std::string> export_csv(const std::vector<RunRecord> &records, const std::string &out_dir) {
    std::vector<std::string> written;
    for (const auto &t : export_tables(records)) {
        std::string p = (std::filesystem::path(out_dir) / t.file).string();
        write_file_atomic(p, t.str());
        written.push_back(p);
    }
    return written;
}

}  // namespace qarch
