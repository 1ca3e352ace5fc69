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

#include "qarch/harness/record.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qarch/ir/cell_io.h"

namespace qarch {

using nlohmann::json;

namespace {

// JSON has no non-finite numbers; they are stored as strings.
json num(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    if (std::isnan(x)) {
        return "nan";
    }
    return x > 0 ? "inf" : "-inf";
}

double to_num(const json &v) {
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        const auto s = v.get<std::string>();
        if (s == "nan") {
            return std::numeric_limits<double>::quiet_NaN();
        }
        if (s == "inf") {
            return std::numeric_limits<double>::infinity();
        }
        if (s == "-inf") {
            return -std::numeric_limits<double>::infinity();
        }
    }
    throw std::invalid_argument("record: expected a number, got " + v.dump());
}

json nums(const std::vector<double> &xs) {
    json a = json::array();
    for (double x : xs) {
        a.push_back(num(x));
    }
    return a;
}

std::vector<double> to_nums(const json &v) {
    std::vector<double> out;
    for (const auto &x : v) {
        out.push_back(to_num(x));
    }
    return out;
}

json metrics_json(const CellMetrics &m) {
    return {{"n_params", m.n_params}, {"n_layers", m.n_layers}, {"n_two_qubit", m.n_two_qubit}, {"n_gates", m.n_gates}};
}

CellMetrics metrics_from(const json &v) {
    CellMetrics m;
    m.n_params = v.at("n_params").get<std::size_t>();
    m.n_layers = v.at("n_layers").get<std::size_t>();
    m.n_two_qubit = v.at("n_two_qubit").get<std::size_t>();
    m.n_gates = v.at("n_gates").get<std::size_t>();
    return m;
}

json denoise_json(const std::vector<DenoisePoint> &pts) {
    json a = json::array();
    for (const auto &p : pts) {
        a.push_back({{"p", num(p.p)}, {"mean_fidelity", num(p.mean_fidelity)}, {"std_fidelity", num(p.std_fidelity)}});
    }
    return a;
}

std::vector<DenoisePoint> denoise_from(const json &v) {
    std::vector<DenoisePoint> out;
    for (const auto &x : v) {
        out.push_back({to_num(x.at("p")), to_num(x.at("mean_fidelity")), to_num(x.at("std_fidelity"))});
    }
    return out;
}

json seed_json(const SeedRun &r) {
    json res = json::array();
    for (const auto &t : r.res_trace) {
        res.push_back({{"phase", t.phase},
                       {"best_score", num(t.best_score)},
                       {"best_metrics", metrics_json(t.best_metrics)},
                       {"evals", t.evals},
                       {"scored", t.scored}});
    }
    json relm = json::array();
    for (const auto &t : r.relm_trace) {
        relm.push_back({{"epoch", t.epoch},
                        {"parent_score", num(t.parent_score)},
                        {"mean_reward", num(t.mean_reward)},
                        {"smoothed_reward", num(t.smoothed_reward)},
                        {"best_child_score", num(t.best_child_score)},
                        {"best_score", num(t.best_score)},
                        {"violating_children", t.violating_children},
                        {"admitted", t.admitted},
                        {"evals", t.evals}});
    }
    json out = {{"seed", r.seed},
                {"status", r.status},
                {"error", r.error},
                {"best_cell", r.best_cell ? cell_to_json(*r.best_cell) : json(nullptr)},
                {"theta", nums(r.theta)},
                {"metrics", metrics_json(r.metrics)},
                {"train_cost", num(r.train_cost)},
                {"validation_score", num(r.validation_score)},
                {"test_score", num(r.test_score)},
                {"denoising", denoise_json(r.denoising)},
                {"res_trace", res},
                {"relm_trace", relm},
                {"rs_best_so_far", nums(r.rs_best_so_far)},
                {"init_best_score", num(r.init_best_score)},
                {"total_evals", r.total_evals},
                {"wall_time_s", num(r.wall_time_s)}};
    if (r.baseline) {
        const auto &b = *r.baseline;
        out["baseline"] = {{"n_params", b.n_params},
                           {"theta", nums(b.theta)},
                           {"train_cost", num(b.train_cost)},
                           {"validation_score", num(b.validation_score)},
                           {"test_score", num(b.test_score)},
                           {"denoising", denoise_json(b.denoising)}};
    } else {
        out["baseline"] = nullptr;
    }
    return out;
}

SeedRun seed_from(const json &v) {
    SeedRun r;
    r.seed = v.at("seed").get<uint64_t>();
    r.status = v.at("status").get<std::string>();
    r.error = v.at("error").get<std::string>();
    if (!v.at("best_cell").is_null()) {
        r.best_cell = cell_from_json(v.at("best_cell"));
    }
    r.theta = to_nums(v.at("theta"));
    r.metrics = metrics_from(v.at("metrics"));
    r.train_cost = to_num(v.at("train_cost"));
    r.validation_score = to_num(v.at("validation_score"));
    r.test_score = to_num(v.at("test_score"));
    r.denoising = denoise_from(v.at("denoising"));
    for (const auto &t : v.at("res_trace")) {
        PhaseTrace p;
        p.phase = t.at("phase").get<std::size_t>();
        p.best_score = to_num(t.at("best_score"));
        p.best_metrics = metrics_from(t.at("best_metrics"));
        p.evals = t.at("evals").get<std::size_t>();
        p.scored = t.at("scored").get<std::size_t>();
        r.res_trace.push_back(p);
    }
    for (const auto &t : v.at("relm_trace")) {
        EpochTrace e;
        e.epoch = t.at("epoch").get<std::size_t>();
        e.parent_score = to_num(t.at("parent_score"));
        e.mean_reward = to_num(t.at("mean_reward"));
        e.smoothed_reward = to_num(t.at("smoothed_reward"));
        e.best_child_score = to_num(t.at("best_child_score"));
        e.best_score = to_num(t.at("best_score"));
        e.violating_children = t.at("violating_children").get<std::size_t>();
        e.admitted = t.at("admitted").get<bool>();
        e.evals = t.at("evals").get<std::size_t>();
        r.relm_trace.push_back(e);
    }
    r.rs_best_so_far = to_nums(v.at("rs_best_so_far"));
    r.init_best_score = to_num(v.at("init_best_score"));
    r.total_evals = v.at("total_evals").get<std::size_t>();
    r.wall_time_s = to_num(v.at("wall_time_s"));
    if (!v.at("baseline").is_null()) {
        const auto &b = v.at("baseline");
        BaselineRun br;
        br.n_params = b.at("n_params").get<std::size_t>();
        br.theta = to_nums(b.at("theta"));
        br.train_cost = to_num(b.at("train_cost"));
        br.validation_score = to_num(b.at("validation_score"));
        br.test_score = to_num(b.at("test_score"));
        br.denoising = denoise_from(b.at("denoising"));
        r.baseline = br;
    }
    return r;
}

}  // namespace

const char *toolkit_version() {
    return QARCH_VERSION;
}

json record_to_json(const RunRecord &record) {
    json runs = json::array();
    for (const auto &r : record.runs) {
        runs.push_back(seed_json(r));
    }
    return {{"format", record.format},
            {"toolkit_version", record.toolkit_version},
            {"config", record.config},
            {"task", record.task},
            {"algorithm", record.algorithm},
            {"runs", runs}};
}

RunRecord record_from_json(const json &doc) {
    try {
        RunRecord rec;
        rec.format = doc.at("format").get<int>();
        if (rec.format != kRecordFormat) {
            throw std::invalid_argument("unsupported record format " + std::to_string(rec.format));
        }
        rec.toolkit_version = doc.at("toolkit_version").get<std::string>();
        rec.config = doc.at("config");
        rec.task = doc.at("task").get<std::string>();
        rec.algorithm = doc.at("algorithm").get<std::string>();
        for (const auto &r : doc.at("runs")) {
            rec.runs.push_back(seed_from(r));
        }
        return rec;
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("malformed run record: ") + ex.what());
    }
}

std::string serialize_record(const RunRecord &record) {
    return record_to_json(record).dump(2) + "\n";
}

RunRecord parse_record(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception &ex) {
        throw std::invalid_argument(std::string("malformed run record: ") + ex.what());
    }
    return record_from_json(doc);
}

void write_file_atomic(const std::string &path, const std::string &contents) {
    namespace fs = std::filesystem;
    fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw std::runtime_error("cannot write '" + tmp.string() + "'");
        }
        out << contents;
        out.flush();
        if (!out) {
            throw std::runtime_error("write failed for '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, target);
}

void write_record(const std::string &path, const RunRecord &record) {
    write_file_atomic(path, serialize_record(record));
}

RunRecord read_record(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read record '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_record(ss.str());
}

}  // namespace qarch
