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
#include <string>
#include <vector>

#include <json.hpp>

#include "qarch/ir/cell.h"
#include "qarch/search/relm.h"
#include "qarch/search/res.h"
#include "qarch/tasks/task.h"

namespace qarch {

inline constexpr int kRecordFormat = 1;

struct BaselineRun {
    std::size_t n_params = 0;
    std::vector<double> theta;
    double train_cost = 0.0;
    double validation_score = 0.0;
    double test_score = 0.0;
    std::vector<DenoisePoint> denoising;
};

struct SeedRun {
    uint64_t seed = 0;
    /// "ok" or "error"
    std::string status = "ok";
    std::string error;
    std::optional<Cell> best_cell;
    std::vector<double> theta;
    CellMetrics metrics;
    double train_cost = 0.0;
    double validation_score = 0.0;
    double test_score = 0.0;
    std::vector<DenoisePoint> denoising;
    std::vector<PhaseTrace> res_trace;
    std::vector<EpochTrace> relm_trace;
    std::vector<double> rs_best_so_far;
    double init_best_score = 0.0;
    std::size_t total_evals = 0;
    std::optional<BaselineRun> baseline;
    /// Excluded from determinism comparisons.
    double wall_time_s = 0.0;
};

struct RunRecord {
    int format = kRecordFormat;
    std::string toolkit_version;
    /// Fully resolved configuration.
    nlohmann::json config;
    std::string task;
    std::string algorithm;
    std::vector<SeedRun> runs;
};

nlohmann::json record_to_json(const RunRecord &record);
RunRecord record_from_json(const nlohmann::json &doc);

std::string serialize_record(const RunRecord &record);
RunRecord parse_record(const std::string &text);

/// Writes to a sibling temp file, then renames over `path`.
void write_record(const std::string &path, const RunRecord &record);
RunRecord read_record(const std::string &path);

/// Writes `contents` to `path` via temp file + rename.
void write_file_atomic(const std::string &path, const std::string &contents);

const char *toolkit_version();

}  // namespace qarch
