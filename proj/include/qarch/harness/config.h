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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qarch/ir/cell.h"
#include "qarch/opt/nelder_mead.h"
#include "qarch/search/random_search.h"
#include "qarch/search/relm.h"
#include "qarch/search/res.h"
#include "qarch/tasks/task.h"

namespace qarch {

/// Thrown for malformed documents, unknown keys, type mismatches and
/// inconsistent settings. The CLI maps it to exit code 1.
class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct TaskConfig {
    /// denoise | image | unitary | state
    std::string kind = "denoise";
    std::string noise = "bitflip";
    double train_p = 0.2;
    std::size_t n_train = 100;
    std::size_t n_validation = 100;
    std::size_t n_test_per_p = 200;
    std::vector<double> test_grid = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::string image_set = "digits";
    std::string subtask = "dense";
    std::size_t n_qubits = 3;
    std::size_t layers = 3;
    std::size_t target_index = 0;
    /// Empty selects the task's natural mode.
    std::string cost_mode;
    uint64_t data_seed = 0;
};

struct RunConfig {
    TaskConfig task;
    /// rs | res | relm
    std::string algorithm = "res";
    std::vector<uint64_t> seeds;
    std::string output_dir = "runs";
    std::size_t jobs = 1;
    /// Gate names; empty selects the task's default space.
    std::vector<std::string> space;
    /// max_evals = 0 means 150 * (n_params + 1) per cell.
    OptBudget optimizer{0, 1e-6, 1e-9, 3};
    RandomSearchConfig rs;
    ResConfig res;
    RelmConfig relm;
    /// Also train and evaluate the task's fixed baseline circuit per seed.
    bool baseline = false;
};

/// Parses YAML (JSON is a subset) text, applies QARCH_* environment overrides
/// from `env`, validates and fills defaults.
RunConfig parse_config_text(const std::string &text, const std::map<std::string, std::string> &env = {});
RunConfig parse_config_file(const std::string &path, const std::map<std::string, std::string> &env = {});
/// Same validation for an already-structured document (e.g. a record's config).
RunConfig config_from_json(const nlohmann::json &doc);

/// The fully resolved configuration (every field explicit).
nlohmann::json config_to_json(const RunConfig &config);

/// QARCH_<SECTION>__<KEY> -> {section: {key: value}}; QARCH_<KEY> -> top level.
/// Only variables with the QARCH_ prefix are read.
std::map<std::string, std::string> environment_overrides();

/// Re-checks cross-field invariants (K <= P, at least one seed, ...).
void validate_config(const RunConfig &config);

TaskSpec build_task(const TaskConfig &config);
GateVocab build_space(const RunConfig &config, const TaskSpec &task);
/// Resolved optimizer budget (nullopt = per-cell default).
std::optional<OptBudget> optimizer_budget(const RunConfig &config);
/// Layer bound used when a search section leaves its constraint unset.
SoftConstraint default_constraint(const TaskSpec &task);

}  // namespace qarch
