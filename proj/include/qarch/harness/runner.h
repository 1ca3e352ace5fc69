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
#include <iosfwd>
#include <string>

#include "qarch/harness/config.h"
#include "qarch/harness/record.h"

namespace qarch {

struct RunOptions {
    /// Progress lines go here when set.
    std::ostream *log = nullptr;
};

/// Runs the configured algorithm for one seed. Failures are captured in the
/// returned status rather than thrown.
SeedRun run_seed(const RunConfig &config, const TaskSpec &task, uint64_t seed, std::size_t jobs = 1);

/// Runs every seed. Task construction failures throw; per-seed failures are recorded.
RunRecord run(const RunConfig &config, const RunOptions &options = {});

/// `<output_dir>/<task>-<algorithm>.json`
std::string record_path(const RunConfig &config, const RunRecord &record);

}  // namespace qarch
