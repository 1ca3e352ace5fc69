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

#include <string>
#include <vector>

#include "qarch/harness/record.h"

namespace qarch {

/// CSV families written by export_csv, with their fixed header rows.
///   summary.csv        task,algorithm,seed,status,n_params,n_layers,n_two_qubit,n_gates,
///                      train_cost,validation_score,test_score,init_best_score,total_evals
///   denoising.csv      p,mean_fidelity,std_fidelity,algorithm,seed
///   relm_rewards.csv   epoch,smoothed_reward,best_score
///   res_trace.csv      task,algorithm,seed,phase,best_score,n_params,n_layers,n_two_qubit,evals,scored
///   rs_trace.csv       task,algorithm,seed,cell,best_so_far
struct CsvTable {
    std::string file;
    std::string header;
    std::vector<std::string> rows;

    std::string str() const;
};

/// Builds every CSV family from the given records (in order). Wall time is
/// never exported. Records with differing format versions are rejected.
std::vector<CsvTable> export_tables(const std::vector<RunRecord> &records);

/// Loads a record file, or every *.json record in a directory (sorted by name).
std::vector<RunRecord> load_records(const std::string &path);

/// Writes all CSV families into `out_dir` and returns the written paths.
std::vector<std::string> export_csv(const std::vector<RunRecord> &records, const std::string &out_dir);

/// Formats with 12 significant digits.
std::string format_number(double x);

}  // namespace qarch
