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

#include <json.hpp>

#include "qarch/ir/cell.h"

namespace qarch {

/// {"format": 1, "n_qubits", "node_ops": [[kind, ...], ...],
///  "edge_ops": [{"control", "target", "ops": [kind, ...]}, ...]}
nlohmann::json cell_to_json(const Cell &cell);
/// Throws std::invalid_argument on malformed documents or unknown gate names.
Cell cell_from_json(const nlohmann::json &doc);

}  // namespace qarch
