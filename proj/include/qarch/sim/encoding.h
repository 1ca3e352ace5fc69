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

#include <span>

#include "qarch/sim/gates.h"
#include "qarch/sim/state.h"

namespace qarch {

/// Zero-pads x to the next power of two (at least 2) and L2-normalizes.
PureState amplitude_encode(std::span<const double> x);

/// (|0...0> + |1...1>) / sqrt(2).
PureState ghz_state(std::size_t n_qubits);

/// H(0) followed by the CNOT chain (0,1), (1,2), ..., (n-2,n-1).
Circuit ghz_prep_circuit(std::size_t n_qubits);

}  // namespace qarch
