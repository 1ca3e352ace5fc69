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

#include <functional>
#include <span>
#include <vector>

#include "qarch/common/rng.h"

namespace qarch {

struct OptBudget {
    /// Total cost evaluations across all restarts.
    std::size_t max_evals = 150;
    double x_tol = 1e-6;
    double f_tol = 1e-9;
    std::size_t restarts = 3;

    /// max_evals = 150 * (n_params + 1), other fields at their defaults.
    static OptBudget for_params(std::size_t n_params);
    /// Throws std::invalid_argument on max_evals < 1, non-positive tolerances or zero restarts.
    void validate() const;
};

struct OptResult {
    std::vector<double> theta_star;
    double cost = 0.0;
    std::size_t evals_used = 0;
    bool converged = false;
};

using CostFn = std::function<double(std::span<const double>)>;

/// Adaptive Nelder-Mead (dimension-dependent coefficients) with restarts.
///
/// The first run starts from theta0; each restart re-seeds the simplex around
/// the incumbent with randomly signed steps. Non-finite cost values are treated
/// as +inf. The returned cost never exceeds cost(theta0).
OptResult minimize(const CostFn &cost, std::span<const double> theta0, const OptBudget &budget, Rng &rng);

}  // namespace qarch
