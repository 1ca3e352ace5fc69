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

#include "qarch/opt/nelder_mead.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace qarch {

OptBudget OptBudget::for_params(std::size_t n_params) {
    OptBudget b;
    b.max_evals = 150 * (n_params + 1);
    return b;
}

void OptBudget::validate() const {
    if (max_evals < 1) {
        throw std::invalid_argument("optimizer max_evals must be at least 1");
    }
    if (!(x_tol > 0.0) || !(f_tol > 0.0)) {
        throw std::invalid_argument("optimizer tolerances must be positive");
    }
    if (restarts < 1) {
        throw std::invalid_argument("optimizer restarts must be at least 1");
    }
}

namespace {

constexpr double kInitialStep = 0.5;

struct Evaluator {
    Evaluator(const CostFn &fn, std::size_t limit) : fn(fn), limit(limit) {
    }

    const CostFn &fn;
    std::size_t limit;
    std::size_t used = 0;
    std::vector<double> best_x;
    double best_f = std::numeric_limits<double>::infinity();

    bool exhausted() const {
        return used >= limit;
    }

    double operator()(const std::vector<double> &x) {
        used++;
        double f = fn(x);
        if (!std::isfinite(f)) {
            f = std::numeric_limits<double>::infinity();
        }
        if (f < best_f) {
            best_f = f;
            best_x = x;
        }
        return f;
    }
};

/// One simplex run from `start`. Returns true if it stopped on tolerances.
bool nelder_mead_run(Evaluator &eval, const std::vector<double> &start, const OptBudget &budget, Rng &rng, bool signed_axes) {
    const std::size_t n = start.size();
    const double nd = static_cast<double>(n);
    // Adaptive coefficients degenerate in one dimension; use the classic ones there.
    const double alpha = 1.0;
    const double beta = n >= 2 ? 1.0 + 2.0 / nd : 2.0;
    const double gamma = n >= 2 ? 0.75 - 1.0 / (2.0 * nd) : 0.5;
    const double delta = n >= 2 ? 1.0 - 1.0 / nd : 0.5;

    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; i++) {
        double step = kInitialStep;
        if (signed_axes && rng.bernoulli(0.5)) {
            step = -step;
        }
        pts[i + 1][i] += step;
    }
    for (std::size_t i = 0; i <= n; i++) {
        if (eval.exhausted()) {
            return false;
        }
        vals[i] = eval(pts[i]);
    }

    std::vector<std::size_t> order(n + 1);
    std::vector<double> centroid(n), trial(n), trial2(n);
    while (!eval.exhausted()) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return vals[a] < vals[b];
        });
        {
            std::vector<std::vector<double>> p2(n + 1);
            std::vector<double> v2(n + 1);
            for (std::size_t i = 0; i <= n; i++) {
                p2[i] = std::move(pts[order[i]]);
                v2[i] = vals[order[i]];
            }
            pts = std::move(p2);
            vals = std::move(v2);
        }

        double x_spread = 0.0;
        for (std::size_t i = 1; i <= n; i++) {
            for (std::size_t k = 0; k < n; k++) {
                x_spread = std::max(x_spread, std::abs(pts[i][k] - pts[0][k]));
            }
        }
        double f_spread = vals[n] - vals[0];
        if (x_spread <= budget.x_tol && f_spread <= budget.f_tol) {
            return true;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t k = 0; k < n; k++) {
                centroid[k] += pts[i][k] / nd;
            }
        }
        auto along = [&](double coef, std::vector<double> &out) {
            for (std::size_t k = 0; k < n; k++) {
                out[k] = centroid[k] + coef * (pts[n][k] - centroid[k]);
            }
        };

        along(-alpha, trial);
        double fr = eval(trial);
        if (fr < vals[0]) {
            if (eval.exhausted()) {
                pts[n] = trial;
                vals[n] = fr;
                break;
            }
            along(-alpha * beta, trial2);
            double fe = eval(trial2);
            if (fe < fr) {
                pts[n] = trial2;
                vals[n] = fe;
            } else {
                pts[n] = trial;
                vals[n] = fr;
            }
            continue;
        }
        if (fr < vals[n - 1]) {
            pts[n] = trial;
            vals[n] = fr;
            continue;
        }
        if (eval.exhausted()) {
            break;
        }
        bool outside = fr < vals[n];
        along(outside ? -alpha * gamma : gamma, trial2);
        double fc = eval(trial2);
        if (fc < (outside ? fr : vals[n])) {
            pts[n] = trial2;
            vals[n] = fc;
            continue;
        }
        for (std::size_t i = 1; i <= n && !eval.exhausted(); i++) {
            for (std::size_t k = 0; k < n; k++) {
                pts[i][k] = pts[0][k] + delta * (pts[i][k] - pts[0][k]);
            }
            vals[i] = eval(pts[i]);
        }
    }
    return false;
}

}  // namespace

OptResult minimize(const CostFn &cost, std::span<const double> theta0, const OptBudget &budget, Rng &rng) {
    budget.validate();
    for (double v : theta0) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("minimize: theta0 must be finite");
        }
    }
    Evaluator eval(cost, budget.max_evals);
    std::vector<double> start(theta0.begin(), theta0.end());
    eval(start);

    OptResult res;
    if (start.empty()) {
        res.converged = true;
    } else {
        for (std::size_t r = 0; r < budget.restarts && !eval.exhausted(); r++) {
            double before = eval.best_f;
            bool converged = nelder_mead_run(eval, r == 0 ? start : eval.best_x, budget, rng, r > 0);
            res.converged = converged;
            // A restart that found nothing new means the incumbent is a stable point.
            if (r > 0 && converged && before - eval.best_f <= budget.f_tol) {
                break;
            }
        }
    }
    res.theta_star = eval.best_x;
    res.cost = eval.best_f;
    res.evals_used = eval.used;
    return res;
}

}  // namespace qarch
