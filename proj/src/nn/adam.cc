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

#include "qarch/nn/adam.h"

#include <cmath>
#include <stdexcept>

namespace qarch {

Adam::Adam(std::size_t n_params, const AdamConfig &config) : config_(config), m_(n_params, 0.0), v_(n_params, 0.0) {
}

void Adam::step(std::vector<double> &params, std::span<const double> grads) {
    if (params.size() != m_.size() || grads.size() != m_.size()) {
        throw std::invalid_argument("adam: parameter/gradient sizes do not match the optimizer state");
    }
    t_++;
    const double c1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
    for (std::size_t i = 0; i < params.size(); i++) {
        m_[i] = config_.beta1 * m_[i] + (1.0 - config_.beta1) * grads[i];
        v_[i] = config_.beta2 * v_[i] + (1.0 - config_.beta2) * grads[i] * grads[i];
        double mhat = m_[i] / c1;
        double vhat = v_[i] / c2;
        params[i] -= config_.lr * mhat / (std::sqrt(vhat) + config_.eps);
    }
}

}  // namespace qarch
