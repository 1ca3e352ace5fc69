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
#include <vector>

namespace qarch {

struct AdamConfig {
    double lr = 3e-4;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

/// Adam with bias correction.
class Adam {
   public:
    Adam(std::size_t n_params, const AdamConfig &config = {});

    /// Throws std::invalid_argument when sizes disagree.
    void step(std::vector<double> &params, std::span<const double> grads);

    std::size_t steps() const {
        return t_;
    }
    const std::vector<double> &first_moment() const {
        return m_;
    }
    const std::vector<double> &second_moment() const {
        return v_;
    }
    const AdamConfig &config() const {
        return config_;
    }

   private:
    AdamConfig config_;
    std::size_t t_ = 0;
    std::vector<double> m_;
    std::vector<double> v_;
};

}  // namespace qarch
