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
#include <random>
#include <string_view>

namespace qarch {

/// Seeded pseudo-random generator with named, order-independent substreams.
///
/// A master seed is split into independent streams by hashing a stream name
/// and an index, so adding a consumer (or evaluating candidates in a different
/// order) never shifts the draws seen by another consumer.
class Rng {
   public:
    explicit Rng(uint64_t seed);

    /// Child generator for `(seed, stream, index)`; pure function of its inputs.
    static Rng derive(uint64_t seed, std::string_view stream, uint64_t index = 0);
    /// Derive a child from this generator's own seed (does not advance it).
    Rng split(std::string_view stream, uint64_t index = 0) const;

    uint64_t seed() const {
        return seed_;
    }

    uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    /// Uniform on {0, ..., n-1}. Requires n >= 1.
    std::size_t index(std::size_t n);
    /// Uniform on {lo, ..., hi} inclusive.
    std::size_t uniform_int(std::size_t lo, std::size_t hi);
    bool bernoulli(double p);

   private:
    uint64_t seed_;
    std::mt19937_64 engine_;
};

uint64_t splitmix64(uint64_t x);
uint64_t hash_string(std::string_view s);

}  // namespace qarch
