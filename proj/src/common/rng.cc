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

#include "qarch/common/rng.h"

#include <stdexcept>

namespace qarch {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

uint64_t hash_string(std::string_view s) {
    // FNV-1a
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

Rng::Rng(uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {
}

Rng Rng::derive(uint64_t seed, std::string_view stream, uint64_t index) {
    uint64_t h = splitmix64(seed ^ splitmix64(hash_string(stream)));
    h = splitmix64(h ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
    return Rng(h);
}

Rng Rng::split(std::string_view stream, uint64_t index) const {
    return derive(seed_, stream, index);
}

uint64_t Rng::next_u64() {
    return engine_();
}

double Rng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::size_t Rng::index(std::size_t n) {
    if (n == 0) {
        throw std::invalid_argument("Rng::index requires n >= 1");
    }
    // Rejection sampling keeps the draw unbiased for any n.
    const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return static_cast<std::size_t>(x % n);
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
    if (hi < lo) {
        throw std::invalid_argument("Rng::uniform_int requires lo <= hi");
    }
    return lo + index(hi - lo + 1);
}

bool Rng::bernoulli(double p) {
    return uniform() < p;
}

}  // namespace qarch
