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

#include <cstddef>
#include <functional>

namespace qarch {

/// Runs `fn(i)` for every i in [0, n) on up to `jobs` threads.
///
/// Each index is processed exactly once. The first exception thrown by any
/// task is rethrown on the calling thread after all workers have joined.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)> &fn);

}  // namespace qarch
