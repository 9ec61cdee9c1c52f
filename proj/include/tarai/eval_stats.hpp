// Copyright 2026 The tarai Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstdint>

namespace tarai {

/// Counters gathered by one evaluation. Strict evaluators report
/// apps_created == apps_forced == applications performed.
struct EvalStats {
  std::uint64_t apps_created = 0;
  std::uint64_t apps_forced = 0;
  std::uint64_t thunks_forced = 0;
  std::uint64_t decrements = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t max_force_depth = 0;
  std::chrono::nanoseconds wall_time{0};
};

}  // namespace tarai
