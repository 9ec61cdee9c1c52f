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

#include <cstdint>
#include <functional>
#include <random>

#include "tarai/int_seq.hpp"

namespace tarai {

inline constexpr std::uint64_t kDefaultGridCap = 10'000'000;

/// The box [lo, hi]^n, enumerated in lexicographic order.
struct Grid {
  std::size_t n;
  Int lo;
  Int hi;

  /// (hi-lo+1)^n; throws OverflowError when it does not fit.
  std::uint64_t size() const;
  /// The index-th point in lexicographic order.
  IntSeq point(std::uint64_t index) const;
  /// Throws ArgumentError for lo > hi, n == 0, or size() > cap.
  void validate(std::uint64_t cap) const;
};

/// mt19937_64 with a portable bounded draw (rejection sampling), so a seed
/// yields the same stream with every standard library.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [lo, hi].
  Int uniform(Int lo, Int hi);

 private:
  std::mt19937_64 engine_;
};

/// Splits [0, total) into at most `workers` contiguous chunks and runs
/// body(chunk, begin, end) for each, in parallel when workers > 1.
/// Exceptions from workers are rethrown on the calling thread.
void for_each_chunk(std::uint64_t total, unsigned workers,
                    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body);

/// Number of chunks for_each_chunk will use.
std::size_t chunk_count(std::uint64_t total, unsigned workers);

unsigned default_workers();

}  // namespace tarai
