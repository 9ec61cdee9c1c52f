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

#include "tarai/grid.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace tarai {

std::uint64_t Grid::size() const {
  const __int128 side = static_cast<__int128>(hi) - lo + 1;
  if (side <= 0) return 0;
  __int128 total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= side;
    if (total > std::numeric_limits<std::int64_t>::max()) {
      throw OverflowError("grid size overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(total);
}

IntSeq Grid::point(std::uint64_t index) const {
  const std::uint64_t side = static_cast<std::uint64_t>(static_cast<__int128>(hi) - lo + 1);
  std::vector<Int> v(n);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = static_cast<Int>(lo + static_cast<__int128>(index % side));
    index /= side;
  }
  return IntSeq(std::move(v));
}

void Grid::validate(std::uint64_t cap) const {
  if (n == 0) throw ArgumentError("grid arity must be positive");
  if (lo > hi) {
    throw ArgumentError("empty range: lo " + std::to_string(lo) + " > hi " + std::to_string(hi));
  }
  std::uint64_t total = 0;
  try {
    total = size();
  } catch (const OverflowError&) {
    throw ArgumentError("grid too large; shrink the range or the arity");
  }
  if (total > cap) {
    throw ArgumentError("grid has " + std::to_string(total) + " points, above the cap of " +
                        std::to_string(cap) + "; shrink the range or the arity");
  }
}

Int SeededRng::uniform(Int lo, Int hi) {
  if (lo > hi) throw ArgumentError("uniform: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(static_cast<__int128>(hi) - lo);  // hi-lo, may be 2^64-1
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<Int>(engine_());
  }
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<Int>(lo + static_cast<__int128>(draw % range));
}

std::size_t chunk_count(std::uint64_t total, unsigned workers) {
  if (total == 0) return 0;
  return static_cast<std::size_t>(std::min<std::uint64_t>(std::max(1u, workers), total));
}

void for_each_chunk(std::uint64_t total, unsigned workers,
                    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& body) {
  const std::size_t chunks = chunk_count(total, workers);
  if (chunks == 0) return;
  auto bounds = [&](std::size_t c) {
    return std::pair{total * c / chunks, total * (c + 1) / chunks};
  };
  if (chunks == 1) {
    body(0, 0, total);
    return;
  }
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    threads.emplace_back([&, c] {
      try {
        auto [begin, end] = bounds(c);
        body(c, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

}  // namespace tarai
