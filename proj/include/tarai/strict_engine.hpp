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
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tarai/eval_stats.hpp"
#include "tarai/grid.hpp"
#include "tarai/int_seq.hpp"

namespace tarai {

inline constexpr std::uint64_t kDefaultStrictBudget = 1'000'000;

/// Result of a strict evaluation.
///
/// For kCycle, `cycle_path` runs from the earlier occurrence of the repeated
/// argument vector on the call stack to the repeat itself, so the first and
/// last entries are equal. `repeat_index` is the 0-based stack depth of the
/// earlier occurrence.
struct EvalOutcome {
  enum class Kind { kValue, kBudget, kCycle };

  Kind kind = Kind::kValue;
  Int value = 0;
  std::vector<IntSeq> cycle_path;
  std::size_t repeat_index = 0;
  EvalStats stats;

  bool is_value() const noexcept { return kind == Kind::kValue; }
  bool is_cycle() const noexcept { return kind == Kind::kCycle; }
  bool is_budget() const noexcept { return kind == Kind::kBudget; }
};

std::string_view to_string(EvalOutcome::Kind kind);

/// Innermost-first evaluator. On x(1) > x(2) the n inner calls
/// t(sigma(r^{i-1}(x))) run left to right, then the outer call on their
/// values. Each application costs one unit of budget.
///
/// Cycle detection looks for the demanded argument vector among the calls
/// currently on the stack, never among finished ones.
///
/// With memoization enabled the evaluator keeps a table keyed by argument
/// vector across calls. Entries are marked in progress while on the call
/// stack (that marker is the cycle detector) and store the value once the
/// call returns. Without memoization an open-addressing index over the live
/// stack frames plays the same role.
class StrictEvaluator {
 public:
  explicit StrictEvaluator(bool memoize) : memoize_(memoize) {}

  EvalOutcome evaluate(const IntSeq& x, std::uint64_t budget);

  bool memoizing() const noexcept { return memoize_; }
  /// Completed entries held in the memo table.
  std::size_t memo_size() const noexcept;

 private:
  struct Entry {
    bool done;
    Int value;  // depth on the stack while in progress, the result once done
  };

  // Set of live stack depths, hashed by the frame's argument vector.
  class StackIndex {
   public:
    void reset(std::size_t arity);
    std::optional<std::size_t> find(std::size_t hash, std::span<const Int> key,
                                    const std::vector<Int>& frames) const;
    void insert(std::size_t hash, std::size_t depth, const std::vector<Int>& frames,
                const std::vector<std::size_t>& hashes);
    void erase(std::size_t hash, std::size_t depth, const std::vector<std::size_t>& hashes);

   private:
    static constexpr std::uint32_t kEmpty = 0xffffffffu;
    void rehash(std::size_t capacity, const std::vector<std::size_t>& hashes);

    std::size_t arity_ = 0;
    std::size_t size_ = 0;
    std::vector<std::uint32_t> slots_;
  };

  bool memoize_;
  std::unordered_map<std::vector<Int>, Entry, IntSeqHash> table_;
  StackIndex on_stack_;
};

/// Requires n >= 3 and budget > 0.
EvalOutcome eval_strict(const IntSeq& x, std::uint64_t budget = kDefaultStrictBudget);
EvalOutcome eval_strict_memo(const IntSeq& x, std::uint64_t budget = kDefaultStrictBudget);

/// True when `to` is one strict expansion step from `from`: one of the inner
/// calls sigma(r^{i-1}(from)), or the outer call on their strict values.
/// The outer step is checked by recomputing those values with the
/// closed form.
bool is_strict_step(const IntSeq& from, const IntSeq& to);

struct DivergenceSearch {
  std::size_t n = 4;
  Int lo = 0;
  Int hi = 5;
  std::uint64_t budget = kDefaultStrictBudget;
  std::uint64_t grid_cap = kDefaultGridCap;
  unsigned workers = 1;
};

/// Every point of [lo, hi]^n where eval_strict ends in kCycle or kBudget,
/// sorted lexicographically.
std::vector<IntSeq> find_divergent(const DivergenceSearch& search);

}  // namespace tarai
