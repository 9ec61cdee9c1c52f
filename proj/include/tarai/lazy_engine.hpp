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
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "tarai/eval_stats.hpp"
#include "tarai/int_seq.hpp"

namespace tarai {

struct ThunkId {
  std::uint32_t index;
  friend bool operator==(ThunkId, ThunkId) = default;
};

struct LazyLimits {
  std::uint64_t max_apps_created = 50'000'000;
  std::uint64_t max_force_depth = 10'000'000;
};

/// Thrown when a lazy evaluation hits its LazyLimits. Carries the counters
/// gathered up to that point.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, EvalStats stats)
      : std::runtime_error(what), stats_(stats) {}
  const EvalStats& stats() const noexcept { return stats_; }

 private:
  EvalStats stats_;
};

/// One forced tarai application. `args[i]` is empty when that argument was
/// never forced.
struct TraceRecord {
  std::uint32_t node;
  std::vector<std::optional<Int>> args;
  Int result;
};

using TraceSink = std::function<void(const TraceRecord&)>;

/// Call-by-need thunk arena for the n-dimensional tarai recurrence.
///
/// Nodes are leaves, decrements of another node, or tarai applications over
/// `arity` other nodes. Children always exist before their parents, so the
/// graph is acyclic. Each node is evaluated at most once and its value is
/// cached; later demands are cache hits.
///
/// Forcing runs on an explicit work stack, so deep demand chains never touch
/// the native call stack.
class ThunkStore {
 public:
  explicit ThunkStore(std::size_t arity, LazyLimits limits = {});

  ThunkId leaf(Int value);
  ThunkId decrement(ThunkId of);
  /// `args.size()` must equal the store's arity.
  ThunkId tarai(std::span<const ThunkId> args);

  /// Evaluates `id` (and whatever it demands) and returns its value.
  Int force(ThunkId id);

  bool is_forced(ThunkId id) const;
  std::optional<Int> cached(ThunkId id) const;

  std::size_t arity() const noexcept { return arity_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  const EvalStats& stats() const noexcept { return stats_; }

  void set_trace(TraceSink sink) { trace_ = std::move(sink); }

 private:
  enum class Kind : std::uint8_t { kLeaf, kDecrement, kTarai };
  enum class Phase : std::uint8_t { kEnter, kGotFirst, kGotSecond, kGotResult };

  struct Node {
    Kind kind;
    bool has_value = false;
    // Leaf: the literal. Otherwise: the cached value once has_value is set.
    Int value = 0;
    // Decrement: target node. Tarai: offset of the arguments in args_.
    std::uint64_t ref = 0;
  };

  struct Frame {
    std::uint32_t node;
    Phase phase;
    std::uint32_t pending = 0;
  };

  ThunkId push_node(Node node);
  std::span<const ThunkId> args_of(const Node& node) const;
  // Returns true when `id` had to be scheduled (not yet cached).
  bool demand(ThunkId id, Frame& frame, Phase next);
  void finish(std::uint32_t node, Int value);
  ThunkId expand(std::uint32_t node);
  void emit_trace(std::uint32_t node);
  [[noreturn]] void budget_exceeded(const char* what);
  void add_wall_time();

  std::size_t arity_;
  LazyLimits limits_;
  std::vector<Node> nodes_;
  std::vector<ThunkId> args_;
  std::vector<Frame> stack_;
  EvalStats stats_;
  TraceSink trace_;
  std::chrono::steady_clock::time_point force_start_;
};

struct LazyResult {
  Int value;
  EvalStats stats;
};

struct LazyOptions {
  LazyLimits limits;
  TraceSink trace;
};

/// t(x) under call-by-need. Requires n >= 3. Throws BudgetExceeded when the
/// limits trip.
LazyResult eval_lazy(const IntSeq& x, const LazyOptions& options = {});

}  // namespace tarai
