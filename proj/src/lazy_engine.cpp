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

#include "tarai/lazy_engine.hpp"

#include <limits>
#include <string>

namespace tarai {

ThunkStore::ThunkStore(std::size_t arity, LazyLimits limits) : arity_(arity), limits_(limits) {
  if (arity < 1) throw ArgumentError("thunk store arity must be positive");
}

ThunkId ThunkStore::push_node(Node node) {
  if (nodes_.size() >= std::numeric_limits<std::uint32_t>::max()) {
    budget_exceeded("thunk arena full");
  }
  nodes_.push_back(node);
  return ThunkId{static_cast<std::uint32_t>(nodes_.size() - 1)};
}

ThunkId ThunkStore::leaf(Int value) { return push_node(Node{Kind::kLeaf, false, value, 0}); }

ThunkId ThunkStore::decrement(ThunkId of) {
  if (of.index >= nodes_.size()) throw ArgumentError("decrement of unknown thunk");
  return push_node(Node{Kind::kDecrement, false, 0, of.index});
}

ThunkId ThunkStore::tarai(std::span<const ThunkId> args) {
  if (args.size() != arity_) {
    throw ArgumentError("tarai application needs " + std::to_string(arity_) + " arguments, got " +
                        std::to_string(args.size()));
  }
  for (ThunkId a : args) {
    if (a.index >= nodes_.size()) throw ArgumentError("tarai application over unknown thunk");
  }
  if (stats_.apps_created >= limits_.max_apps_created) {
    budget_exceeded("lazy evaluation exceeded the created-application budget");
  }
  ++stats_.apps_created;
  const std::uint64_t offset = args_.size();
  args_.insert(args_.end(), args.begin(), args.end());
  return push_node(Node{Kind::kTarai, false, 0, offset});
}

bool ThunkStore::is_forced(ThunkId id) const { return nodes_.at(id.index).has_value; }

std::optional<Int> ThunkStore::cached(ThunkId id) const {
  const Node& node = nodes_.at(id.index);
  if (!node.has_value) return std::nullopt;
  return node.value;
}

std::span<const ThunkId> ThunkStore::args_of(const Node& node) const {
  return std::span<const ThunkId>(args_).subspan(node.ref, arity_);
}

void ThunkStore::budget_exceeded(const char* what) {
  if (!stack_.empty()) add_wall_time();
  stack_.clear();
  throw BudgetExceeded(what, stats_);
}

bool ThunkStore::demand(ThunkId id, Frame& frame, Phase next) {
  frame.phase = next;
  if (nodes_[id.index].has_value) {
    ++stats_.cache_hits;
    return false;
  }
  // `frame` may dangle after this push.
  stack_.push_back(Frame{id.index, Phase::kEnter});
  if (stack_.size() > stats_.max_force_depth) stats_.max_force_depth = stack_.size();
  if (stack_.size() > limits_.max_force_depth) {
    budget_exceeded("lazy evaluation exceeded the forcing-depth budget");
  }
  return true;
}

void ThunkStore::finish(std::uint32_t node, Int value) {
  Node& n = nodes_[node];
  n.value = value;
  n.has_value = true;
  if (trace_ && n.kind == Kind::kTarai) emit_trace(node);
}

void ThunkStore::emit_trace(std::uint32_t node) {
  TraceRecord rec{node, {}, nodes_[node].value};
  rec.args.reserve(arity_);
  for (ThunkId a : args_of(nodes_[node])) {
    const Node& arg = nodes_[a.index];
    rec.args.push_back(arg.has_value ? std::optional<Int>(arg.value) : std::nullopt);
  }
  trace_(rec);
}

// Builds z_i = t(sigma(r^{i-1}(args))) for i = 1..n over the existing argument
// thunks and returns the application over <z_1, ..., z_n>. Only the first
// slot of each z_i is new; the rest alias the parent's arguments.
ThunkId ThunkStore::expand(std::uint32_t node) {
  const std::size_t n = arity_;
  const std::vector<ThunkId> a(args_of(nodes_[node]).begin(), args_of(nodes_[node]).end());
  std::vector<ThunkId> slots(n);
  std::vector<ThunkId> z(n);
  for (std::size_t i = 0; i < n; ++i) {
    slots[0] = decrement(a[i]);
    for (std::size_t j = 1; j < n; ++j) slots[j] = a[(i + j) % n];
    z[i] = tarai(slots);
  }
  return tarai(z);
}

void ThunkStore::add_wall_time() {
  stats_.wall_time += std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - force_start_);
}

Int ThunkStore::force(ThunkId id) {
  if (id.index >= nodes_.size()) throw ArgumentError("force of unknown thunk");
  if (nodes_[id.index].has_value) {
    ++stats_.cache_hits;
    return nodes_[id.index].value;
  }
  force_start_ = std::chrono::steady_clock::now();

  stack_.clear();
  stack_.push_back(Frame{id.index, Phase::kEnter});
  if (stats_.max_force_depth < 1) stats_.max_force_depth = 1;

  while (!stack_.empty()) {
    Frame& f = stack_.back();
    const std::uint32_t cur = f.node;
    switch (nodes_[cur].kind) {
      case Kind::kLeaf:
        ++stats_.thunks_forced;
        finish(cur, nodes_[cur].value);
        stack_.pop_back();
        break;

      case Kind::kDecrement: {
        const ThunkId target{static_cast<std::uint32_t>(nodes_[cur].ref)};
        if (f.phase == Phase::kEnter) {
          ++stats_.thunks_forced;
          if (demand(target, f, Phase::kGotFirst)) continue;
        }
        ++stats_.decrements;
        finish(cur, checked_sub(nodes_[target.index].value, 1));
        stack_.pop_back();
        break;
      }

      case Kind::kTarai: {
        switch (f.phase) {
          case Phase::kEnter:
            ++stats_.thunks_forced;
            ++stats_.apps_forced;
            if (demand(args_of(nodes_[cur])[0], f, Phase::kGotFirst)) continue;
            [[fallthrough]];
          case Phase::kGotFirst:
            if (demand(args_of(nodes_[cur])[1], f, Phase::kGotSecond)) continue;
            [[fallthrough]];
          case Phase::kGotSecond: {
            const auto args = args_of(nodes_[cur]);
            const Int first = nodes_[args[0].index].value;
            const Int second = nodes_[args[1].index].value;
            if (first <= second) {
              finish(cur, second);
              stack_.pop_back();
              continue;
            }
            const ThunkId next = expand(cur);
            f.pending = next.index;
            if (demand(next, f, Phase::kGotResult)) continue;
            [[fallthrough]];
          }
          case Phase::kGotResult:
            finish(cur, nodes_[f.pending].value);
            stack_.pop_back();
            break;
        }
        break;
      }
    }
  }

  add_wall_time();
  return nodes_[id.index].value;
}

LazyResult eval_lazy(const IntSeq& x, const LazyOptions& options) {
  require_arity(x, 3, "eval_lazy");
  ThunkStore store(x.size(), options.limits);
  if (options.trace) store.set_trace(options.trace);

  std::vector<ThunkId> leaves;
  leaves.reserve(x.size());
  for (Int v : x.values()) leaves.push_back(store.leaf(v));
  const ThunkId root = store.tarai(leaves);
  const Int value = store.force(root);

  if (value > x.max()) {
    throw std::logic_error("lazy tarai value " + std::to_string(value) + " exceeds max of " +
                           x.to_string());
  }
  return LazyResult{value, store.stats()};
}

}  // namespace tarai
