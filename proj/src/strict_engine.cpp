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

#include "tarai/strict_engine.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "tarai/closed_form.hpp"

namespace tarai {

std::string_view to_string(EvalOutcome::Kind kind) {
  switch (kind) {
    case EvalOutcome::Kind::kValue: return "VALUE";
    case EvalOutcome::Kind::kBudget: return "BUDGET";
    case EvalOutcome::Kind::kCycle: return "CYCLE";
  }
  return "?";
}

void StrictEvaluator::StackIndex::reset(std::size_t arity) {
  arity_ = arity;
  size_ = 0;
  slots_.assign(64, kEmpty);
}

std::optional<std::size_t> StrictEvaluator::StackIndex::find(
    std::size_t hash, std::span<const Int> key, const std::vector<Int>& frames) const {
  const std::size_t mask = slots_.size() - 1;
  for (std::size_t i = hash & mask; slots_[i] != kEmpty; i = (i + 1) & mask) {
    const std::size_t d = slots_[i];
    if (std::equal(key.begin(), key.end(), frames.begin() + static_cast<std::ptrdiff_t>(d * arity_))) {
      return d;
    }
  }
  return std::nullopt;
}

void StrictEvaluator::StackIndex::insert(std::size_t hash, std::size_t depth,
                                         const std::vector<Int>& /*frames*/,
                                         const std::vector<std::size_t>& hashes) {
  if ((size_ + 1) * 2 > slots_.size()) rehash(slots_.size() * 2, hashes);
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash & mask;
  while (slots_[i] != kEmpty) i = (i + 1) & mask;
  slots_[i] = static_cast<std::uint32_t>(depth);
  ++size_;
}

// Live depths are always 0..size_-1.
void StrictEvaluator::StackIndex::rehash(std::size_t capacity,
                                         const std::vector<std::size_t>& hashes) {
  slots_.assign(capacity, kEmpty);
  const std::size_t mask = capacity - 1;
  for (std::size_t d = 0; d < size_; ++d) {
    std::size_t i = hashes[d] & mask;
    while (slots_[i] != kEmpty) i = (i + 1) & mask;
    slots_[i] = static_cast<std::uint32_t>(d);
  }
}

void StrictEvaluator::StackIndex::erase(std::size_t hash, std::size_t depth,
                                        const std::vector<std::size_t>& hashes) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash & mask;
  while (slots_[i] != depth) i = (i + 1) & mask;
  // Backward-shift deletion keeps every probe chain unbroken.
  std::size_t j = i;
  while (true) {
    j = (j + 1) & mask;
    if (slots_[j] == kEmpty) break;
    const std::size_t home = hashes[slots_[j]] & mask;
    const bool movable = (i <= j) ? (home <= i || home > j) : (home <= i && home > j);
    if (movable) {
      slots_[i] = slots_[j];
      i = j;
    }
  }
  slots_[i] = kEmpty;
  --size_;
}

std::size_t StrictEvaluator::memo_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(table_.begin(), table_.end(), [](const auto& kv) { return kv.second.done; }));
}

EvalOutcome StrictEvaluator::evaluate(const IntSeq& x, std::uint64_t budget) {
  require_arity(x, 3, "eval_strict");
  if (budget == 0) throw ArgumentError("strict budget must be positive");

  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = x.size();
  const IntSeqHash hasher;
  EvalOutcome out;

  // Frame d keeps its arguments at args[d*n, (d+1)*n) and the values of its
  // finished inner calls at inner[d*n, d*n + inner_count[d]).
  std::vector<Int> args;
  std::vector<Int> inner;
  std::vector<std::size_t> inner_count;
  std::vector<bool> in_outer;
  std::vector<std::size_t> hashes;
  std::vector<Int> next(n);
  on_stack_.reset(n);

  auto depth = [&] { return hashes.size(); };
  auto frame_args = [&](std::size_t d) {
    return std::span<const Int>(args).subspan(d * n, n);
  };
  auto frame_vector = [&](std::size_t d) {
    const auto a = frame_args(d);
    return std::vector<Int>(a.begin(), a.end());
  };

  auto finish = [&](EvalOutcome::Kind kind) {
    if (memoize_) {
      // Abandoned frames must not leave in-progress markers behind.
      for (std::size_t d = 0; d < depth(); ++d) table_.erase(frame_vector(d));
    }
    out.kind = kind;
    out.stats.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
        std::chrono::steady_clock::now() - start);
    return out;
  };

  auto record_cycle = [&](std::size_t from) {
    out.repeat_index = from;
    for (std::size_t d = from; d < depth(); ++d) out.cycle_path.emplace_back(frame_args(d));
    out.cycle_path.emplace_back(std::span<const Int>(next));
  };

  // Demands t(next). Either resolves it at once (memo hit, into `ready`) or
  // pushes a frame. Returns false when evaluation must stop.
  std::optional<Int> ready;
  auto enter = [&]() -> bool {
    const std::size_t h = memoize_ || next[0] > next[1] ? hasher(std::span<const Int>(next)) : 0;
    if (memoize_) {
      if (auto it = table_.find(next); it != table_.end()) {
        if (it->second.done) {
          ++out.stats.cache_hits;
          ready = it->second.value;
          return true;
        }
        record_cycle(static_cast<std::size_t>(it->second.value));
        return false;
      }
    } else if (next[0] <= next[1]) {
      // Every live frame is mid-expansion (first > second), so a base case
      // can never repeat one; resolve it without a frame.
      if (out.stats.apps_created >= budget) return false;
      ++out.stats.apps_created;
      ++out.stats.apps_forced;
      out.stats.max_force_depth = std::max<std::uint64_t>(out.stats.max_force_depth, depth() + 1);
      ready = next[1];
      return true;
    } else if (auto d = on_stack_.find(h, next, args)) {
      record_cycle(*d);
      return false;
    }
    if (out.stats.apps_created >= budget) return false;
    ++out.stats.apps_created;
    ++out.stats.apps_forced;

    const std::size_t d = depth();
    args.insert(args.end(), next.begin(), next.end());
    inner.resize(args.size());
    inner_count.push_back(0);
    in_outer.push_back(false);
    hashes.push_back(h);
    if (memoize_) {
      table_.emplace(next, Entry{false, static_cast<Int>(d)});
    } else {
      on_stack_.insert(h, d, args, hashes);
    }
    out.stats.max_force_depth = std::max<std::uint64_t>(out.stats.max_force_depth, depth());
    return true;
  };

  auto complete_top = [&](Int value) {
    const std::size_t d = depth() - 1;
    if (memoize_) {
      table_[frame_vector(d)] = Entry{true, value};
    } else {
      on_stack_.erase(hashes[d], d, hashes);
    }
    args.resize(d * n);
    inner.resize(d * n);
    inner_count.pop_back();
    in_outer.pop_back();
    hashes.pop_back();
    ready = value;
  };

  auto stopped = [&] {
    return finish(out.cycle_path.empty() ? EvalOutcome::Kind::kBudget : EvalOutcome::Kind::kCycle);
  };

  std::copy(x.values().begin(), x.values().end(), next.begin());
  if (!enter()) return stopped();

  while (depth() > 0 || ready) {
    if (ready) {
      const Int v = *ready;
      ready.reset();
      if (depth() == 0) {
        out.value = v;
        return finish(EvalOutcome::Kind::kValue);
      }
      const std::size_t top = depth() - 1;
      if (in_outer[top]) {
        complete_top(v);
      } else {
        inner[top * n + inner_count[top]++] = v;
      }
      continue;
    }

    const std::size_t top = depth() - 1;
    const auto a = frame_args(top);
    const std::size_t done = inner_count[top];
    if (done == 0 && a[0] <= a[1]) {
      complete_top(a[1]);
      continue;
    }
    if (done < n) {
      // sigma(r^done(args)), built before `enter` can reallocate `args`.
      for (std::size_t j = 0; j < n; ++j) next[j] = a[(done + j) % n];
      next[0] = checked_sub(next[0], 1);
      ++out.stats.decrements;
    } else {
      in_outer[top] = true;
      std::copy_n(inner.begin() + static_cast<std::ptrdiff_t>(top * n), n, next.begin());
    }
    if (!enter()) return stopped();
  }
  return finish(EvalOutcome::Kind::kValue);
}

EvalOutcome eval_strict(const IntSeq& x, std::uint64_t budget) {
  return StrictEvaluator(false).evaluate(x, budget);
}

EvalOutcome eval_strict_memo(const IntSeq& x, std::uint64_t budget) {
  return StrictEvaluator(true).evaluate(x, budget);
}

bool is_strict_step(const IntSeq& from, const IntSeq& to) {
  if (from.size() != to.size() || from.size() < 3) return false;
  if (from(1) <= from(2)) return false;
  const std::size_t n = from.size();
  std::vector<Int> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntSeq z = rotate_decrement(from, i);
    if (z == to) return true;
    y[i] = f_char(z);
  }
  return IntSeq(std::move(y)) == to;
}

std::vector<IntSeq> find_divergent(const DivergenceSearch& search) {
  if (search.n < 3) throw ArgumentError("find_divergent requires n >= 3");
  const Grid grid{search.n, search.lo, search.hi};
  grid.validate(search.grid_cap);
  const std::uint64_t total = grid.size();

  std::vector<std::vector<IntSeq>> per_chunk(chunk_count(total, search.workers));
  for_each_chunk(total, search.workers,
                 [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
                   StrictEvaluator evaluator(false);
                   for (std::uint64_t i = begin; i < end; ++i) {
                     IntSeq x = grid.point(i);
                     if (!evaluator.evaluate(x, search.budget).is_value()) {
                       per_chunk[chunk].push_back(std::move(x));
                     }
                   }
                 });

  std::vector<IntSeq> found;
  for (auto& chunk : per_chunk) {
    found.insert(found.end(), std::make_move_iterator(chunk.begin()),
                 std::make_move_iterator(chunk.end()));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace tarai
