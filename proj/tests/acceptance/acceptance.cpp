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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "tarai/closed_form.hpp"
#include "tarai/grid.hpp"
#include "tarai/lazy_engine.hpp"
#include "tarai/strict_engine.hpp"
#include "tarai/verify.hpp"

namespace {

using namespace tarai;
using Clock = std::chrono::steady_clock;

// Wall-clock ceilings in seconds.
constexpr double kLimitN3 = 5.0;
constexpr double kLimitN4 = 60.0;
constexpr double kLimitN5 = 60.0;
// Strict budget for the n = 3 totality sweep. The most expensive point of the
// grid needs about 3.2e7 applications.
constexpr std::uint64_t kStrictTotalityBudget = 2'000'000'000;
constexpr std::uint64_t kWitnessBudget = 1'000'000;
constexpr std::uint64_t kRandomPoints = 10'000;
constexpr std::uint64_t kRandomSeed = 1;
constexpr std::uint64_t kDependenceTrials = 1000;
constexpr std::uint64_t kDependenceSeed = 1;

struct Result {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

SweepConfig grid_config(std::size_t n, Int lo, Int hi) {
  SweepConfig c;
  c.n = n;
  c.lo = lo;
  c.hi = hi;
  c.workers = default_workers();
  return c;
}

std::string first_mismatch(const SweepReport& r) {
  if (r.mismatches.empty()) return "";
  const Mismatch& m = r.mismatches.front();
  std::ostringstream os;
  os << "; first: " << to_string(m.property) << " at " << m.input;
  if (!m.detail.empty()) os << " (" << m.detail << ")";
  return os.str();
}

// Sweeps of criteria 1-3, kept for criterion 4.
std::vector<SweepReport> g_main_sweeps;

Result main_sweep(const SweepConfig& config, std::uint64_t expected_points, double limit,
                  bool with_mccarthy) {
  const auto start = Clock::now();
  SweepReport r = sweep_equivalence(config);
  const double secs = seconds_since(start);
  g_main_sweeps.push_back(r);

  bool ok = r.passed() && r.points_checked == expected_points && secs < limit;
  for (PropertyId id : {PropertyId::kMainTEqF, PropertyId::kCharLemma}) {
    ok = ok && r.hits(id) == expected_points;
  }
  if (with_mccarthy) ok = ok && r.hits(PropertyId::kMcCarthy3Agreement) == expected_points;

  std::ostringstream os;
  os << r.points_checked << " points, " << r.mismatch_count << " mismatches, " << secs
     << " s (limit " << limit << " s)" << first_mismatch(r);
  return {ok, os.str()};
}

Result criterion1() {
  return main_sweep(grid_config(3, -4, 8), 2197, kLimitN3, true);
}

Result criterion2() {
  return main_sweep(grid_config(4, -2, 6), 6561, kLimitN4, false);
}

Result criterion3() {
  SweepConfig c = grid_config(5, -10, 10);
  c.mode = SweepMode::randomized(kRandomSeed, kRandomPoints);
  return main_sweep(c, kRandomPoints, kLimitN5, false);
}

Result criterion4() {
  if (g_main_sweeps.size() != 3) return {false, "main sweeps did not all run"};
  std::uint64_t points = 0, violations = 0, hits = 0;
  for (const SweepReport& r : g_main_sweeps) {
    points += r.points_checked;
    hits += r.hits(PropertyId::kThmTerminationBound);
    auto it = r.mismatch_counts.find(PropertyId::kThmTerminationBound);
    if (it != r.mismatch_counts.end()) violations += it->second;
  }
  std::ostringstream os;
  os << points << " points, " << violations << " bound violations or budget trips";
  return {violations == 0 && hits == points && points > 0, os.str()};
}

Result criterion5() {
  const EvalOutcome o = eval_strict(IntSeq{3, 2, 1, 5}, kWitnessBudget);
  const std::vector<IntSeq> expected{{3, 2, 1, 5}, {2, 1, 5, 4}, {3, 2, 1, 5}};
  std::ostringstream os;
  os << "outcome " << to_string(o.kind) << ", path";
  for (const IntSeq& s : o.cycle_path) os << ' ' << s;
  os << ", repeat at depth " << o.repeat_index;
  return {o.is_cycle() && o.cycle_path == expected && o.repeat_index == 0, os.str()};
}

Result criterion6() {
  const Grid grid{3, -4, 8};
  const unsigned workers = default_workers();
  std::atomic<std::uint64_t> values{0}, cycles{0}, budgets{0}, disagreements{0};
  std::mutex mu;
  std::string first_bad;
  const auto start = Clock::now();
  for_each_chunk(grid.size(), workers, [&](std::size_t, std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t i = begin; i < end; ++i) {
      const IntSeq x = grid.point(i);
      const EvalOutcome o = eval_strict(x, kStrictTotalityBudget);
      if (o.is_cycle()) ++cycles;
      if (o.is_budget()) ++budgets;
      if (!o.is_value()) continue;
      ++values;
      if (o.value != mccarthy3(x)) {
        ++disagreements;
        std::lock_guard lock(mu);
        if (first_bad.empty()) first_bad = x.to_string();
      }
    }
  });
  std::ostringstream os;
  os << values << "/" << grid.size() << " values, " << cycles << " cycles, " << budgets
     << " budget trips, " << disagreements << " disagreements with mccarthy3, "
     << seconds_since(start) << " s";
  if (!first_bad.empty()) os << "; first: " << first_bad;
  return {values == grid.size() && disagreements == 0, os.str()};
}

Result criterion7() {
  const SweepReport r3 = check_recurrence(grid_config(3, -4, 8));
  const SweepReport r4 = check_recurrence(grid_config(4, -2, 6));
  std::ostringstream os;
  os << "n=3: " << r3.points_checked << " points, " << r3.hits(PropertyId::kFRecurrence)
     << " checked, " << r3.mismatch_count << " mismatches; n=4: " << r4.points_checked
     << " points, " << r4.hits(PropertyId::kFRecurrence) << " checked, " << r4.mismatch_count
     << " mismatches" << first_mismatch(r3) << first_mismatch(r4);
  const bool ok = r3.passed() && r4.passed() && r3.points_checked == 2197 &&
                  r4.points_checked == 6561 && r3.hits(PropertyId::kFRecurrence) > 0 &&
                  r4.hits(PropertyId::kFRecurrence) > 0;
  return {ok, os.str()};
}

Result criterion8() {
  const std::vector<PropertyId> which{PropertyId::kLemmaGbClosed};
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n = 3; n <= 6; ++n) {
    const SweepReport r = check_lemma_suite(grid_config(n, -3, 5), which);
    const std::uint64_t hits = r.hits(PropertyId::kLemmaGbClosed);
    ok = ok && r.passed() && hits > 0;
    os << (n > 3 ? "; " : "") << "length " << n << ": " << hits << " hits, " << r.mismatch_count
       << " mismatches" << first_mismatch(r);
  }
  return {ok, os.str()};
}

Result criterion9() {
  const SweepReport r = check_lemma_suite(grid_config(4, -2, 6), lemma_suite_properties());
  bool ok = r.passed() && r.points_checked == 6561;
  std::ostringstream os;
  os << r.mismatch_count << " mismatches; hits";
  for (PropertyId id : lemma_suite_properties()) {
    ok = ok && r.hits(id) > 0;
    os << ' ' << to_string(id) << '=' << r.hits(id);
  }
  os << first_mismatch(r);
  return {ok, os.str()};
}

Result criterion10() {
  bool ok = true;
  std::ostringstream os;
  for (std::size_t n = 3; n <= 5; ++n) {
    DependenceConfig c;
    c.n = n;
    c.trials = kDependenceTrials;
    c.seed = kDependenceSeed;
    c.workers = default_workers();
    const SweepReport r = check_dependence(c);
    ok = ok && r.passed() && r.points_checked == kDependenceTrials &&
         r.hits(PropertyId::kLemmaStarKDependence) == kDependenceTrials &&
         r.hits(PropertyId::kLemmaStarKBound) == kDependenceTrials;
    os << (n > 3 ? "; " : "") << "n=" << n << ": " << r.points_checked << " trials, "
       << r.mismatch_count << " failures" << first_mismatch(r);
  }
  return {ok, os.str()};
}

Result criterion11() {
  const IntSeq x{3, 2, 1, 5};
  const LazyResult first = eval_lazy(x);
  bool deterministic = true;
  for (int run = 0; run < 5; ++run) {
    const LazyResult again = eval_lazy(x);
    deterministic = deterministic && again.value == first.value &&
                    again.stats.apps_created == first.stats.apps_created &&
                    again.stats.apps_forced == first.stats.apps_forced;
  }

  ThunkStore store(x.size());
  std::vector<ThunkId> args;
  for (Int v : x.values()) args.push_back(store.leaf(v));
  store.force(store.tarai(args));
  std::uint64_t reforced = 0, extra_work = 0;
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    const ThunkId id{i};
    if (!store.is_forced(id)) continue;
    const EvalStats before = store.stats();
    const Int v = store.force(id);
    const EvalStats& after = store.stats();
    ++reforced;
    if (v != *store.cached(id) || after.apps_forced != before.apps_forced ||
        after.apps_created != before.apps_created || after.decrements != before.decrements ||
        after.thunks_forced != before.thunks_forced ||
        after.cache_hits != before.cache_hits + 1) {
      ++extra_work;
    }
  }
  std::ostringstream os;
  os << "value " << first.value << ", apps_created " << first.stats.apps_created
     << ", apps_forced " << first.stats.apps_forced << ", runs identical: "
     << (deterministic ? "yes" : "no") << "; " << reforced << " cached thunks re-forced, "
     << extra_work << " did extra work";
  return {deterministic && reforced > 0 && extra_work == 0 &&
              first.stats.apps_forced <= first.stats.apps_created,
          os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Result()>>> criteria{
      {1, criterion1}, {2, criterion2}, {3, criterion3},  {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7},  {8, criterion8},
      {9, criterion9}, {10, criterion10}, {11, criterion11},
  };
  int failed = 0;
  for (const auto& [id, check] : criteria) {
    Result r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    if (!r.pass) ++failed;
    std::printf("criterion %2d: %s  %s\n", id, r.pass ? "PASS" : "FAIL", r.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
