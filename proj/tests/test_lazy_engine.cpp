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

#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "tarai/closed_form.hpp"
#include "tarai/lazy_engine.hpp"

namespace tarai {
namespace {

TEST(ThunkStore, LeafAndDecrement) {
  ThunkStore store(3);
  const ThunkId seven = store.leaf(7);
  EXPECT_EQ(store.force(seven), 7);
  const ThunkId two = store.decrement(store.leaf(3));
  EXPECT_FALSE(store.is_forced(two));
  EXPECT_EQ(store.force(two), 2);
  EXPECT_TRUE(store.is_forced(two));
  EXPECT_EQ(store.cached(two), 2);
  EXPECT_EQ(store.stats().decrements, 1u);
}

TEST(ThunkStore, RejectsWrongArity) {
  ThunkStore store(3);
  const ThunkId a = store.leaf(1);
  const std::vector<ThunkId> two{a, a};
  EXPECT_THROW(store.tarai(two), ArgumentError);
}

TEST(ThunkStore, SecondForceIsACacheHit) {
  ThunkStore store(4);
  std::vector<ThunkId> args;
  for (Int v : {3, 2, 1, 5}) args.push_back(store.leaf(v));
  const ThunkId root = store.tarai(args);
  EXPECT_EQ(store.force(root), 5);
  const EvalStats before = store.stats();
  const std::size_t size_before = store.size();
  EXPECT_EQ(store.force(root), 5);
  const EvalStats after = store.stats();
  EXPECT_EQ(after.apps_created, before.apps_created);
  EXPECT_EQ(after.apps_forced, before.apps_forced);
  EXPECT_EQ(after.thunks_forced, before.thunks_forced);
  EXPECT_EQ(after.decrements, before.decrements);
  EXPECT_EQ(after.cache_hits, before.cache_hits + 1);
  EXPECT_EQ(store.size(), size_before);
}

TEST(ThunkStore, EveryCachedNodeForcesForFree) {
  ThunkStore store(3);
  std::vector<ThunkId> args;
  for (Int v : {10, 5, 0}) args.push_back(store.leaf(v));
  store.force(store.tarai(args));
  for (std::uint32_t i = 0; i < store.size(); ++i) {
    const ThunkId id{i};
    if (!store.is_forced(id)) continue;
    const EvalStats before = store.stats();
    EXPECT_EQ(store.force(id), *store.cached(id));
    EXPECT_EQ(store.stats().apps_forced, before.apps_forced);
    EXPECT_EQ(store.stats().apps_created, before.apps_created);
    EXPECT_EQ(store.stats().decrements, before.decrements);
  }
}

TEST(EvalLazy, Examples) {
  EXPECT_EQ(eval_lazy(IntSeq{1, 2, 3}).value, 2);
  EXPECT_EQ(eval_lazy(IntSeq{1, 2, 3}).stats.apps_forced, 1u);
  EXPECT_EQ(eval_lazy(IntSeq{3, 2, 1, 5}).value, 5);
  EXPECT_EQ(eval_lazy(IntSeq{5, 4, 3}).value, 5);
  EXPECT_THROW(eval_lazy(IntSeq{2, 1}), ArgumentError);
}

TEST(EvalLazy, OverflowIsReported) {
  constexpr Int kMin = std::numeric_limits<Int>::min();
  EXPECT_THROW(eval_lazy(IntSeq{kMin + 1, kMin, 5}), OverflowError);
}

TEST(EvalLazy, Deterministic) {
  const auto a = eval_lazy(IntSeq{3, 2, 1, 5});
  const auto b = eval_lazy(IntSeq{3, 2, 1, 5});
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.stats.apps_created, b.stats.apps_created);
  EXPECT_EQ(a.stats.apps_forced, b.stats.apps_forced);
}

TEST(EvalLazy, BudgetTripCarriesStats) {
  LazyOptions options;
  options.limits.max_apps_created = 10;
  try {
    eval_lazy(IntSeq{10, 5, 0}, options);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    EXPECT_GE(e.stats().apps_created, 10u);
    EXPECT_GT(e.stats().wall_time.count(), 0);
  }
  options.limits = {};
  options.limits.max_force_depth = 3;
  EXPECT_THROW(eval_lazy(IntSeq{10, 5, 0}, options), BudgetExceeded);
}

TEST(EvalLazy, AgreesWithNaiveOracle) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const Int hi = n == 5 ? 2 : 4;
    oracle::for_grid(n, -2, hi, [](const oracle::Vec& v) {
      const IntSeq x(v);
      const LazyResult r = eval_lazy(x);
      ASSERT_EQ(r.value, oracle::t_need(v)) << x;
      ASSERT_LE(r.value, x.max()) << x;
      ASSERT_LE(r.stats.apps_forced, r.stats.apps_created) << x;
    });
  }
}

// Both implementations are call-by-need, so they perform the same set of
// applications.
TEST(EvalLazy, ApplicationCountMatchesNaiveOracle) {
  oracle::for_grid(4, -1, 3, [](const oracle::Vec& v) {
    oracle::NeedEvaluator naive;
    naive.eval(v);
    ASSERT_EQ(eval_lazy(IntSeq(v)).stats.apps_forced, naive.applications()) << IntSeq(v);
  });
}

TEST(EvalLazy, RandomizedAgainstClosedForm) {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 5;
    std::vector<Int> v(n);
    for (auto& e : v) e = static_cast<Int>(rng() % 31) - 15;
    const IntSeq x(v);
    ASSERT_EQ(eval_lazy(x).value, f_char(x)) << x;
  }
}

TEST(EvalLazy, LargeMagnitudesDoNotRecurseNatively) {
  const IntSeq x{100000, -100000, 50000};
  const auto r = eval_lazy(x);
  EXPECT_EQ(r.value, f_char(x));
  EXPECT_GT(r.stats.max_force_depth, 100000u);
}

TEST(EvalLazy, TraceEndsWithRoot) {
  std::vector<TraceRecord> records;
  LazyOptions options;
  options.trace = [&](const TraceRecord& r) { records.push_back(r); };
  eval_lazy(IntSeq{1, 2, 3}, options);
  ASSERT_EQ(records.size(), 1u);
  EXPECT_EQ(records[0].result, 2);

  records.clear();
  const auto r = eval_lazy(IntSeq{3, 2, 1, 5}, options);
  ASSERT_FALSE(records.empty());
  EXPECT_EQ(records.back().result, 5);
  EXPECT_EQ(records.size(), r.stats.apps_forced);
  for (const auto& rec : records) EXPECT_EQ(rec.args.size(), 4u);
}

}  // namespace
}  // namespace tarai
