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

#include <set>

#include "tarai/json_io.hpp"
#include "tarai/verify.hpp"

namespace tarai {
namespace {

SweepConfig grid(std::size_t n, Int lo, Int hi, unsigned workers = 1) {
  SweepConfig c;
  c.n = n;
  c.lo = lo;
  c.hi = hi;
  c.workers = workers;
  return c;
}

TEST(PropertyId, NamesRoundTrip) {
  std::set<std::string> names;
  for (PropertyId id : all_properties()) {
    names.insert(std::string(to_string(id)));
    EXPECT_EQ(parse_property(to_string(id)), id);
  }
  EXPECT_EQ(names.size(), all_properties().size());
  EXPECT_EQ(all_properties().size(), 17u);
  EXPECT_EQ(lemma_suite_properties().size(), 9u);
  EXPECT_FALSE(parse_property("lemma_Z"));
}

TEST(SweepEquivalence, CountsGridPoints) {
  const auto r = sweep_equivalence(grid(3, -2, 2));
  EXPECT_EQ(r.points_checked, 125u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.hits(PropertyId::kMcCarthy3Agreement), 125u);
  EXPECT_EQ(r.hits(PropertyId::kMainTEqF), 125u);

  const auto one = sweep_equivalence(grid(3, 0, 0));
  EXPECT_EQ(one.points_checked, 1u);
  EXPECT_TRUE(one.passed());

  const auto four = sweep_equivalence(grid(4, -1, 2));
  EXPECT_EQ(four.points_checked, 256u);
  EXPECT_EQ(four.hits(PropertyId::kMcCarthy3Agreement), 0u);
}

TEST(SweepEquivalence, ReproducibleAcrossWorkerCounts) {
  SweepConfig c = grid(5, -10, 10);
  c.mode = SweepMode::randomized(9, 400);
  const auto a = to_json(sweep_equivalence(c), false);
  c.workers = 3;
  const auto b = to_json(sweep_equivalence(c), false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["points_checked"], 400);

  c.mode = SweepMode::randomized(10, 400);
  EXPECT_NE(to_json(sweep_equivalence(c), false)["apps_created"], a["apps_created"]);
}

TEST(SweepEquivalence, RejectsOversizedGrid) {
  SweepConfig c = grid(5, -10, 10);
  c.grid_cap = 1000;
  EXPECT_THROW(sweep_equivalence(c), ArgumentError);
  EXPECT_THROW(sweep_equivalence(grid(3, 2, 1)), ArgumentError);
}

TEST(SweepEquivalence, BudgetTripsBecomeMismatches) {
  SweepConfig c = grid(3, 8, 10);
  c.limits.max_apps_created = 5;
  const auto r = sweep_equivalence(c);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.mismatches.empty());
  EXPECT_EQ(r.mismatches[0].property, PropertyId::kThmTerminationBound);
}

TEST(CheckRecurrence, SmallGrids) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = check_recurrence(grid(n, -2, 3));
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_GT(r.hits(PropertyId::kFRecurrence), 0u);
    // only points with x(1) > x(2) have a recurrence to check
    EXPECT_LT(r.hits(PropertyId::kFRecurrence), r.points_checked);
  }
}

TEST(LemmaSuite, EveryLemmaFiresOnSmallGrid) {
  const auto r = check_lemma_suite(grid(4, -2, 4, 2), lemma_suite_properties());
  EXPECT_TRUE(r.passed());
  for (PropertyId id : lemma_suite_properties()) EXPECT_GT(r.hits(id), 0u) << to_string(id);
}

TEST(LemmaSuite, AllPropertiesOnN3) {
  const auto r = check_lemma_suite(grid(3, -3, 5), all_properties());
  EXPECT_TRUE(r.passed());
  for (PropertyId id : all_properties()) EXPECT_GT(r.hits(id), 0u) << to_string(id);
}

TEST(LemmaSuite, SelectedPropertiesOnly) {
  const std::vector<PropertyId> which{PropertyId::kLemmaC, PropertyId::kLemmaG};
  const auto r = check_lemma_suite(grid(4, 0, 3), which);
  EXPECT_EQ(r.hypothesis_hits.size(), 2u);
  EXPECT_GT(r.hits(PropertyId::kLemmaC), 0u);
  EXPECT_EQ(r.hits(PropertyId::kLemmaI), 0u);
}

TEST(GbClosedForm, HitsForEveryLength) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::vector<PropertyId> which{PropertyId::kLemmaGbClosed};
    const auto r = check_lemma_suite(grid(n, -2, 3), which);
    EXPECT_TRUE(r.passed());
    EXPECT_GT(r.hits(PropertyId::kLemmaGbClosed), 0u);
  }
}

TEST(CheckDependence, Passes) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const auto r = check_dependence(DependenceConfig{n, 200, 4, -10, 10, 2, {}});
    EXPECT_TRUE(r.passed()) << n;
    EXPECT_EQ(r.points_checked, 200u);
    EXPECT_EQ(r.hits(PropertyId::kLemmaStarKDependence), 200u);
    EXPECT_EQ(r.hits(PropertyId::kLemmaStarKBound), 200u);
  }
}

TEST(CheckDependence, Reproducible) {
  const DependenceConfig c{5, 100, 77, -10, 10, 1, {}};
  DependenceConfig c2 = c;
  c2.workers = 4;
  EXPECT_EQ(to_json(check_dependence(c), false), to_json(check_dependence(c2), false));
}

TEST(SummaryTable, ListsEveryProperty) {
  const auto r = check_lemma_suite(grid(3, 0, 2), all_properties());
  const std::string table = summary_table(r);
  for (PropertyId id : all_properties()) {
    EXPECT_NE(table.find(std::string(to_string(id))), std::string::npos);
  }
  EXPECT_NE(table.find("PASS"), std::string::npos);
}

}  // namespace
}  // namespace tarai
