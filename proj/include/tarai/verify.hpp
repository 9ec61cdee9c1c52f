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
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tarai/grid.hpp"
#include "tarai/int_seq.hpp"
#include "tarai/lazy_engine.hpp"

namespace tarai {

/// One checker per theorem or lemma. Names round-trip through to_string /
/// parse_property and appear verbatim in reports.
enum class PropertyId {
  kThmTerminationBound,
  kLemmaStarKDependence,
  kLemmaStarKBound,
  kMainTEqF,
  kFRecurrence,
  kLemmaGbClosed,
  kCharLemma,
  kLemmaI,
  kLemmaA,
  kLemmaE,
  kLemmaH,
  kLemmaB,
  kLemmaC,
  kLemmaD,
  kLemmaF,
  kLemmaG,
  kMcCarthy3Agreement,
};

std::string_view to_string(PropertyId id);
std::optional<PropertyId> parse_property(std::string_view name);
const std::vector<PropertyId>& all_properties();
/// Lemmas I, A, E, H, B, C, D, F, G.
const std::vector<PropertyId>& lemma_suite_properties();

struct SweepMode {
  enum class Kind { kExhaustive, kRandomized };
  Kind kind = Kind::kExhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static SweepMode exhaustive() { return {}; }
  static SweepMode randomized(std::uint64_t seed, std::uint64_t count) {
    return {Kind::kRandomized, seed, count};
  }
};

struct SweepConfig {
  std::size_t n = 3;
  Int lo = 0;
  Int hi = 0;
  SweepMode mode;
  std::uint64_t grid_cap = kDefaultGridCap;
  unsigned workers = 1;
  LazyLimits limits;
};

struct Mismatch {
  PropertyId property;
  IntSeq input;
  std::optional<Int> expected;
  std::optional<Int> actual;
  std::string detail;
};

struct AppsAggregate {
  std::uint64_t count = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::uint64_t sum = 0;

  void add(std::uint64_t apps);
  void merge(const AppsAggregate& other);
  double mean() const { return count ? static_cast<double>(sum) / static_cast<double>(count) : 0.0; }
};

inline constexpr std::size_t kMaxRecordedMismatches = 1000;

struct SweepReport {
  std::string sweep;
  std::size_t n = 0;
  Int lo = 0;
  Int hi = 0;
  SweepMode mode;
  std::uint64_t points_checked = 0;
  /// Total failures; `mismatches` keeps the first kMaxRecordedMismatches.
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;
  std::map<PropertyId, std::uint64_t> mismatch_counts;
  /// Points (or point/parameter pairs) where each property's hypothesis held.
  std::map<PropertyId, std::uint64_t> hypothesis_hits;
  /// apps_created of every lazy evaluation the sweep ran; empty if none ran.
  AppsAggregate apps_created;
  std::chrono::nanoseconds wall_time{0};

  bool passed() const noexcept { return mismatch_count == 0; }
  std::uint64_t hits(PropertyId id) const;
};

/// eval_lazy(x) = f_char(x) = f_conjecture(x) (and mccarthy3 for n = 3),
/// plus eval_lazy(x) <= max(x), at every point.
SweepReport sweep_equivalence(const SweepConfig& config);

/// For every point with x(1) > x(2): f(x) = f(y) with
/// y(i) = f(sigma(r^{i-1}(x))). No evaluator involved.
SweepReport check_recurrence(const SweepConfig& config);

/// Evaluates each selected property at each applicable point.
SweepReport check_lemma_suite(const SweepConfig& config, std::span<const PropertyId> which);

struct DependenceConfig {
  std::size_t n = 5;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  Int lo = -10;
  Int hi = 10;
  unsigned workers = 1;
  LazyLimits limits;
};

/// Randomized check of the X_k lemma: for x in X_k, changing positions
/// k+1..n leaves eval_lazy unchanged, and the value is at most x(k).
SweepReport check_dependence(const DependenceConfig& config);

/// Fixed-width human summary.
std::string summary_table(const SweepReport& report);

}  // namespace tarai
