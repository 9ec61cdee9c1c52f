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

#include "tarai/closed_form.hpp"

#include <algorithm>
#include <span>

namespace tarai {

namespace {

using Wide = __int128;

// Walks g_b's tail recursion over a window of the input.
struct GbResult {
  Int value;
  std::size_t steps;
};

GbResult g_b_walk(std::span<const Int> x) {
  std::size_t steps = 0;
  while (true) {
    const std::size_t j = x.size();
    if (j <= 3) return {x[j - 1], steps};
    const Wide x1 = x[0], x2 = x[1], x3 = x[2];
    if (x1 == x2 + 1 || x2 > x3 + 1) {
      x = x.subspan(1);
      ++steps;
      continue;
    }
    return {std::max(x[2], x[j - 1]), steps};
  }
}

}  // namespace

std::string_view to_string(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::kConjectureRecursive: return "conjecture";
    case ClosedFormVariant::kCharacterization: return "characterization";
    case ClosedFormVariant::kMcCarthy3: return "mccarthy3";
  }
  return "?";
}

std::optional<ClosedFormVariant> parse_closed_form_variant(std::string_view name) {
  if (name == "conjecture" || name == "conjecture_recursive") {
    return ClosedFormVariant::kConjectureRecursive;
  }
  if (name == "characterization" || name == "char") return ClosedFormVariant::kCharacterization;
  if (name == "mccarthy3") return ClosedFormVariant::kMcCarthy3;
  return std::nullopt;
}

Int g_b(const IntSeq& x) { return g_b_walk(x.values()).value; }

std::size_t g_b_tail_steps(const IntSeq& x) { return g_b_walk(x.values()).steps; }

Int f_conjecture(const IntSeq& x) {
  // Own scan for the descent run, independent of k_index.
  const auto v = x.values();
  const std::size_t m = v.size();
  std::size_t k = 1;
  while (k < m && v[k - 1] > v[k]) ++k;
  if (k < m) return g_b_walk(v.first(k + 1)).value;
  return v[0];
}

Int f_char(const IntSeq& x) {
  require_arity(x, 3, "f_char");
  const KIndex k = k_index(x);
  if (k.value == x.size()) return x(1);
  const LIndex l = l_index(x, k);
  return std::max(x(l.value + 2), x(k.value + 1));
}

Int mccarthy3(const IntSeq& x) {
  if (x.size() != 3) {
    throw ArgumentError("mccarthy3 requires exactly 3 arguments, got " + std::to_string(x.size()));
  }
  const Int a = x(1), b = x(2), c = x(3);
  if (a <= b) return b;
  if (b <= c) return c;
  return a;
}

Int closed_form(const IntSeq& x, ClosedFormVariant variant) {
  switch (variant) {
    case ClosedFormVariant::kConjectureRecursive: return f_conjecture(x);
    case ClosedFormVariant::kCharacterization: return f_char(x);
    case ClosedFormVariant::kMcCarthy3: return mccarthy3(x);
  }
  throw ArgumentError("unknown closed-form variant");
}

}  // namespace tarai
