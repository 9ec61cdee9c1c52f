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

#include "oracles.hpp"
#include "tarai/closed_form.hpp"

namespace tarai {
namespace {

TEST(GB, Examples) {
  EXPECT_EQ(g_b(IntSeq{7, 1, 9}), 9);
  EXPECT_EQ(g_b(IntSeq{4, 3, 1, 9}), 9);
  EXPECT_EQ(g_b(IntSeq{5, 2, 1, 9}), 9);
  EXPECT_EQ(g_b_tail_steps(IntSeq{4, 3, 1, 9}), 1u);
  EXPECT_EQ(g_b_tail_steps(IntSeq{5, 2, 1, 9}), 0u);
}

TEST(FConjecture, Examples) {
  EXPECT_EQ(f_conjecture(IntSeq{5, 4, 3}), 5);
  EXPECT_EQ(f_conjecture(IntSeq{3, 2, 1, 5}), 5);
  EXPECT_EQ(f_conjecture(IntSeq{1, 2, 3}), 2);
}

TEST(FChar, Examples) {
  EXPECT_EQ(f_char(IntSeq{5, 4, 3}), 5);
  EXPECT_EQ(f_char(IntSeq{3, 2, 1, 5}), 5);
  EXPECT_EQ(f_char(IntSeq{5, 2, 1, 0, 4}), 4);
  EXPECT_EQ(f_conjecture(IntSeq{5, 2, 1, 0, 4}), 4);
  EXPECT_THROW(f_char(IntSeq{1, 2}), ArgumentError);
}

TEST(McCarthy3, Examples) {
  EXPECT_EQ(mccarthy3(IntSeq{1, 2, 3}), 2);
  EXPECT_EQ(mccarthy3(IntSeq{3, 1, 5}), 5);
  EXPECT_EQ(mccarthy3(IntSeq{5, 4, 3}), 5);
  EXPECT_THROW(mccarthy3(IntSeq{1, 2, 3, 4}), ArgumentError);
}

TEST(ClosedForm, VariantDispatch) {
  const IntSeq x{3, 1, 5};
  EXPECT_EQ(closed_form(x), 5);
  EXPECT_EQ(closed_form(x, ClosedFormVariant::kConjectureRecursive), 5);
  EXPECT_EQ(closed_form(x, ClosedFormVariant::kMcCarthy3), 5);
  EXPECT_THROW(closed_form(IntSeq{1, 2, 3, 4}, ClosedFormVariant::kMcCarthy3), ArgumentError);
  for (auto v : {ClosedFormVariant::kConjectureRecursive, ClosedFormVariant::kCharacterization,
                 ClosedFormVariant::kMcCarthy3}) {
    EXPECT_EQ(parse_closed_form_variant(to_string(v)), v);
  }
  EXPECT_EQ(parse_closed_form_variant("char"), ClosedFormVariant::kCharacterization);
  EXPECT_FALSE(parse_closed_form_variant("nope"));
}

TEST(ClosedForm, McCarthyAgreesWithOracle) {
  oracle::for_grid(3, -4, 8, [](const oracle::Vec& v) {
    ASSERT_EQ(mccarthy3(IntSeq(v)), oracle::mccarthy(v[0], v[1], v[2]));
  });
}

// The closed forms are equal to call-by-need tarai, evaluated here by the
// naive oracle rather than the library engine.
TEST(ClosedForm, AgreesWithNaiveCallByNeed) {
  for (std::size_t n = 3; n <= 5; ++n) {
    const std::int64_t lo = n == 5 ? -1 : -2;
    const std::int64_t hi = n == 5 ? 3 : 4;
    oracle::for_grid(n, lo, hi, [](const oracle::Vec& v) {
      const IntSeq x(v);
      const auto t = oracle::t_need(v);
      ASSERT_EQ(f_char(x), t) << x;
      ASSERT_EQ(f_conjecture(x), t) << x;
    });
  }
}

TEST(ClosedForm, ValueIsACoordinate) {
  oracle::for_grid(5, -1, 2, [](const oracle::Vec& v) {
    const IntSeq x(v);
    const Int f = f_char(x);
    ASSERT_NE(std::find(v.begin(), v.end(), f), v.end()) << x;
    ASSERT_LE(f, x.max());
  });
}

TEST(GB, TailStepsBounded) {
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_grid(n, -1, 2, [&](const oracle::Vec& v) {
      ASSERT_LE(g_b_tail_steps(IntSeq(v)), n >= 3 ? n - 3 : 0);
    });
  }
}

}  // namespace
}  // namespace tarai
