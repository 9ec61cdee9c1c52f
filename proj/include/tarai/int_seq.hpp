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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace tarai {

using Int = std::int64_t;

/// Raised when an argument violates a documented precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised instead of letting a signed 64-bit operation wrap.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

/// Immutable, non-empty sequence of integers with 1-based element access.
///
/// `x(1)` is the first element. All operations below return fresh values;
/// nothing mutates a sequence after construction.
class IntSeq {
 public:
  IntSeq(std::initializer_list<Int> values);
  explicit IntSeq(std::vector<Int> values);
  explicit IntSeq(std::span<const Int> values);

  /// 1-based access; throws ArgumentError when `i` is outside [1, size()].
  Int operator()(std::size_t i) const;

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const Int> values() const noexcept { return values_; }
  const std::vector<Int>& vector() const noexcept { return values_; }

  Int max() const noexcept;
  Int min() const noexcept;

  /// The first `len` elements, 1 <= len <= size().
  IntSeq prefix(std::size_t len) const;
  /// Elements 2..size(); requires size() >= 2.
  IntSeq tail() const;

  friend bool operator==(const IntSeq&, const IntSeq&) = default;
  friend auto operator<=>(const IntSeq& a, const IntSeq& b) {
    return a.values_ <=> b.values_;
  }

  /// "<3, 2, 1, 5>"
  std::string to_string() const;

 private:
  std::vector<Int> values_;
};

std::ostream& operator<<(std::ostream& os, const IntSeq& x);

struct IntSeqHash {
  std::size_t operator()(std::span<const Int> values) const noexcept;
  std::size_t operator()(const IntSeq& x) const noexcept { return (*this)(x.values()); }
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    return (*this)(std::span<const Int>(v));
  }
};

/// Position of the first non-descent: least k with x(k) <= x(k+1), or n when
/// x is strictly decreasing.
struct KIndex {
  std::size_t value;
  friend auto operator<=>(const KIndex&, const KIndex&) = default;
};

/// Least l in [1, k) with x(l) > x(l+1)+1 and x(l+1) = x(l+2)+1, else k-1.
struct LIndex {
  std::size_t value;
  friend auto operator<=>(const LIndex&, const LIndex&) = default;
};

/// <x1-1, x2, ..., xn>
IntSeq sigma(const IntSeq& x);

/// Left rotation by one: <x2, ..., xn, x1>.
IntSeq rot(const IntSeq& x);

/// i-fold left rotation, 0 <= i <= n-1.
IntSeq rot_i(const IntSeq& x, std::size_t i);

/// sigma(rot_i(x, i)) without the intermediate copy.
IntSeq rotate_decrement(const IntSeq& x, std::size_t i);

KIndex k_index(const IntSeq& x);
LIndex l_index(const IntSeq& x);
LIndex l_index(const IntSeq& x, KIndex k);

/// True iff x(i) <= x(k) for every i < k. Requires 2 <= k <= n.
bool in_X_k(const IntSeq& x, std::size_t k);

/// Throws ArgumentError unless x has at least `min_len` elements.
void require_arity(const IntSeq& x, std::size_t min_len, const char* what);

}  // namespace tarai
