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

#include "tarai/int_seq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace tarai {

namespace {

// Exact for every pair of int64 values.
using Wide = __int128;

void require_non_empty(std::size_t n) {
  if (n == 0) throw ArgumentError("IntSeq must have at least one element");
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " + " + std::to_string(b));
  }
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " - " + std::to_string(b));
  }
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " * " + std::to_string(b));
  }
  return r;
}

IntSeq::IntSeq(std::initializer_list<Int> values) : values_(values) {
  require_non_empty(values_.size());
}

IntSeq::IntSeq(std::vector<Int> values) : values_(std::move(values)) {
  require_non_empty(values_.size());
}

IntSeq::IntSeq(std::span<const Int> values) : values_(values.begin(), values.end()) {
  require_non_empty(values_.size());
}

Int IntSeq::operator()(std::size_t i) const {
  if (i < 1 || i > values_.size()) {
    throw ArgumentError("index " + std::to_string(i) + " out of range [1, " +
                        std::to_string(values_.size()) + "]");
  }
  return values_[i - 1];
}

Int IntSeq::max() const noexcept { return *std::max_element(values_.begin(), values_.end()); }
Int IntSeq::min() const noexcept { return *std::min_element(values_.begin(), values_.end()); }

IntSeq IntSeq::prefix(std::size_t len) const {
  if (len < 1 || len > values_.size()) {
    throw ArgumentError("prefix length " + std::to_string(len) + " out of range");
  }
  return IntSeq(std::span<const Int>(values_).first(len));
}

IntSeq IntSeq::tail() const {
  if (values_.size() < 2) throw ArgumentError("tail of a length-1 sequence");
  return IntSeq(std::span<const Int>(values_).subspan(1));
}

std::string IntSeq::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntSeq& x) {
  os << '<';
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) os << ", ";
    os << x.values()[i];
  }
  return os << '>';
}

std::size_t IntSeqHash::operator()(std::span<const Int> values) const noexcept {
  // splitmix64 finalizer folded over the elements
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ values.size();
  for (Int v : values) {
    std::uint64_t z = h + static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h = z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

IntSeq sigma(const IntSeq& x) {
  std::vector<Int> out = x.vector();
  out[0] = checked_sub(out[0], 1);
  return IntSeq(std::move(out));
}

IntSeq rot(const IntSeq& x) { return rot_i(x, x.size() == 1 ? 0 : 1); }

IntSeq rot_i(const IntSeq& x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) {
    throw ArgumentError("rotation count " + std::to_string(i) + " out of range [0, " +
                        std::to_string(n - 1) + "]");
  }
  std::vector<Int> out(n);
  std::rotate_copy(x.values().begin(), x.values().begin() + static_cast<std::ptrdiff_t>(i),
                   x.values().end(), out.begin());
  return IntSeq(std::move(out));
}

IntSeq rotate_decrement(const IntSeq& x, std::size_t i) {
  const std::size_t n = x.size();
  if (i >= n) throw ArgumentError("rotation count " + std::to_string(i) + " out of range");
  std::vector<Int> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = x.values()[(i + j) % n];
  out[0] = checked_sub(out[0], 1);
  return IntSeq(std::move(out));
}

KIndex k_index(const IntSeq& x) {
  const std::size_t n = x.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (x(k) <= x(k + 1)) return KIndex{k};
  }
  return KIndex{n};
}

LIndex l_index(const IntSeq& x) { return l_index(x, k_index(x)); }

LIndex l_index(const IntSeq& x, KIndex k) {
  // l = k-1 satisfies the condition trivially when it holds, so scanning
  // l <= k-2 is enough and keeps l+2 <= k <= n in range.
  for (std::size_t l = 1; l + 2 <= k.value; ++l) {
    const Wide a = x(l), b = x(l + 1), c = x(l + 2);
    if (a > b + 1 && b == c + 1) return LIndex{l};
  }
  return LIndex{k.value - 1};
}

bool in_X_k(const IntSeq& x, std::size_t k) {
  if (k < 2 || k > x.size()) {
    throw ArgumentError("X_k index " + std::to_string(k) + " out of range [2, " +
                        std::to_string(x.size()) + "]");
  }
  const Int pivot = x(k);
  for (std::size_t i = 1; i < k; ++i) {
    if (x(i) > pivot) return false;
  }
  return true;
}

void require_arity(const IntSeq& x, std::size_t min_len, const char* what) {
  if (x.size() < min_len) {
    throw ArgumentError(std::string(what) + " requires at least " + std::to_string(min_len) +
                        " arguments, got " + std::to_string(x.size()));
  }
}

}  // namespace tarai
