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

#include <optional>
#include <string_view>

#include "tarai/int_seq.hpp"

namespace tarai {

enum class ClosedFormVariant { kConjectureRecursive, kCharacterization, kMcCarthy3 };

std::string_view to_string(ClosedFormVariant v);
/// Accepts "conjecture", "characterization"/"char", "mccarthy3".
std::optional<ClosedFormVariant> parse_closed_form_variant(std::string_view name);

/// Recursive helper from the closed-form conjecture. Total on non-empty input.
Int g_b(const IntSeq& x);

/// Number of tail steps g_b takes before returning; at most max(0, n-3).
std::size_t g_b_tail_steps(const IntSeq& x);

/// The conjectured closed form, literal recursive definition. Reference only.
Int f_conjecture(const IntSeq& x);

/// The k/l characterization of the closed form; the production path.
/// Requires n >= 3.
Int f_char(const IntSeq& x);

/// if x <= y then y elseif y <= z then z else x. Requires n == 3.
Int mccarthy3(const IntSeq& x);

/// Throws ArgumentError when the variant does not accept the arity.
Int closed_form(const IntSeq& x, ClosedFormVariant variant = ClosedFormVariant::kCharacterization);

}  // namespace tarai
