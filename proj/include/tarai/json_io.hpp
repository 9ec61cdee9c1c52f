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

#include <json.hpp>

#include "tarai/eval_stats.hpp"
#include "tarai/int_seq.hpp"
#include "tarai/lazy_engine.hpp"
#include "tarai/strict_engine.hpp"
#include "tarai/verify.hpp"

namespace tarai {

// Machine-readable renderings. Field sets are pinned by golden tests; wall
// times are the only nondeterministic fields and can be left out.

nlohmann::json to_json(const IntSeq& x);
nlohmann::json to_json(const EvalStats& stats, bool include_timing = true);
nlohmann::json to_json(const EvalOutcome& outcome, bool include_timing = true);
/// {"path": [[...], ...], "repeat_index": d}
nlohmann::json cycle_witness_json(const EvalOutcome& outcome);
nlohmann::json to_json(const TraceRecord& record);
nlohmann::json to_json(const SweepReport& report, bool include_timing = true);

}  // namespace tarai
