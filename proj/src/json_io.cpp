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

#include "tarai/json_io.hpp"

namespace tarai {

using nlohmann::json;

json to_json(const IntSeq& x) { return json(x.vector()); }

json to_json(const EvalStats& stats, bool include_timing) {
  json j{
      {"apps_created", stats.apps_created},
      {"apps_forced", stats.apps_forced},
      {"thunks_forced", stats.thunks_forced},
      {"decrements", stats.decrements},
      {"cache_hits", stats.cache_hits},
      {"max_force_depth", stats.max_force_depth},
  };
  if (include_timing) j["wall_time_ns"] = stats.wall_time.count();
  return j;
}

json cycle_witness_json(const EvalOutcome& outcome) {
  json path = json::array();
  for (const IntSeq& x : outcome.cycle_path) path.push_back(to_json(x));
  return json{{"path", std::move(path)}, {"repeat_index", outcome.repeat_index}};
}

json to_json(const EvalOutcome& outcome, bool include_timing) {
  json j{{"outcome", std::string(to_string(outcome.kind))},
         {"stats", to_json(outcome.stats, include_timing)}};
  if (outcome.is_value()) {
    j["value"] = outcome.value;
  } else {
    j["value"] = nullptr;
  }
  if (outcome.is_cycle()) j["cycle"] = cycle_witness_json(outcome);
  return j;
}

json to_json(const TraceRecord& record) {
  json args = json::array();
  for (const auto& a : record.args) {
    if (a) {
      args.push_back(*a);
    } else {
      args.push_back(nullptr);
    }
  }
  return json{{"node", record.node}, {"args", std::move(args)}, {"result", record.result}};
}

json to_json(const SweepReport& report, bool include_timing) {
  json mode;
  if (report.mode.kind == SweepMode::Kind::kExhaustive) {
    mode = json{{"kind", "exhaustive"}};
  } else {
    mode = json{{"kind", "randomized"}, {"seed", report.mode.seed}, {"count", report.mode.count}};
  }
  json mismatches = json::array();
  for (const Mismatch& m : report.mismatches) {
    mismatches.push_back(json{
        {"property", std::string(to_string(m.property))},
        {"input", to_json(m.input)},
        {"expected", m.expected ? json(*m.expected) : json(nullptr)},
        {"actual", m.actual ? json(*m.actual) : json(nullptr)},
        {"detail", m.detail},
    });
  }
  json hits = json::object();
  for (const auto& [id, count] : report.hypothesis_hits) hits[std::string(to_string(id))] = count;

  json failures = json::object();
  for (const auto& [id, count] : report.mismatch_counts) {
    failures[std::string(to_string(id))] = count;
  }

  json j{
      {"sweep", report.sweep},
      {"n", report.n},
      {"lo", report.lo},
      {"hi", report.hi},
      {"mode", std::move(mode)},
      {"points_checked", report.points_checked},
      {"passed", report.passed()},
      {"mismatch_count", report.mismatch_count},
      {"mismatch_counts", std::move(failures)},
      {"mismatches", std::move(mismatches)},
      {"hypothesis_hits", std::move(hits)},
  };
  if (report.apps_created.count) {
    j["apps_created"] = json{{"min", report.apps_created.min},
                             {"max", report.apps_created.max},
                             {"mean", report.apps_created.mean()}};
  } else {
    j["apps_created"] = nullptr;
  }
  if (include_timing) j["wall_time_ns"] = report.wall_time.count();
  return j;
}

}  // namespace tarai
