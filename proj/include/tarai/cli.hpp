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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tarai::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // sweep mismatch, or a cycle where a value was expected
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

/// Environment variable naming the configuration file.
inline constexpr const char* kConfigEnv = "TARAI_CONFIG";

enum class OutputFormat { kHuman, kJson, kCsv };

/// Effective settings. Precedence: command-line flag, then config file, then
/// these defaults.
struct CliConfig {
  std::uint64_t lazy_max_apps = 50'000'000;
  std::uint64_t lazy_max_depth = 10'000'000;
  std::uint64_t strict_budget = 1'000'000;
  std::uint64_t grid_cap = 10'000'000;
  OutputFormat format = OutputFormat::kHuman;
  unsigned workers = 0;  // 0: available hardware parallelism
  std::uint64_t seed = 1;
};

/// Parses flat `key = value` text (`#` starts a comment) on top of `base`.
/// Throws std::invalid_argument on unknown keys or malformed values.
CliConfig parse_config(const std::string& text, CliConfig base);

/// Runs the command line (`args` excludes the program name). Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tarai::cli
