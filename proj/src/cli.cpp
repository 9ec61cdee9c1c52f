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

#include "tarai/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "tarai/closed_form.hpp"
#include "tarai/grid.hpp"
#include "tarai/json_io.hpp"
#include "tarai/lazy_engine.hpp"
#include "tarai/strict_engine.hpp"
#include "tarai/verify.hpp"

namespace tarai::cli {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string_view format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::kHuman: return "human";
    case OutputFormat::kJson: return "json";
    case OutputFormat::kCsv: return "csv";
  }
  return "?";
}

OutputFormat parse_format(const std::string& s) {
  if (s == "human") return OutputFormat::kHuman;
  if (s == "json") return OutputFormat::kJson;
  if (s == "csv") return OutputFormat::kCsv;
  throw UsageError("unknown output format '" + s + "' (expected human, json or csv)");
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    if (!value.empty() && value[0] == '-') throw std::invalid_argument("negative");
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw UsageError("config key '" + key + "' expects a non-negative integer, got '" + value + "'");
  }
  return v;
}

// Flags that override the config file when given.
struct Overrides {
  std::optional<std::uint64_t> max_apps;
  std::optional<std::uint64_t> max_depth;
  std::optional<std::uint64_t> budget;
  std::optional<std::uint64_t> grid_cap;
  std::optional<std::string> format;
  std::optional<unsigned> workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> config_path;
  bool no_timing = false;
};

CliConfig resolve(const Overrides& o) {
  CliConfig cfg;
  std::optional<std::string> path = o.config_path;
  if (!path) {
    if (const char* env = std::getenv(kConfigEnv); env && *env) path = env;
  }
  if (path) {
    std::ifstream in(*path);
    if (!in) throw UsageError("cannot read config file '" + *path + "'");
    std::stringstream text;
    text << in.rdbuf();
    cfg = parse_config(text.str(), cfg);
  }
  if (o.max_apps) cfg.lazy_max_apps = *o.max_apps;
  if (o.max_depth) cfg.lazy_max_depth = *o.max_depth;
  if (o.budget) cfg.strict_budget = *o.budget;
  if (o.grid_cap) cfg.grid_cap = *o.grid_cap;
  if (o.format) cfg.format = parse_format(*o.format);
  if (o.workers) cfg.workers = *o.workers;
  if (o.seed) cfg.seed = *o.seed;
  if (cfg.workers == 0) cfg.workers = default_workers();
  if (cfg.strict_budget == 0) throw UsageError("strict budget must be positive");
  return cfg;
}

json config_json(const CliConfig& cfg) {
  return json{
      {"lazy_max_apps", cfg.lazy_max_apps}, {"lazy_max_depth", cfg.lazy_max_depth},
      {"strict_budget", cfg.strict_budget}, {"grid_cap", cfg.grid_cap},
      {"format", std::string(format_name(cfg.format))}, {"workers", cfg.workers},
      {"seed", cfg.seed},
  };
}

LazyLimits limits_of(const CliConfig& cfg) { return {cfg.lazy_max_apps, cfg.lazy_max_depth}; }

IntSeq to_seq(const std::vector<Int>& v, std::size_t min_len, const char* what) {
  if (v.size() < min_len) {
    throw UsageError(std::string(what) + " needs at least " + std::to_string(min_len) +
                     " integer arguments, got " + std::to_string(v.size()));
  }
  return IntSeq(v);
}

std::string seq_args(const json& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].dump();
  }
  return s;
}

std::string point_text(const json& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += v[i].dump();
  }
  return s;
}

std::string csv_value(const json& v) { return v.is_null() ? std::string() : v.dump(); }

void strip_timing(json& j) {
  if (j.is_object()) {
    j.erase("wall_time_ns");
    for (auto& [key, value] : j.items()) strip_timing(value);
  } else if (j.is_array()) {
    for (auto& e : j) strip_timing(e);
  }
}

void render_stats_human(std::ostream& out, const json& stats) {
  out << "  apps_created " << stats["apps_created"] << "  apps_forced " << stats["apps_forced"]
      << "  thunks_forced " << stats["thunks_forced"] << "  decrements " << stats["decrements"]
      << "  cache_hits " << stats["cache_hits"] << "  max_force_depth "
      << stats["max_force_depth"];
  if (stats.contains("wall_time_ns")) out << "  wall_ns " << stats["wall_time_ns"];
  out << '\n';
}

constexpr const char* kEvalCsvHeader =
    "input,strategy,outcome,value,apps_created,apps_forced,thunks_forced,decrements,cache_hits,"
    "max_force_depth,wall_ns";

void render_eval(std::ostream& out, OutputFormat format, const json& doc) {
  if (format == OutputFormat::kJson) {
    out << doc.dump(2) << '\n';
    return;
  }
  const json& stats = doc["stats"];
  if (format == OutputFormat::kCsv) {
    out << kEvalCsvHeader << '\n'
        << point_text(doc["input"]) << ',' << doc["strategy"].get<std::string>() << ','
        << doc["outcome"].get<std::string>() << ',' << csv_value(doc["value"]) << ','
        << stats["apps_created"] << ',' << stats["apps_forced"] << ',' << stats["thunks_forced"]
        << ',' << stats["decrements"] << ',' << stats["cache_hits"] << ','
        << stats["max_force_depth"] << ','
        << (stats.contains("wall_time_ns") ? stats["wall_time_ns"].dump() : std::string()) << '\n';
    return;
  }
  const std::string call = "t(" + seq_args(doc["input"]) + ")";
  const std::string outcome = doc["outcome"];
  const std::string strategy = doc["strategy"];
  if (outcome == "VALUE") {
    out << call << " = " << doc["value"] << "  [" << strategy << "]\n";
  } else if (outcome == "CYCLE") {
    out << call << " does not terminate under " << strategy << " evaluation  [CYCLE]\n  cycle: ";
    const json& path = doc["cycle"]["path"];
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (i) out << " -> ";
      out << '<' << seq_args(path[i]) << '>';
    }
    out << "  (repeats the call at stack depth " << doc["cycle"]["repeat_index"] << ")\n";
  } else {
    out << call << " exhausted the evaluation budget  [BUDGET, " << strategy << "]\n";
  }
  render_stats_human(out, stats);
}

int exit_for_outcome(const std::string& outcome) {
  if (outcome == "VALUE") return kExitOk;
  if (outcome == "CYCLE") return kExitMismatch;
  return kExitBudget;
}

// --- commands ---------------------------------------------------------------

struct EvalArgs {
  std::vector<Int> values;
  std::string strategy = "lazy";
};

int cmd_eval(const EvalArgs& a, const CliConfig& cfg, bool timing, std::ostream& out) {
  const IntSeq x = to_seq(a.values, 3, "eval");
  json doc{{"command", "eval"}, {"strategy", a.strategy}, {"input", to_json(x)},
           {"config", config_json(cfg)}};
  if (a.strategy == "lazy") {
    try {
      const LazyResult r = eval_lazy(x, LazyOptions{limits_of(cfg), {}});
      doc["outcome"] = "VALUE";
      doc["value"] = r.value;
      doc["stats"] = to_json(r.stats, timing);
    } catch (const BudgetExceeded& e) {
      doc["outcome"] = "BUDGET";
      doc["value"] = nullptr;
      doc["stats"] = to_json(e.stats(), timing);
      doc["detail"] = e.what();
    }
  } else if (a.strategy == "strict" || a.strategy == "strict-memo") {
    const EvalOutcome o = a.strategy == "strict" ? eval_strict(x, cfg.strict_budget)
                                                 : eval_strict_memo(x, cfg.strict_budget);
    doc.update(to_json(o, timing));
  } else {
    throw UsageError("unknown strategy '" + a.strategy + "' (expected lazy, strict or strict-memo)");
  }
  render_eval(out, cfg.format, doc);
  return exit_for_outcome(doc["outcome"]);
}

struct ClosedFormArgs {
  std::vector<Int> values;
  std::string variant = "characterization";
};

int cmd_closed_form(const ClosedFormArgs& a, const CliConfig& cfg, std::ostream& out) {
  const auto variant = parse_closed_form_variant(a.variant);
  if (!variant) {
    throw UsageError("unknown variant '" + a.variant +
                     "' (expected conjecture, characterization or mccarthy3)");
  }
  const std::size_t min_len = *variant == ClosedFormVariant::kConjectureRecursive ? 1 : 3;
  const IntSeq x = to_seq(a.values, min_len, "closed-form");
  if (*variant == ClosedFormVariant::kMcCarthy3 && x.size() != 3) {
    throw UsageError("variant mccarthy3 takes exactly 3 arguments");
  }
  const Int value = closed_form(x, *variant);
  const json doc{{"command", "closed-form"}, {"variant", std::string(to_string(*variant))},
                 {"input", to_json(x)}, {"value", value}, {"config", config_json(cfg)}};
  switch (cfg.format) {
    case OutputFormat::kJson: out << doc.dump(2) << '\n'; break;
    case OutputFormat::kCsv:
      out << "input,variant,value\n"
          << point_text(doc["input"]) << ',' << doc["variant"].get<std::string>() << ',' << value
          << '\n';
      break;
    case OutputFormat::kHuman:
      out << "f(" << seq_args(doc["input"]) << ") = " << value << "  ["
          << doc["variant"].get<std::string>() << "]\n";
      break;
  }
  return kExitOk;
}

struct SweepArgs {
  std::size_t n = 3;
  std::optional<Int> lo;
  std::optional<Int> hi;
  std::optional<std::uint64_t> random_count;
  std::vector<std::string> props;
  bool dependence = false;
  std::uint64_t trials = 1000;
};

std::vector<PropertyId> parse_props(const std::vector<std::string>& raw) {
  std::vector<PropertyId> ids;
  auto add = [&](PropertyId id) {
    if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
  };
  for (const std::string& item : raw) {
    std::stringstream ss(item);
    std::string name;
    while (std::getline(ss, name, ',')) {
      name = trim(name);
      if (name.empty()) continue;
      if (name == "all") {
        for (PropertyId id : all_properties()) add(id);
      } else if (name == "lemmas") {
        for (PropertyId id : lemma_suite_properties()) add(id);
      } else if (auto id = parse_property(name)) {
        add(*id);
      } else {
        throw UsageError("unknown property '" + name + "'");
      }
    }
  }
  return ids;
}

int cmd_sweep(const SweepArgs& a, const CliConfig& cfg, bool timing, std::ostream& out) {
  if (a.n < 3) throw UsageError("sweep requires --n >= 3");
  SweepReport report;
  if (a.dependence) {
    const DependenceConfig defaults;
    report = check_dependence(DependenceConfig{a.n, a.trials, cfg.seed, a.lo.value_or(defaults.lo),
                                               a.hi.value_or(defaults.hi), cfg.workers,
                                               limits_of(cfg)});
  } else {
    if (!a.lo || !a.hi) throw UsageError("sweep needs --lo and --hi (or --dependence)");
    SweepConfig sc;
    sc.n = a.n;
    sc.lo = *a.lo;
    sc.hi = *a.hi;
    sc.mode = a.random_count ? SweepMode::randomized(cfg.seed, *a.random_count)
                             : SweepMode::exhaustive();
    sc.grid_cap = cfg.grid_cap;
    sc.workers = cfg.workers;
    sc.limits = limits_of(cfg);
    const std::vector<PropertyId> props = parse_props(a.props);
    if (props.empty()) {
      report = sweep_equivalence(sc);
    } else if (props == std::vector<PropertyId>{PropertyId::kFRecurrence}) {
      report = check_recurrence(sc);
    } else {
      report = check_lemma_suite(sc, props);
    }
  }

  switch (cfg.format) {
    case OutputFormat::kJson: {
      const json doc{{"command", "sweep"}, {"config", config_json(cfg)},
                     {"report", to_json(report, timing)}};
      out << doc.dump(2) << '\n';
      break;
    }
    case OutputFormat::kCsv:
      out << "property,hits,mismatches\n";
      for (const auto& [id, hits] : report.hypothesis_hits) {
        auto it = report.mismatch_counts.find(id);
        out << to_string(id) << ',' << hits << ','
            << (it == report.mismatch_counts.end() ? 0 : it->second) << '\n';
      }
      break;
    case OutputFormat::kHuman: out << summary_table(report); break;
  }
  return report.passed() ? kExitOk : kExitMismatch;
}

struct GridArgs {
  std::size_t n = 4;
  Int lo = 0;
  Int hi = 0;
};

int cmd_find_divergent(const GridArgs& a, const CliConfig& cfg, std::ostream& out) {
  if (a.n < 3) throw UsageError("find-divergent requires --n >= 3");
  const std::vector<IntSeq> found =
      find_divergent(DivergenceSearch{a.n, a.lo, a.hi, cfg.strict_budget, cfg.grid_cap, cfg.workers});
  json witnesses = json::array();
  for (const IntSeq& x : found) witnesses.push_back(to_json(x));
  const json doc{{"command", "find-divergent"}, {"n", a.n},          {"lo", a.lo},
                 {"hi", a.hi},                  {"budget", cfg.strict_budget},
                 {"count", found.size()},       {"witnesses", witnesses},
                 {"config", config_json(cfg)}};
  switch (cfg.format) {
    case OutputFormat::kJson: out << doc.dump(2) << '\n'; break;
    case OutputFormat::kCsv:
      out << "point\n";
      for (const auto& w : witnesses) out << point_text(w) << '\n';
      break;
    case OutputFormat::kHuman:
      if (found.empty()) {
        out << "no strictly divergent points in [" << a.lo << ", " << a.hi << "]^" << a.n << '\n';
      } else {
        out << found.size() << " strictly divergent point(s) in [" << a.lo << ", " << a.hi << "]^"
            << a.n << ":\n";
        for (const auto& w : witnesses) out << "  " << point_text(w) << '\n';
      }
      break;
  }
  return kExitOk;
}

struct BenchArgs {
  GridArgs grid;
  std::vector<std::string> strategies{"lazy", "strict", "strict-memo"};
};

constexpr const char* kBenchCsvHeader =
    "point,strategy,outcome,value,apps_created,apps_forced,max_force_depth,wall_ns";

int cmd_bench(const BenchArgs& a, const CliConfig& cfg, bool timing, std::ostream& out) {
  if (a.grid.n < 3) throw UsageError("bench requires --n >= 3");
  for (const std::string& s : a.strategies) {
    if (s != "lazy" && s != "strict" && s != "strict-memo") {
      throw UsageError("unknown strategy '" + s + "'");
    }
  }
  const Grid grid{a.grid.n, a.grid.lo, a.grid.hi};
  grid.validate(cfg.grid_cap);

  struct Totals {
    std::uint64_t value = 0, cycle = 0, budget = 0;
    std::uint64_t apps_created = 0, apps_forced = 0, max_depth = 0;
    std::int64_t wall = 0;
  };
  std::vector<Totals> totals(a.strategies.size());
  json rows = json::array();

  for (std::uint64_t i = 0; i < grid.size(); ++i) {
    const IntSeq x = grid.point(i);
    for (std::size_t s = 0; s < a.strategies.size(); ++s) {
      const std::string& strategy = a.strategies[s];
      std::string outcome;
      std::optional<Int> value;
      EvalStats stats;
      if (strategy == "lazy") {
        try {
          const LazyResult r = eval_lazy(x, LazyOptions{limits_of(cfg), {}});
          outcome = "VALUE";
          value = r.value;
          stats = r.stats;
        } catch (const BudgetExceeded& e) {
          outcome = "BUDGET";
          stats = e.stats();
        }
      } else {
        const EvalOutcome o = strategy == "strict" ? eval_strict(x, cfg.strict_budget)
                                                   : eval_strict_memo(x, cfg.strict_budget);
        outcome = std::string(to_string(o.kind));
        if (o.is_value()) value = o.value;
        stats = o.stats;
      }
      Totals& t = totals[s];
      (outcome == "VALUE" ? t.value : outcome == "CYCLE" ? t.cycle : t.budget) += 1;
      t.apps_created += stats.apps_created;
      t.apps_forced += stats.apps_forced;
      t.max_depth = std::max(t.max_depth, stats.max_force_depth);
      t.wall += stats.wall_time.count();
      json row{{"point", to_json(x)},
               {"strategy", strategy},
               {"outcome", outcome},
               {"value", value ? json(*value) : json(nullptr)},
               {"apps_created", stats.apps_created},
               {"apps_forced", stats.apps_forced},
               {"max_force_depth", stats.max_force_depth}};
      if (timing) row["wall_ns"] = stats.wall_time.count();
      rows.push_back(std::move(row));
    }
  }

  json aggregates = json::array();
  for (std::size_t s = 0; s < a.strategies.size(); ++s) {
    const Totals& t = totals[s];
    json agg{{"strategy", a.strategies[s]}, {"value", t.value},
             {"cycle", t.cycle},            {"budget", t.budget},
             {"apps_created", t.apps_created}, {"apps_forced", t.apps_forced},
             {"max_force_depth", t.max_depth}};
    if (timing) agg["wall_ns"] = t.wall;
    aggregates.push_back(std::move(agg));
  }

  if (cfg.format == OutputFormat::kJson) {
    const json doc{{"command", "bench"}, {"n", a.grid.n},          {"lo", a.grid.lo},
                   {"hi", a.grid.hi},    {"rows", rows},          {"aggregates", aggregates},
                   {"config", config_json(cfg)}};
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  // Human and csv both get the comma-separated table.
  out << kBenchCsvHeader << '\n';
  auto wall = [&](const json& j) { return j.contains("wall_ns") ? j["wall_ns"].dump() : ""; };
  for (const json& r : rows) {
    out << point_text(r["point"]) << ',' << r["strategy"].get<std::string>() << ','
        << r["outcome"].get<std::string>() << ',' << csv_value(r["value"]) << ','
        << r["apps_created"] << ',' << r["apps_forced"] << ',' << r["max_force_depth"] << ','
        << wall(r) << '\n';
  }
  for (const json& g : aggregates) {
    out << "ALL," << g["strategy"].get<std::string>() << ",VALUE=" << g["value"]
        << " CYCLE=" << g["cycle"] << " BUDGET=" << g["budget"] << ",," << g["apps_created"]
        << ',' << g["apps_forced"] << ',' << g["max_force_depth"] << ',' << wall(g) << '\n';
  }
  return kExitOk;
}

int cmd_trace(const std::vector<Int>& values, const CliConfig& cfg, std::ostream& out) {
  const IntSeq x = to_seq(values, 3, "trace");
  LazyOptions options{limits_of(cfg), [&](const TraceRecord& r) { out << to_json(r).dump() << '\n'; }};
  try {
    eval_lazy(x, options);
  } catch (const BudgetExceeded&) {
    return kExitBudget;
  }
  return kExitOk;
}

}  // namespace

CliConfig parse_config(const std::string& text, CliConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "lazy_max_apps") {
      base.lazy_max_apps = parse_u64(key, value);
    } else if (key == "lazy_max_depth") {
      base.lazy_max_depth = parse_u64(key, value);
    } else if (key == "strict_budget") {
      base.strict_budget = parse_u64(key, value);
    } else if (key == "grid_cap") {
      base.grid_cap = parse_u64(key, value);
    } else if (key == "format") {
      base.format = parse_format(value);
    } else if (key == "workers") {
      base.workers = static_cast<unsigned>(parse_u64(key, value));
    } else if (key == "seed") {
      base.seed = parse_u64(key, value);
    } else {
      throw UsageError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  return base;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate and verify the n-dimensional tarai function", "tarai"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides o;
  app.add_option("--config", o.config_path,
                 std::string("Config file (default: $") + kConfigEnv + ")");
  app.add_option("--format", o.format, "Output format: human, json or csv");
  app.add_option("--max-apps", o.max_apps, "Lazy budget: created applications");
  app.add_option("--max-depth", o.max_depth, "Lazy budget: forcing depth");
  app.add_option("--budget", o.budget, "Strict budget: applications");
  app.add_option("--grid-cap", o.grid_cap, "Largest grid a sweep may enumerate");
  app.add_option("--workers", o.workers, "Worker threads (0 = all cores)");
  app.add_option("--seed", o.seed, "Seed for randomized sweeps");
  app.add_flag("--no-timing", o.no_timing, "Omit wall-time fields");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate t(x) under a strategy");
  eval->add_option("--strategy", eval_args.strategy, "lazy, strict or strict-memo")
      ->capture_default_str();
  eval->add_option("args", eval_args.values, "Integer arguments (at least 3)")->required();

  ClosedFormArgs cf_args;
  auto* cf = app.add_subcommand("closed-form", "Evaluate the closed form f(x)");
  cf->add_option("--variant", cf_args.variant, "conjecture, characterization or mccarthy3")
      ->capture_default_str();
  cf->add_option("args", cf_args.values, "Integer arguments")->required();

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Check properties over a grid");
  sweep->add_option("--n", sweep_args.n, "Arity")->required();
  sweep->add_option("--lo", sweep_args.lo, "Lower bound of each coordinate (dependence: -10)");
  sweep->add_option("--hi", sweep_args.hi, "Upper bound of each coordinate (dependence: 10)");
  sweep->add_option("--random", sweep_args.random_count, "Sample this many seeded random points");
  sweep->add_option("--props", sweep_args.props,
                    "Properties (comma-separated; 'all', 'lemmas'); default: equivalence");
  sweep->add_flag("--dependence", sweep_args.dependence, "Run the randomized X_k dependence check");
  sweep->add_option("--trials", sweep_args.trials, "Trials for --dependence")->capture_default_str();

  GridArgs div_args;
  auto* div = app.add_subcommand("find-divergent", "List grid points where strict evaluation diverges");
  div->add_option("--n", div_args.n, "Arity")->required();
  div->add_option("--lo", div_args.lo, "Lower bound")->required();
  div->add_option("--hi", div_args.hi, "Upper bound")->required();

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Compare strategies over a grid (CSV table)");
  bench->add_option("--n", bench_args.grid.n, "Arity")->required();
  bench->add_option("--lo", bench_args.grid.lo, "Lower bound")->required();
  bench->add_option("--hi", bench_args.grid.hi, "Upper bound")->required();
  bench->add_option("--strategies", bench_args.strategies, "Strategies to run")
      ->delimiter(',')
      ->capture_default_str();

  std::vector<Int> trace_values;
  auto* trace = app.add_subcommand("trace", "Emit one JSON line per forced lazy application");
  trace->add_option("args", trace_values, "Integer arguments (at least 3)")->required();

  std::vector<std::string> argv_storage{"tarai"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const CliConfig cfg = resolve(o);
    const bool timing = !o.no_timing;
    if (eval->parsed()) return cmd_eval(eval_args, cfg, timing, out);
    if (cf->parsed()) return cmd_closed_form(cf_args, cfg, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, cfg, timing, out);
    if (div->parsed()) return cmd_find_divergent(div_args, cfg, out);
    if (bench->parsed()) return cmd_bench(bench_args, cfg, timing, out);
    if (trace->parsed()) return cmd_trace(trace_values, cfg, out);
  } catch (const std::invalid_argument& e) {  // UsageError and ArgumentError
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace tarai::cli
