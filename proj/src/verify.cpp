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

#include "tarai/verify.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <iomanip>
#include <sstream>
#include <utility>

#include "tarai/closed_form.hpp"

namespace tarai {

namespace {

constexpr std::array<std::pair<PropertyId, std::string_view>, 17> kPropertyNames{{
    {PropertyId::kThmTerminationBound, "thm_termination_bound"},
    {PropertyId::kLemmaStarKDependence, "lemma_star_k_dependence"},
    {PropertyId::kLemmaStarKBound, "lemma_star_k_bound"},
    {PropertyId::kMainTEqF, "main_t_eq_f"},
    {PropertyId::kFRecurrence, "f_recurrence"},
    {PropertyId::kLemmaGbClosed, "lemma_gb_closed"},
    {PropertyId::kCharLemma, "char_lemma"},
    {PropertyId::kLemmaI, "lemma_I"},
    {PropertyId::kLemmaA, "lemma_A"},
    {PropertyId::kLemmaE, "lemma_E"},
    {PropertyId::kLemmaH, "lemma_H"},
    {PropertyId::kLemmaB, "lemma_B"},
    {PropertyId::kLemmaC, "lemma_C"},
    {PropertyId::kLemmaD, "lemma_D"},
    {PropertyId::kLemmaF, "lemma_F"},
    {PropertyId::kLemmaG, "lemma_G"},
    {PropertyId::kMcCarthy3Agreement, "mccarthy3_agreement"},
}};

using PropertySet = std::bitset<kPropertyNames.size()>;

PropertySet to_set(std::span<const PropertyId> ids) {
  PropertySet set;
  for (PropertyId id : ids) set.set(static_cast<std::size_t>(id));
  return set;
}

// Per-chunk accumulator; merged in chunk order.
struct Partial {
  std::uint64_t points = 0;
  std::uint64_t mismatch_count = 0;
  std::vector<Mismatch> mismatches;
  std::map<PropertyId, std::uint64_t> mismatch_counts;
  std::map<PropertyId, std::uint64_t> hits;
  AppsAggregate apps;

  void hit(PropertyId id) { ++hits[id]; }

  void fail(PropertyId id, const IntSeq& x, std::optional<Int> expected, std::optional<Int> actual,
            std::string detail = {}) {
    ++mismatch_count;
    ++mismatch_counts[id];
    if (mismatches.size() < kMaxRecordedMismatches) {
      mismatches.push_back(Mismatch{id, x, expected, actual, std::move(detail)});
    }
  }

  void expect_eq(PropertyId id, const IntSeq& x, Int expected, Int actual,
                 std::string detail = {}) {
    if (expected != actual) fail(id, x, expected, actual, std::move(detail));
  }
};

// Runs eval_lazy, turning budget trips and bound violations into mismatches
// of the termination property.
std::optional<Int> try_lazy(const IntSeq& x, const LazyLimits& limits, Partial& out) {
  try {
    LazyResult r = eval_lazy(x, LazyOptions{limits, {}});
    out.apps.add(r.stats.apps_created);
    return r.value;
  } catch (const BudgetExceeded& e) {
    out.fail(PropertyId::kThmTerminationBound, x, std::nullopt, std::nullopt,
             std::string("budget exceeded: ") + e.what());
  } catch (const std::logic_error& e) {
    out.fail(PropertyId::kThmTerminationBound, x, x.max(), std::nullopt, e.what());
  }
  return std::nullopt;
}

IntSeq with_tail(const IntSeq& x, std::size_t k, Int fill) {
  std::vector<Int> v = x.vector();
  std::fill(v.begin() + static_cast<std::ptrdiff_t>(k), v.end(), fill);
  return IntSeq(std::move(v));
}

// Evaluates every selected property at one point.
class PointCheck {
 public:
  PointCheck(const IntSeq& x, const SweepConfig& cfg, Partial& out)
      : x_(x), cfg_(cfg), out_(out), n_(x.size()), k_(k_index(x)), l_(l_index(x, k_)),
        f_(f_char(x)) {}

  void run(const PropertySet& which) {
    auto on = [&](PropertyId id) { return which.test(static_cast<std::size_t>(id)); };
    if (on(PropertyId::kMainTEqF)) main_t_eq_f();
    if (on(PropertyId::kThmTerminationBound)) termination_bound();
    if (on(PropertyId::kCharLemma)) char_lemma();
    if (on(PropertyId::kMcCarthy3Agreement)) mccarthy3_agreement();
    if (on(PropertyId::kLemmaStarKBound)) star_k_bound();
    if (on(PropertyId::kLemmaStarKDependence)) star_k_dependence();
    if (on(PropertyId::kFRecurrence)) f_recurrence();
    if (on(PropertyId::kLemmaGbClosed)) gb_closed();
    if (on(PropertyId::kLemmaI)) lemma_I();
    if (on(PropertyId::kLemmaA)) lemma_A();
    if (on(PropertyId::kLemmaE)) lemma_E();
    if (on(PropertyId::kLemmaH)) lemma_H();
    if (on(PropertyId::kLemmaB)) lemma_B();
    if (on(PropertyId::kLemmaC)) lemma_C();
    if (on(PropertyId::kLemmaD)) lemma_D();
    if (on(PropertyId::kLemmaF)) lemma_F();
    if (on(PropertyId::kLemmaG)) lemma_G();
  }

 private:
  using Signed = std::int64_t;

  Int x(std::size_t i) const { return x_(i); }
  Signed k() const { return static_cast<Signed>(k_.value); }
  Signed l() const { return static_cast<Signed>(l_.value); }
  bool k_below_n() const { return k_.value < n_; }
  Int x_k1() const { return x(k_.value + 1); }

  const std::optional<Int>& lazy() {
    if (!lazy_evaluated_) {
      lazy_ = try_lazy(x_, cfg_.limits, out_);
      lazy_evaluated_ = true;
    }
    return lazy_;
  }

  void main_t_eq_f() {
    out_.hit(PropertyId::kMainTEqF);
    if (const auto& t = lazy()) {
      out_.expect_eq(PropertyId::kMainTEqF, x_, f_, *t, "eval_lazy vs f_char");
    }
  }

  void termination_bound() {
    out_.hit(PropertyId::kThmTerminationBound);
    if (const auto& t = lazy(); t && *t > x_.max()) {
      out_.fail(PropertyId::kThmTerminationBound, x_, x_.max(), *t, "value above max(x)");
    }
  }

  void char_lemma() {
    out_.hit(PropertyId::kCharLemma);
    out_.expect_eq(PropertyId::kCharLemma, x_, f_conjecture(x_), f_, "f_conjecture vs f_char");
  }

  void mccarthy3_agreement() {
    if (n_ != 3) return;
    out_.hit(PropertyId::kMcCarthy3Agreement);
    const Int m = mccarthy3(x_);
    out_.expect_eq(PropertyId::kMcCarthy3Agreement, x_, m, f_, "mccarthy3 vs f_char");
    if (const auto& t = lazy()) {
      out_.expect_eq(PropertyId::kMcCarthy3Agreement, x_, m, *t, "mccarthy3 vs eval_lazy");
    }
  }

  void star_k_bound() {
    for (std::size_t kk = 2; kk <= n_; ++kk) {
      if (!in_X_k(x_, kk)) continue;
      out_.hit(PropertyId::kLemmaStarKBound);
      if (const auto& t = lazy(); t && *t > x(kk)) {
        out_.fail(PropertyId::kLemmaStarKBound, x_, x(kk), *t,
                  "value above x(" + std::to_string(kk) + ")");
      }
    }
  }

  // Over a grid, "depends only on x(1..k)" is equivalent to every point
  // agreeing with its canonical representative whose tail is all `lo`.
  void star_k_dependence() {
    for (std::size_t kk = 2; kk < n_; ++kk) {
      if (!in_X_k(x_, kk)) continue;
      out_.hit(PropertyId::kLemmaStarKDependence);
      const IntSeq canonical = with_tail(x_, kk, cfg_.lo);
      if (canonical == x_) continue;
      const auto& t = lazy();
      const auto t_canonical = try_lazy(canonical, cfg_.limits, out_);
      if (t && t_canonical && *t != *t_canonical) {
        out_.fail(PropertyId::kLemmaStarKDependence, x_, *t_canonical, *t,
                  "k=" + std::to_string(kk) + ", tail replaced: " + canonical.to_string());
      }
    }
  }

  void f_recurrence() {
    if (x(1) <= x(2)) return;
    out_.hit(PropertyId::kFRecurrence);
    std::vector<Int> y(n_);
    for (std::size_t i = 0; i < n_; ++i) y[i] = f_char(rotate_decrement(x_, i));
    const IntSeq ys(std::move(y));
    out_.expect_eq(PropertyId::kFRecurrence, x_, f_, f_char(ys), "y = " + ys.to_string());
  }

  void gb_closed() {
    if (k_.value != n_ - 1) return;
    out_.hit(PropertyId::kLemmaGbClosed);
    out_.expect_eq(PropertyId::kLemmaGbClosed, x_, std::max(x(l_.value + 2), x_k1()), g_b(x_),
                   "g_b vs max(x(l+2), x(k+1))");
  }

  void lemma_I() {
    if (k() > 2) return;
    out_.hit(PropertyId::kLemmaI);
    out_.expect_eq(PropertyId::kLemmaI, x_, x_k1(), f_);
  }

  void lemma_A() {
    if (!k_below_n()) return;
    bool any = false;
    for (std::size_t m = 1; m <= l_.value + 2 && m <= n_; ++m) any = any || x(m) <= x_k1();
    if (!any) return;
    out_.hit(PropertyId::kLemmaA);
    out_.expect_eq(PropertyId::kLemmaA, x_, x_k1(), f_);
  }

  void lemma_E() {
    if (!k_below_n() || x(3) > x_k1()) return;
    out_.hit(PropertyId::kLemmaE);
    out_.expect_eq(PropertyId::kLemmaE, x_, x_k1(), f_);
  }

  void lemma_H() {
    if (!k_below_n() || x(2) > x_k1()) return;
    out_.hit(PropertyId::kLemmaH);
    out_.expect_eq(PropertyId::kLemmaH, x_, x_k1(), f_);
  }

  void lemma_B() {
    if (!k_below_n() || l() < k() - 2) return;
    out_.hit(PropertyId::kLemmaB);
    out_.expect_eq(PropertyId::kLemmaB, x_, x_k1(), f_);
  }

  void lemma_C() {
    if (x(2) > x(3)) return;
    out_.hit(PropertyId::kLemmaC);
    if (f_ != x(2) && f_ != x(3)) {
      out_.fail(PropertyId::kLemmaC, x_, std::nullopt, f_, "f not in {x(2), x(3)}");
    } else if (x(2) == x(3)) {
      out_.expect_eq(PropertyId::kLemmaC, x_, x(2), f_, "x(2) = x(3)");
    }
  }

  void lemma_D() {
    for (std::size_t m = 1; m + 1 <= n_; ++m) {
      const auto sm = static_cast<Signed>(m);
      if (x(m) != x(m + 1) || k() < sm - 1 || l() < sm - 2) continue;
      out_.hit(PropertyId::kLemmaD);
      out_.expect_eq(PropertyId::kLemmaD, x_, x(m), f_, "m=" + std::to_string(m));
    }
  }

  void lemma_F() {
    for (std::size_t m = 1; m + 2 <= n_; ++m) {
      const auto sm = static_cast<Signed>(m);
      if (k() < sm - 1 || l() < sm - 2 || x(m) != x(m + 2) || x(m) < x(m + 1)) continue;
      out_.hit(PropertyId::kLemmaF);
      out_.expect_eq(PropertyId::kLemmaF, x_, x(m), f_, "m=" + std::to_string(m));
    }
  }

  void lemma_G() {
    if (k() < 2 || !k_below_n()) return;
    out_.hit(PropertyId::kLemmaG);
    const Int bound = std::max(x(3), x_k1());
    if (f_ > bound) out_.fail(PropertyId::kLemmaG, x_, bound, f_, "f above max(x(3), x(k+1))");
  }

  const IntSeq& x_;
  const SweepConfig& cfg_;
  Partial& out_;
  std::size_t n_;
  KIndex k_;
  LIndex l_;
  Int f_;
  bool lazy_evaluated_ = false;
  std::optional<Int> lazy_;
};

SweepReport merge(std::string name, std::size_t n, Int lo, Int hi, SweepMode mode,
                  std::vector<Partial>& partials) {
  SweepReport report;
  report.sweep = std::move(name);
  report.n = n;
  report.lo = lo;
  report.hi = hi;
  report.mode = mode;
  for (Partial& p : partials) {
    report.points_checked += p.points;
    report.mismatch_count += p.mismatch_count;
    for (Mismatch& m : p.mismatches) {
      if (report.mismatches.size() >= kMaxRecordedMismatches) break;
      report.mismatches.push_back(std::move(m));
    }
    for (const auto& [id, count] : p.hits) report.hypothesis_hits[id] += count;
    for (const auto& [id, count] : p.mismatch_counts) report.mismatch_counts[id] += count;
    report.apps_created.merge(p.apps);
  }
  return report;
}

template <class PointFn>
SweepReport run_sweep(std::string name, const SweepConfig& cfg, PointFn&& fn) {
  if (cfg.n < 3) throw ArgumentError("sweeps require n >= 3");
  const auto start = std::chrono::steady_clock::now();
  const Grid grid{cfg.n, cfg.lo, cfg.hi};

  std::vector<IntSeq> sampled;
  std::uint64_t total = 0;
  if (cfg.mode.kind == SweepMode::Kind::kExhaustive) {
    grid.validate(cfg.grid_cap);
    total = grid.size();
  } else {
    if (cfg.lo > cfg.hi) throw ArgumentError("empty range: lo > hi");
    if (cfg.mode.count > cfg.grid_cap) {
      throw ArgumentError("sample count " + std::to_string(cfg.mode.count) +
                          " above the cap of " + std::to_string(cfg.grid_cap));
    }
    SeededRng rng(cfg.mode.seed);
    sampled.reserve(cfg.mode.count);
    for (std::uint64_t i = 0; i < cfg.mode.count; ++i) {
      std::vector<Int> v(cfg.n);
      for (Int& e : v) e = rng.uniform(cfg.lo, cfg.hi);
      sampled.emplace_back(std::move(v));
    }
    total = sampled.size();
  }

  std::vector<Partial> partials(chunk_count(total, cfg.workers));
  for_each_chunk(total, cfg.workers, [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
    Partial& out = partials[chunk];
    for (std::uint64_t i = begin; i < end; ++i) {
      if (sampled.empty()) {
        fn(grid.point(i), out);
      } else {
        fn(sampled[i], out);
      }
      ++out.points;
    }
  });

  SweepReport report = merge(std::move(name), cfg.n, cfg.lo, cfg.hi, cfg.mode, partials);
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

SweepReport run_properties(std::string name, const SweepConfig& cfg, const PropertySet& which) {
  SweepReport report = run_sweep(std::move(name), cfg, [&](const IntSeq& x, Partial& out) {
    PointCheck(x, cfg, out).run(which);
  });
  // Selected properties report zero hits explicitly.
  for (const auto& [id, pname] : kPropertyNames) {
    if (which.test(static_cast<std::size_t>(id))) report.hypothesis_hits.try_emplace(id, 0);
  }
  return report;
}

}  // namespace

std::string_view to_string(PropertyId id) {
  for (const auto& [pid, name] : kPropertyNames) {
    if (pid == id) return name;
  }
  return "?";
}

std::optional<PropertyId> parse_property(std::string_view name) {
  for (const auto& [pid, pname] : kPropertyNames) {
    if (pname == name) return pid;
  }
  return std::nullopt;
}

const std::vector<PropertyId>& all_properties() {
  static const std::vector<PropertyId> all = [] {
    std::vector<PropertyId> v;
    for (const auto& [pid, name] : kPropertyNames) v.push_back(pid);
    return v;
  }();
  return all;
}

const std::vector<PropertyId>& lemma_suite_properties() {
  static const std::vector<PropertyId> lemmas{
      PropertyId::kLemmaI, PropertyId::kLemmaA, PropertyId::kLemmaE,
      PropertyId::kLemmaH, PropertyId::kLemmaB, PropertyId::kLemmaC,
      PropertyId::kLemmaD, PropertyId::kLemmaF, PropertyId::kLemmaG,
  };
  return lemmas;
}

void AppsAggregate::add(std::uint64_t apps) {
  min = count ? std::min(min, apps) : apps;
  max = count ? std::max(max, apps) : apps;
  sum += apps;
  ++count;
}

void AppsAggregate::merge(const AppsAggregate& other) {
  if (other.count == 0) return;
  min = count ? std::min(min, other.min) : other.min;
  max = count ? std::max(max, other.max) : other.max;
  sum += other.sum;
  count += other.count;
}

std::uint64_t SweepReport::hits(PropertyId id) const {
  auto it = hypothesis_hits.find(id);
  return it == hypothesis_hits.end() ? 0 : it->second;
}

SweepReport sweep_equivalence(const SweepConfig& config) {
  const std::vector<PropertyId> props{PropertyId::kMainTEqF, PropertyId::kCharLemma,
                                      PropertyId::kThmTerminationBound,
                                      PropertyId::kMcCarthy3Agreement};
  return run_properties("equivalence", config, to_set(props));
}

SweepReport check_recurrence(const SweepConfig& config) {
  const std::vector<PropertyId> props{PropertyId::kFRecurrence};
  return run_properties("recurrence", config, to_set(props));
}

SweepReport check_lemma_suite(const SweepConfig& config, std::span<const PropertyId> which) {
  return run_properties("lemma_suite", config, to_set(which));
}

SweepReport check_dependence(const DependenceConfig& config) {
  if (config.n < 3) throw ArgumentError("check_dependence requires n >= 3");
  if (config.lo > config.hi) throw ArgumentError("empty range: lo > hi");
  const auto start = std::chrono::steady_clock::now();

  struct Trial {
    std::size_t k;
    IntSeq x;
    IntSeq perturbed;
  };
  // Sampling is sequential so the trials depend only on the seed.
  SeededRng rng(config.seed);
  std::vector<Trial> trials;
  trials.reserve(config.trials);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    const auto k = static_cast<std::size_t>(rng.uniform(2, static_cast<Int>(config.n)));
    std::vector<Int> v(config.n);
    v[k - 1] = rng.uniform(config.lo, config.hi);
    for (std::size_t i = 0; i + 1 < k; ++i) v[i] = rng.uniform(config.lo, v[k - 1]);
    for (std::size_t i = k; i < config.n; ++i) v[i] = rng.uniform(config.lo, config.hi);
    std::vector<Int> w = v;
    for (std::size_t i = k; i < config.n; ++i) w[i] = rng.uniform(config.lo, config.hi);
    trials.push_back(Trial{k, IntSeq(std::move(v)), IntSeq(std::move(w))});
  }

  std::vector<Partial> partials(chunk_count(trials.size(), config.workers));
  for_each_chunk(trials.size(), config.workers,
                 [&](std::size_t chunk, std::uint64_t begin, std::uint64_t end) {
                   Partial& out = partials[chunk];
                   for (std::uint64_t i = begin; i < end; ++i) {
                     const Trial& trial = trials[i];
                     ++out.points;
                     if (!in_X_k(trial.x, trial.k)) {
                       out.fail(PropertyId::kLemmaStarKDependence, trial.x, std::nullopt,
                                std::nullopt, "sampler produced a point outside X_k");
                       continue;
                     }
                     out.hit(PropertyId::kLemmaStarKDependence);
                     out.hit(PropertyId::kLemmaStarKBound);
                     const auto t = try_lazy(trial.x, config.limits, out);
                     const auto t2 = try_lazy(trial.perturbed, config.limits, out);
                     const std::string k_note = "k=" + std::to_string(trial.k);
                     if (t && t2 && *t != *t2) {
                       out.fail(PropertyId::kLemmaStarKDependence, trial.x, *t, *t2,
                                k_note + ", perturbed: " + trial.perturbed.to_string());
                     }
                     const Int bound = trial.x(trial.k);
                     if (t && *t > bound) {
                       out.fail(PropertyId::kLemmaStarKBound, trial.x, bound, *t, k_note);
                     }
                     if (t2 && *t2 > bound) {
                       out.fail(PropertyId::kLemmaStarKBound, trial.perturbed, bound, *t2, k_note);
                     }
                   }
                 });

  SweepReport report = merge("dependence", config.n, config.lo, config.hi,
                             SweepMode::randomized(config.seed, config.trials), partials);
  report.wall_time = std::chrono::duration_cast<std::chrono::nanoseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

std::string summary_table(const SweepReport& report) {
  std::ostringstream os;
  os << "sweep " << report.sweep << "  n=" << report.n << "  range=[" << report.lo << ", "
     << report.hi << "]  mode=";
  if (report.mode.kind == SweepMode::Kind::kExhaustive) {
    os << "exhaustive";
  } else {
    os << "randomized(seed=" << report.mode.seed << ", count=" << report.mode.count << ")";
  }
  os << '\n';
  os << "points checked: " << report.points_checked << "   mismatches: " << report.mismatch_count
     << "   result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  if (report.apps_created.count) {
    os << "apps_created: min " << report.apps_created.min << "  max " << report.apps_created.max
       << "  mean " << std::fixed << std::setprecision(2) << report.apps_created.mean() << '\n';
  }
  if (!report.hypothesis_hits.empty()) {
    os << std::left << std::setw(26) << "property" << std::right << std::setw(12) << "hits" << '\n';
    for (const auto& [id, count] : report.hypothesis_hits) {
      os << std::left << std::setw(26) << to_string(id) << std::right << std::setw(12) << count
         << '\n';
    }
  }
  for (const Mismatch& m : report.mismatches) {
    os << "MISMATCH " << to_string(m.property) << " at " << m.input << ": expected ";
    if (m.expected) os << *m.expected; else os << '-';
    os << ", actual ";
    if (m.actual) os << *m.actual; else os << '-';
    if (!m.detail.empty()) os << " (" << m.detail << ')';
    os << '\n';
  }
  return os.str();
}

}  // namespace tarai
