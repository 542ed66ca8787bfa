// Copyright 2026 The ccc Authors.
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

// End-to-end drivers: consistent form, dangerous pairs, LP, auxiliary graph
// and pivoting for the general, friendly-only and hostile-only variants.

#ifndef CCC_SOLVE_HPP_
#define CCC_SOLVE_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ccc/aux_graph.hpp"
#include "ccc/common.hpp"
#include "ccc/covering_solver.hpp"
#include "ccc/dangerous.hpp"
#include "ccc/heap_constraints.hpp"
#include "ccc/instance.hpp"
#include "ccc/lp.hpp"
#include "ccc/pivot.hpp"

namespace ccc {

enum class Variant { kAuto, kConstrained, kFriendly, kHostile };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::kAuto: return "auto";
    case Variant::kConstrained: return "constrained";
    case Variant::kFriendly: return "friendly";
    case Variant::kHostile: return "hostile";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "auto") return Variant::kAuto;
  if (s == "constrained") return Variant::kConstrained;
  if (s == "friendly") return Variant::kFriendly;
  if (s == "hostile") return Variant::kHostile;
  throw std::invalid_argument("unknown variant: " + std::string(s));
}

// Friendly-only when there are no hostile pairs, hostile-only when there are
// no friendly pairs, the general algorithm otherwise.
inline Variant resolve_variant(const SignedInstance& inst, Variant v) {
  if (v != Variant::kAuto) return v;
  if (inst.hostile().empty()) return Variant::kFriendly;
  if (inst.friendly().empty()) return Variant::kHostile;
  return Variant::kConstrained;
}

struct SolveOptions {
  double epsilon = 0.3;
  PivotStrategy pivot = PivotStrategy::kDeterministic;
  std::uint64_t seed = 0;
  // Invoked before every deterministic pivot choice.
  TriangleObserver observer;
};

struct StageTimings {
  double consistent_form = 0.0;
  double dangerous = 0.0;
  double heaps = 0.0;
  double lp_build = 0.0;
  double lp_solve = 0.0;
  double aux_graph = 0.0;
  double pivot = 0.0;

  double total() const { return consistent_form + dangerous + heaps + lp_build + lp_solve + aux_graph + pivot; }
};

// Intermediate results shared by every pivot run on the same instance.
struct SolveArtifacts {
  Variant variant = Variant::kConstrained;
  SupernodeStructure supernodes;
  ConsistentForm consistent;
  DangerousPairing dangerous;
  HeapConstraintSet heaps;
  std::optional<CoveringProgram> program;
  std::optional<LpSolution> lp;
  AuxGraph g_hat;
  std::optional<EdgeBudgets> budgets;
  StageTimings timings;
};

struct SolveReport {
  Variant variant = Variant::kConstrained;
  double epsilon = 0.0;
  PivotStrategy pivot = PivotStrategy::kDeterministic;
  std::uint64_t seed = 0;
  Clustering clustering;
  std::int64_t cost = 0;           // on the consistent-form instance
  std::int64_t cost_original = 0;  // on the input instance
  std::int64_t forced_mistakes = 0;
  std::optional<double> lp_objective;
  std::optional<double> lp_lower_bound;
  // cost / lp_objective for deterministic runs.
  std::optional<double> certified_ratio;
  PivotTrace trace;
  StageTimings timings;
  std::shared_ptr<const SolveArtifacts> artifacts;
};

namespace detail {

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double s = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

inline void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
}

inline void solve_lp(SolveArtifacts& a, CoveringProgram prog, const SolveOptions& opts, Stopwatch& clock) {
  a.timings.lp_build = clock.lap();
  LpSolution sol = solve_covering(prog, opts.epsilon / 3.0, opts.seed);
  if (!check_feasibility(prog, sol).empty()) throw std::logic_error("LP solution is infeasible");
  attach_edge_values(a.consistent.instance, a.supernodes, prog, sol);
  a.program = std::move(prog);
  a.lp = std::move(sol);
  a.timings.lp_solve = clock.lap();
}

inline double certified_ratio(std::int64_t cost, double lp) {
  if (lp > 0.0) return static_cast<double>(cost) / lp;
  if (cost == 0) return 1.0;
  throw std::logic_error("positive cost against a zero LP bound");
}

}  // namespace detail

// Runs every stage up to and including the auxiliary graph and budgets. The
// LP is skipped only for hostile-only instances with random pivots.
inline std::shared_ptr<SolveArtifacts> prepare(const SignedInstance& inst, Variant variant,
                                               const SolveOptions& opts) {
  detail::check_epsilon(opts.epsilon);
  variant = resolve_variant(inst, variant);
  if (variant == Variant::kFriendly && !inst.hostile().empty()) {
    throw std::invalid_argument("friendly variant requires no hostile pairs");
  }
  if (variant == Variant::kHostile && !inst.friendly().empty()) {
    throw std::invalid_argument("hostile variant requires no friendly pairs");
  }
  auto a = std::make_shared<SolveArtifacts>();
  a->variant = variant;
  detail::Stopwatch clock;
  a->supernodes = compute_supernodes(inst);
  a->consistent = to_consistent_form(inst, a->supernodes);
  a->timings.consistent_form = clock.lap();
  const SignedInstance& g = a->consistent.instance;
  const SupernodeStructure& sn = a->supernodes;
  LpBuildOptions build;
  build.fix_zero_cost = true;

  switch (variant) {
    case Variant::kConstrained: {
      a->dangerous = compute_dangerous_pairs(g, sn);
      a->timings.dangerous = clock.lap();
      a->heaps = find_heaps(g, sn, a->dangerous);
      a->timings.heaps = clock.lap();
      detail::solve_lp(*a, build_constrained_lp(g, sn, a->dangerous, a->heaps, build), opts, clock);
      a->g_hat = build_aux_constrained(g, sn, a->dangerous, *a->program, *a->lp);
      break;
    }
    case Variant::kFriendly: {
      a->dangerous = DangerousPairing(g.num_nodes());
      detail::solve_lp(*a, build_friendly_lp(g, sn, build), opts, clock);
      a->g_hat = build_aux_friendly(g, sn, *a->program, *a->lp);
      break;
    }
    case Variant::kHostile: {
      a->dangerous = compute_dangerous_pairs(g, sn);
      a->timings.dangerous = clock.lap();
      if (opts.pivot == PivotStrategy::kDeterministic) detail::solve_lp(*a, build_hostile_lp(g), opts, clock);
      a->g_hat = build_aux_hostile(g, a->dangerous);
      break;
    }
    case Variant::kAuto: break;
  }
  if (a->lp) {
    a->budgets = make_budgets(a->g_hat, *a->lp,
                              variant == Variant::kFriendly ? LpVariant::kFriendly : LpVariant::kConstrained);
  }
  a->timings.aux_graph = clock.lap();
  return a;
}

// Pivots on prepared artifacts and scores the result against the input.
inline SolveReport finish(const SignedInstance& inst, std::shared_ptr<const SolveArtifacts> a,
                          const SolveOptions& opts) {
  SolveReport r;
  r.variant = a->variant;
  r.epsilon = opts.epsilon;
  r.pivot = opts.pivot;
  r.seed = opts.seed;
  r.timings = a->timings;
  detail::Stopwatch clock;
  PivotResult pr;
  if (opts.pivot == PivotStrategy::kDeterministic) {
    if (!a->budgets) throw std::logic_error("deterministic pivoting needs LP budgets");
    pr = pivot_deterministic(a->g_hat, a->consistent.instance, *a->budgets, opts.observer);
  } else {
    pr = pivot_random(a->g_hat, opts.seed);
  }
  r.timings.pivot = clock.lap();
  r.clustering = std::move(pr.clustering);
  r.trace = std::move(pr.trace);
  if (!is_feasible(inst, r.clustering)) throw std::logic_error("pivoting produced an infeasible clustering");
  r.forced_mistakes = a->consistent.forced_mistakes;
  r.cost = clustering_cost(a->consistent.instance, r.clustering);
  r.cost_original = clustering_cost(inst, r.clustering);
  if (r.cost_original != r.cost + r.forced_mistakes) throw std::logic_error("consistent-form accounting mismatch");
  if (a->lp) {
    r.lp_objective = a->lp->objective_value;
    r.lp_lower_bound = a->lp->lower_bound;
    if (opts.pivot == PivotStrategy::kDeterministic) r.certified_ratio = detail::certified_ratio(r.cost, *r.lp_objective);
  }
  r.artifacts = std::move(a);
  return r;
}

inline SolveReport solve(const SignedInstance& inst, Variant variant, const SolveOptions& opts = {}) {
  return finish(inst, prepare(inst, variant, opts), opts);
}

inline SolveReport solve_constrained(const SignedInstance& inst, const SolveOptions& opts = {}) {
  return solve(inst, Variant::kConstrained, opts);
}

inline SolveReport solve_friendly(const SignedInstance& inst, const SolveOptions& opts = {}) {
  return solve(inst, Variant::kFriendly, opts);
}

inline SolveReport solve_hostile(const SignedInstance& inst, const SolveOptions& opts = {}) {
  return solve(inst, Variant::kHostile, opts);
}

struct TrialSummary {
  std::vector<std::int64_t> costs;  // on the input instance, one per seed
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  std::int64_t min = 0;
  std::int64_t max = 0;
};

// Random-pivot runs with seeds seed, seed + 1, ... over shared artifacts.
inline TrialSummary run_trials(const SignedInstance& inst, const std::shared_ptr<const SolveArtifacts>& a,
                               int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  TrialSummary s;
  s.costs.reserve(trials);
  for (int t = 0; t < trials; ++t) {
    const PivotResult pr = pivot_random(a->g_hat, seed + static_cast<std::uint64_t>(t));
    if (!is_feasible(inst, pr.clustering)) throw std::logic_error("pivoting produced an infeasible clustering");
    s.costs.push_back(clustering_cost(inst, pr.clustering));
  }
  double sum = 0.0;
  s.min = s.max = s.costs.front();
  for (auto c : s.costs) {
    sum += static_cast<double>(c);
    s.min = std::min(s.min, c);
    s.max = std::max(s.max, c);
  }
  s.mean = sum / trials;
  double sq = 0.0;
  for (auto c : s.costs) sq += (static_cast<double>(c) - s.mean) * (static_cast<double>(c) - s.mean);
  s.stddev = trials > 1 ? std::sqrt(sq / (trials - 1)) : 0.0;
  return s;
}

}  // namespace ccc

#endif  // CCC_SOLVE_HPP_
