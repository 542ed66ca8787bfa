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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "support/exact_lp.hpp"
#include "support/fixtures.hpp"

namespace ccc {
namespace {

using testing::exact_lp;
using testing::make_instance;

CoveringProgram constrained_lp(const SignedInstance& inst, const LpBuildOptions& opts = {}) {
  const auto sn = compute_supernodes(inst);
  const auto dp = compute_dangerous_pairs(inst, sn);
  return build_constrained_lp(inst, sn, dp, find_heaps(inst, sn, dp), opts);
}

// The 0/1 assignment a clustering induces: a variable is 1 exactly when the
// clustering makes a mistake on the pairs it stands for.
std::vector<double> induced_values(const CoveringProgram& prog, const SupernodeStructure& sn, const Clustering& c) {
  std::vector<double> v(prog.var_count());
  for (int j = 0; j < prog.var_count(); ++j) {
    const auto& key = prog.keys()[j];
    if (key.kind == VariableKind::kPair) continue;
    const bool together = c.cluster_of(sn.members[key.a][0]) == c.cluster_of(sn.members[key.b][0]);
    v[j] = (key.kind == VariableKind::kPlus) != together ? 1.0 : 0.0;
  }
  return v;
}

std::vector<double> induced_pair_values(const CoveringProgram& prog, const SignedInstance& inst, const Clustering& c) {
  std::vector<double> v(prog.var_count());
  for (int j = 0; j < prog.var_count(); ++j) {
    const auto& key = prog.keys()[j];
    const bool together = c.cluster_of(key.a) == c.cluster_of(key.b);
    v[j] = inst.is_positive(key.a, key.b) != together ? 1.0 : 0.0;
  }
  return v;
}

// Keeps vertex enumeration in exact_lp cheap.
bool small_enough(const CoveringProgram& prog) {
  const auto n = static_cast<std::size_t>(prog.var_count());
  if (n > 12) return false;
  double subsets = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    subsets = subsets * static_cast<double>(prog.num_rows() + n - i) / static_cast<double>(i + 1);
  }
  return subsets <= 3e5;
}

TEST(ConstrainedLp, SingleSupernode) {
  const auto inst = make_instance(3, {{0, 1}, {1, 2}, {0, 2}}, {{0, 1}, {1, 2}});
  const auto prog = constrained_lp(inst);
  EXPECT_EQ(prog.var_count(), 0);
  EXPECT_EQ(prog.num_rows(), 0u);
  EXPECT_EQ(prog.fixed_objective(), 0.0);
  EXPECT_EQ(solve_covering(prog, 0.1).objective_value, 0.0);
}

TEST(ConstrainedLp, TwoSupernodes) {
  for (bool positive : {false, true}) {
    auto inst = SignedInstance(2);
    if (positive) inst.set_sign(0, 1, Sign::kPositive);
    const auto prog = constrained_lp(inst);
    ASSERT_EQ(prog.var_count(), 2);
    ASSERT_EQ(prog.num_rows(), 1u);
    EXPECT_EQ(prog.row(0).size(), 2u);
    EXPECT_EQ(variable_name(prog.keys()[0]), "X+[0,1]");
    EXPECT_EQ(variable_name(prog.keys()[1]), "X-[0,1]");
    EXPECT_DOUBLE_EQ(exact_lp(prog).objective, 0.0);
    EXPECT_DOUBLE_EQ(solve_covering(prog, 0.1).objective_value, 0.0);
  }
}

TEST(ConstrainedLp, BadTriangle) {
  const auto inst = testing::load("bad_triangle.ccc");
  const auto prog = constrained_lp(inst);
  EXPECT_EQ(prog.var_count(), 6);
  EXPECT_EQ(prog.num_rows(), 6u);
  const auto exact = exact_lp(prog);
  EXPECT_NEAR(exact.objective, 1.0, 1e-9);
  // Cutting edge (0,1) alone is optimal.
  std::vector<double> v(6, 0.0);
  v[prog.slot(VariableKind::kPlus, 0, 1)] = 1.0;
  v[prog.slot(VariableKind::kPlus, 0, 2)] = 1.0;
  v[prog.slot(VariableKind::kMinus, 1, 2)] = 1.0;
  EXPECT_TRUE(check_feasibility(prog, v).empty());
  EXPECT_DOUBLE_EQ(prog.objective_value(v), 1.0);
  const auto sol = solve_covering(prog, 0.1);
  EXPECT_LE(sol.objective_value, 1.1);
  EXPECT_GE(sol.objective_value, 1.0 - 1e-9);
  EXPECT_LE(sol.lower_bound, 1.0 + 1e-9);
}

TEST(ConstrainedLp, HostileSuperedgeFixings) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  const auto prog = constrained_lp(inst);
  EXPECT_EQ(prog.slot(VariableKind::kPlus, 0, 2), CoveringProgram::kFixedOne);
  EXPECT_EQ(prog.slot(VariableKind::kMinus, 0, 2), CoveringProgram::kFixedZero);
  EXPECT_EQ(prog.slot(VariableKind::kPlus, 1, 1), CoveringProgram::kFixedZero);
  EXPECT_EQ(prog.slot(VariableKind::kMinus, 1, 1), CoveringProgram::kFixedOne);
  EXPECT_NEAR(exact_lp(prog).objective, 1.0, 1e-9);
}

TEST(ConstrainedLp, RowsArePureCovering) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = to_consistent_form(generate(testing::mixed_spec(seed, 5, 20))).instance;
    for (bool presolve : {false, true}) {
      const auto prog = constrained_lp(inst, {.fix_zero_cost = presolve});
      for (double w : prog.objective()) EXPECT_GE(w, 0.0);
      for (std::size_t r = 0; r < prog.num_rows(); ++r) {
        const auto row = prog.row(r);
        ASSERT_FALSE(row.empty());
        double cover = 0.0;
        for (const auto& t : row) {
          EXPECT_GT(t.coef, 0.0);
          cover += t.coef;
        }
        EXPECT_GE(cover, 1.0);
      }
    }
  }
}

TEST(ConstrainedLp, RejectsInconsistentInstance) {
  const auto inst = make_instance(3, {{0, 2}}, {}, {{0, 2}});
  const auto sn = compute_supernodes(inst);
  EXPECT_THROW(build_constrained_lp(inst, sn, DangerousPairing(3), {}), std::invalid_argument);
}

TEST(FriendlyLp, FriendlyPairOnly) {
  const auto inst = make_instance(2, {{0, 1}}, {{0, 1}});
  const auto prog = build_friendly_lp(inst, compute_supernodes(inst));
  EXPECT_EQ(prog.var_count(), 0);
  EXPECT_EQ(prog.num_rows(), 0u);
}

TEST(FriendlyLp, BadTriangleMatchesConstrained) {
  const auto inst = testing::load("bad_triangle.ccc");
  const auto friendly = build_friendly_lp(inst, compute_supernodes(inst));
  const auto constrained = constrained_lp(inst);
  ASSERT_EQ(friendly.num_rows(), constrained.num_rows());
  EXPECT_EQ(friendly.keys(), constrained.keys());
  EXPECT_EQ(friendly.objective(), constrained.objective());
  for (std::size_t r = 0; r < friendly.num_rows(); ++r) {
    ASSERT_EQ(friendly.row(r).size(), constrained.row(r).size());
    for (std::size_t i = 0; i < friendly.row(r).size(); ++i) {
      EXPECT_EQ(friendly.row(r)[i].var, constrained.row(r)[i].var);
    }
  }
}

TEST(FriendlyLp, PlantedTwoSupernodes) {
  const auto inst = make_instance(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}}, {{0, 1}, {1, 2}, {3, 4}});
  const auto prog = build_friendly_lp(inst, compute_supernodes(inst));
  EXPECT_DOUBLE_EQ(exact_lp(prog).objective, 0.0);
  EXPECT_DOUBLE_EQ(solve_covering(prog, 0.1).objective_value, 0.0);
}

TEST(FriendlyLp, RejectsHostilePairs) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  EXPECT_THROW(build_friendly_lp(inst, compute_supernodes(inst)), std::invalid_argument);
}

TEST(HostileLp, TriangleFree) {
  const auto inst = make_instance(4, {{0, 1}, {2, 3}}, {}, {{0, 2}});
  const auto prog = build_hostile_lp(inst);
  EXPECT_EQ(prog.num_rows(), 0u);
  EXPECT_EQ(prog.var_count(), 5);
  EXPECT_EQ(solve_covering(prog, 0.1).objective_value, 0.0);
}

TEST(HostileLp, DangerousTriangle) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  const auto prog = build_hostile_lp(inst, compute_dangerous_pairs(inst, compute_supernodes(inst)));
  ASSERT_EQ(prog.num_rows(), 1u);
  ASSERT_EQ(prog.var_count(), 2);
  EXPECT_EQ(prog.slot(VariableKind::kPair, 0, 2), CoveringProgram::kFixedZero);
  std::vector<std::string> names;
  for (const auto& t : prog.row(0)) names.push_back(variable_name(prog.keys()[t.var]));
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"x[0,1]", "x[1,2]"}));
  EXPECT_NEAR(solve_covering(prog, 0.1).objective_value, 1.0, 1e-9);
}

TEST(HostileLp, RejectsFriendlyPairs) {
  EXPECT_THROW(build_hostile_lp(make_instance(3, {}, {{0, 1}})), std::invalid_argument);
}

TEST(SolveCovering, ZeroRows) {
  const auto prog = build_hostile_lp(SignedInstance(3));
  const auto sol = solve_covering(prog, 0.1);
  EXPECT_EQ(sol.values, std::vector<double>(3, 0.0));
  EXPECT_EQ(sol.objective_value, 0.0);
}

TEST(SolveCovering, SingleRow) {
  for (double w : {1.0, 2.5, 40.0}) {
    ProgramBuilder b(LpVariant::kHostile);
    b.init_pair_table(2);
    b.add_variable({VariableKind::kPair, 0, 1}, w);
    b.add_row(ProgramBuilder::RawRow{{{0, 1.0}, {CoveringProgram::kFixedZero, 0.0}, {CoveringProgram::kFixedZero, 0.0}}},
              1);
    const auto prog = b.finish();
    ASSERT_EQ(prog.num_rows(), 1u);
    const auto sol = solve_covering(prog, 0.1);
    EXPECT_EQ(sol.values, std::vector<double>{1.0});
    EXPECT_EQ(sol.objective_value, w);
  }
}

TEST(SolveCovering, WeightedSingleRow) {
  // Friendly pairs merge {0,1,2} and {3,4}; the six cross pairs are positive
  // except (2,4), giving weights 5 and 1 on the pairwise row.
  const auto inst = make_instance(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}},
                                  {{0, 1}, {1, 2}, {3, 4}});
  const auto prog = build_friendly_lp(inst, compute_supernodes(inst));
  ASSERT_EQ(prog.num_rows(), 1u);
  EXPECT_EQ(prog.objective()[prog.slot(VariableKind::kPlus, 0, 1)], 5.0);
  EXPECT_EQ(prog.objective()[prog.slot(VariableKind::kMinus, 0, 1)], 1.0);
  const auto sol = solve_covering(prog, 0.1);
  EXPECT_GE(sol.objective_value, 1.0);
  EXPECT_LE(sol.objective_value, 1.1);
}

TEST(SolveCovering, RejectsBadEpsilon) {
  const auto prog = constrained_lp(testing::load("bad_triangle.ccc"));
  EXPECT_THROW(solve_covering(prog, 0.0), std::invalid_argument);
  EXPECT_THROW(solve_covering(prog, 1.0), std::invalid_argument);
}

TEST(CheckFeasibility, ZerosViolateEveryRow) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  const auto prog = build_hostile_lp(inst);
  EXPECT_EQ(check_feasibility(prog, std::vector<double>(prog.var_count(), 0.0)),
            (std::vector<std::size_t>{0}));
  EXPECT_TRUE(check_feasibility(prog, solve_covering(prog, 0.2)).empty());
}

TEST(CheckFeasibility, PerturbedTightRow) {
  const auto prog = constrained_lp(testing::load("bad_triangle.ccc"));
  const auto sol = solve_covering(prog, 0.1);
  ASSERT_TRUE(check_feasibility(prog, sol).empty());
  bool found = false;
  for (std::size_t r = 0; r < prog.num_rows() && !found; ++r) {
    double sum = 0.0;
    for (const auto& t : prog.row(r)) sum += t.coef * sol.values[t.var];
    if (sum != 1.0) continue;
    found = true;
    auto v = sol.values;
    for (const auto& t : prog.row(r)) {
      if (v[t.var] > 0.0) {
        v[t.var] -= 1e-3;
        break;
      }
    }
    const auto violated = check_feasibility(prog, v);
    EXPECT_NE(std::find(violated.begin(), violated.end(), r), violated.end());
  }
  EXPECT_TRUE(found);
}

TEST(LpProperties, InducedAssignmentsAreFeasible) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto inst = to_consistent_form(generate(testing::mixed_spec(seed, 4, 8))).instance;
    const auto sn = compute_supernodes(inst);
    const auto prog = constrained_lp(inst);
    for_each_feasible_clustering(inst, [&](const Clustering& c) {
      const auto v = induced_values(prog, sn, c);
      EXPECT_TRUE(check_feasibility(prog, v).empty());
      EXPECT_DOUBLE_EQ(prog.objective_value(v), static_cast<double>(clustering_cost(inst, c)));
    });
  }
}

TEST(LpProperties, HostileInducedAssignmentsAreFeasible) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto spec = testing::mixed_spec(seed, 4, 7);
    spec.friendly = 0.0;
    const auto inst = to_consistent_form(generate(spec)).instance;
    const auto prog = build_hostile_lp(inst);
    for_each_feasible_clustering(inst, [&](const Clustering& c) {
      const auto v = induced_pair_values(prog, inst, c);
      EXPECT_TRUE(check_feasibility(prog, v).empty());
      EXPECT_DOUBLE_EQ(prog.objective_value(v), static_cast<double>(clustering_cost(inst, c)));
    });
  }
}

TEST(LpProperties, SolverWithinFactorOfExactOptimum) {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = to_consistent_form(generate(testing::mixed_spec(seed, 3, 7))).instance;
    const auto sn = compute_supernodes(inst);
    std::vector<CoveringProgram> progs{constrained_lp(inst)};
    if (inst.hostile().empty()) progs.push_back(build_friendly_lp(inst, sn));
    if (inst.friendly().empty() && inst.num_nodes() <= 5) progs.push_back(build_hostile_lp(inst));
    for (const auto& prog : progs) {
      if (!small_enough(prog)) continue;
      const double exact = exact_lp(prog).objective;
      const auto sol = solve_covering(prog, 0.1, seed);
      EXPECT_TRUE(check_feasibility(prog, sol).empty());
      EXPECT_GE(sol.objective_value, exact - 1e-9);
      EXPECT_LE(sol.objective_value, 1.1 * exact + 1e-9);
      EXPECT_LE(sol.lower_bound, exact + 1e-9);
      for (double v : sol.values) {
        EXPECT_GE(v, 0.0);
        EXPECT_LE(v, 1.0);
      }
      ++compared;
    }
  }
  EXPECT_GT(compared, 40);
}

TEST(LpProperties, PresolvePreservesOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = to_consistent_form(generate(testing::mixed_spec(seed, 3, 8))).instance;
    const auto plain = constrained_lp(inst);
    const auto reduced = constrained_lp(inst, {.fix_zero_cost = true});
    EXPECT_LE(reduced.num_rows(), plain.num_rows());
    if (!small_enough(plain) || !small_enough(reduced)) continue;
    EXPECT_NEAR(exact_lp(plain).objective, exact_lp(reduced).objective, 1e-9);
  }
}

TEST(LpProperties, BelowExactClusteringOptimum) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto inst = to_consistent_form(generate(testing::mixed_spec(seed, 4, 9))).instance;
    const double opt = static_cast<double>(exact_opt(inst).opt_cost);
    const auto sol = solve_covering(constrained_lp(inst, {.fix_zero_cost = true}), 0.1, seed);
    EXPECT_LE(sol.lower_bound, opt + 1e-9);
    EXPECT_LE(sol.objective_value, 1.1 * opt + 1e-9);
  }
}

TEST(LpProperties, DeterministicUnderSeed) {
  const auto inst = to_consistent_form(generate(testing::mixed_spec(17, 30, 30))).instance;
  const auto prog = constrained_lp(inst, {.fix_zero_cost = true});
  const auto a = solve_covering(prog, 0.1, 5);
  const auto b = solve_covering(prog, 0.1, 5);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.objective_value, b.objective_value);
}

TEST(LpProperties, ClampingAndScalingKeepFeasibility) {
  const auto inst = to_consistent_form(generate(testing::mixed_spec(23, 12, 12))).instance;
  const auto prog = constrained_lp(inst);
  const auto sol = solve_covering(prog, 0.1);
  auto scaled = sol.values;
  for (double& v : scaled) v = std::min(1.0, 3.0 * v);
  EXPECT_TRUE(check_feasibility(prog, scaled).empty());
}

TEST(EdgeValues, TiedToSuperedgeVariables) {
  const auto inst = testing::load("four_supernodes.ccc");
  const auto sn = compute_supernodes(inst);
  const auto prog = constrained_lp(inst);
  const auto sol = solve_covering(prog, 0.1);
  const auto x = edge_values(inst, sn, prog, sol.values);
  for (int u = 0; u < 8; ++u) {
    for (int v = u + 1; v < 8; ++v) {
      const auto kind = inst.is_positive(u, v) ? VariableKind::kPlus : VariableKind::kMinus;
      EXPECT_EQ(x.get(u, v), prog.value(kind, sn.of(u), sn.of(v), sol.values));
    }
  }
  EXPECT_EQ(x.get(0, 2), 0.0);  // negative pair on the hostile superedge
  EXPECT_EQ(x.get(0, 1), 0.0);  // inside a supernode
}

}  // namespace
}  // namespace ccc
