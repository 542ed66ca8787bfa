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

#include "support/fixtures.hpp"

namespace ccc {
namespace {

using testing::make_instance;

TEST(ExactOpt, BadTriangle) {
  const auto r = exact_opt(testing::load("bad_triangle.ccc"));
  EXPECT_EQ(r.opt_cost, 1);
  EXPECT_EQ(r.num_feasible, 5);
}

TEST(ExactOpt, DangerousTriangle) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  const auto r = exact_opt(inst);
  EXPECT_EQ(r.opt_cost, 1);
  EXPECT_EQ(r.num_feasible, 3);
  EXPECT_TRUE(is_feasible(inst, r.opt_clustering));
}

TEST(ExactOpt, CliqueWithHostilePair) {
  SignedInstance inst(4);
  for (const auto& e : testing::all_pairs(4)) inst.set_sign(e.u, e.v, Sign::kPositive);
  inst.add_hostile(0, 1);
  const auto consistent = to_consistent_form(inst);
  const auto r = exact_opt(consistent.instance);
  EXPECT_EQ(r.opt_cost, 2);
  EXPECT_EQ(r.num_feasible, 15 - 5);
  EXPECT_EQ(exact_opt(inst).opt_cost, 3);
}

TEST(ExactOpt, CountsSupernodePartitions) {
  const auto r = exact_opt(testing::load("four_supernodes.ccc"));
  EXPECT_EQ(r.num_feasible, 10);
  EXPECT_EQ(r.opt_cost, 8);
}

TEST(ExactOpt, TooLarge) {
  EXPECT_THROW(exact_opt(SignedInstance(13)), TooLarge);
  EXPECT_NO_THROW(exact_opt(make_instance(14, {}, {{0, 1}, {2, 3}})));
  EXPECT_THROW(exact_opt_unconstrained(SignedInstance(13)), TooLarge);
}

TEST(ExactOpt, AgreesWithUnconstrainedEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate({.n = 3 + static_cast<int>(seed % 6), .k = 2, .noise = 0.4, .seed = seed});
    EXPECT_EQ(exact_opt(inst).opt_cost, exact_opt_unconstrained(inst));
  }
}

TEST(ExactOpt, MinimumOverEnumeration) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = generate(testing::mixed_spec(seed, 4, 8));
    const auto r = exact_opt(inst);
    EXPECT_TRUE(is_feasible(inst, r.opt_clustering));
    EXPECT_EQ(clustering_cost(inst, r.opt_clustering), r.opt_cost);
    std::int64_t count = 0;
    for_each_feasible_clustering(inst, [&](const Clustering& c) {
      EXPECT_TRUE(is_feasible(inst, c));
      EXPECT_GE(clustering_cost(inst, c), r.opt_cost);
      ++count;
    });
    EXPECT_EQ(count, r.num_feasible);
  }
}

TEST(SlowRatioCheck, EmptySurvivors) {
  const auto inst = testing::load("bad_triangle.ccc");
  AuxGraph g(3);
  std::vector<char> only_p{1, 0, 0};
  EXPECT_EQ(slow_ratio_check(g, inst, EdgeBudgets(3), only_p, 0), (PivotRatio{0, 0}));
}

TEST(SlowRatioCheck, ApexOfSingleTriangle) {
  const auto inst = testing::load("bad_triangle.ccc");
  AuxGraph g(3);
  for (const auto& e : inst.positive_edges()) g.set_sign(e.u, e.v, Sign::kPositive);
  EdgeBudgets y(3);
  y.set(0, 2, 0.75);
  y.set(0, 1, 3.0);
  const std::vector<char> all{1, 1, 1};
  const auto unit = static_cast<std::int64_t>(kValueGridScale);
  EXPECT_EQ(slow_ratio_check(g, inst, y, all, 1), (PivotRatio{1, 3 * unit / 4}));
  EXPECT_EQ(slow_ratio_check(g, inst, y, all, 2), (PivotRatio{1, 3 * unit}));
  EXPECT_EQ(slow_ratio_check(g, inst, y, all, 0), (PivotRatio{1, 0}));
}

}  // namespace
}  // namespace ccc
