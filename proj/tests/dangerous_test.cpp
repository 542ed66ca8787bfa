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

#include <set>
#include <tuple>

#include "support/fixtures.hpp"

namespace ccc {
namespace {

using testing::make_instance;

struct Prepared {
  SignedInstance inst;
  SupernodeStructure sn;
};

Prepared prepare_consistent(const GenSpec& spec) {
  auto inst = to_consistent_form(generate(spec)).instance;
  auto sn = compute_supernodes(inst);
  return {std::move(inst), std::move(sn)};
}

// Scans every ordered pair of uncovered positive edges for an addable
// dangerous pair.
bool has_addable_pair(const SignedInstance& inst, const SupernodeStructure& sn, const DangerousPairing& dp) {
  std::vector<NodePair> free_edges;
  for (const auto& e : inst.positive_edges()) {
    if (!sn.same(e.u, e.v) && !dp.contains(e)) free_edges.push_back(e);
  }
  for (const auto& e : free_edges) {
    for (const auto& f : free_edges) {
      if (e == f) continue;
      for (int x : {e.u, e.v}) {
        const int y = x == e.u ? e.v : e.u;
        for (int w : {f.u, f.v}) {
          const int z = w == f.u ? f.v : f.u;
          if (!sn.same(y, w)) continue;
          const int sx = sn.of(x), sy = sn.of(y), sz = sn.of(z);
          if (sx == sz || sy == sz || sx == sy) continue;
          if (sn.hostile(sx, sz)) return true;
        }
      }
    }
  }
  return false;
}

void expect_pairing_invariants(const SignedInstance& inst, const SupernodeStructure& sn,
                               const DangerousPairing& dp) {
  std::set<NodePair> seen;
  for (const auto& p : dp.pairs()) {
    EXPECT_TRUE(inst.is_positive(p.a, p.b));
    EXPECT_TRUE(inst.is_positive(p.c, p.d));
    EXPECT_TRUE(sn.same(p.b, p.c));
    EXPECT_FALSE(sn.same(p.a, p.b));
    EXPECT_FALSE(sn.same(p.c, p.d));
    EXPECT_TRUE(sn.hostile(sn.of(p.a), sn.of(p.d)));
    EXPECT_TRUE(seen.insert(p.first()).second);
    EXPECT_TRUE(seen.insert(p.second()).second);
    EXPECT_EQ(dp.partner(p.first()), p.second());
    EXPECT_EQ(dp.partner(p.second()), p.first());
  }
  EXPECT_EQ(dp.num_edges(), seen.size());
  const auto edges = dp.edges();
  EXPECT_EQ(std::set<NodePair>(edges.begin(), edges.end()), seen);
  for (const auto& e : edges) {
    EXPECT_EQ(dp.partner(dp.partner(e)), e);
    EXPECT_NE(dp.partner(e), e);
  }
}

TEST(DangerousPairs, EmptyWithoutHostileSuperedges) {
  const auto inst = to_consistent_form(generate({.n = 12, .k = 3, .noise = 0.3, .friendly = 0.3, .seed = 4})).instance;
  EXPECT_TRUE(compute_dangerous_pairs(inst, compute_supernodes(inst)).empty());
}

TEST(DangerousPairs, DangerousTriangle) {
  const auto inst = testing::load("dangerous_triangle.ccc");
  const auto dp = compute_dangerous_pairs(inst, compute_supernodes(inst));
  ASSERT_EQ(dp.pairs().size(), 1u);
  EXPECT_EQ(dp.pairs()[0], (DangerousPair{0, 1, 1, 2}));
  EXPECT_EQ(dp.edges(), (std::vector<NodePair>{{0, 1}, {1, 2}}));
}

TEST(DangerousPairs, GoldenFixtureTrace) {
  const auto inst = testing::load("four_supernodes.ccc");
  const auto sn = compute_supernodes(inst);
  const auto dp = compute_dangerous_pairs(inst, sn);
  const std::vector<DangerousPair> expected{{0, 4, 5, 2}, {1, 5, 4, 3}, {1, 7, 7, 2}};
  EXPECT_EQ(dp.pairs(), expected);
  EXPECT_EQ(dp.num_edges(), 6u);
  // Every positive edge of the superedges A-B, A-D, B-D and B-C is covered.
  for (const auto& e : inst.positive_edges()) {
    const int a = sn.of(e.u), b = sn.of(e.v);
    const std::set<std::pair<int, int>> covered{{0, 1}, {0, 3}, {1, 3}, {1, 2}};
    if (covered.count({std::min(a, b), std::max(a, b)})) EXPECT_TRUE(dp.contains(e));
  }
  expect_pairing_invariants(inst, sn, dp);
}

TEST(DangerousPairs, BranchOrderPrefersHostileToFirstEndpoint) {
  // Edge (0,1): supernode 2 is hostile to both endpoints' supernodes.
  const auto inst = make_instance(4, {{0, 1}, {1, 2}, {0, 3}}, {}, {{0, 2}, {1, 3}});
  const auto dp = compute_dangerous_pairs(inst, compute_supernodes(inst));
  ASSERT_FALSE(dp.empty());
  EXPECT_EQ(dp.pairs()[0], (DangerousPair{0, 1, 1, 2}));
}

TEST(DangerousPairs, InvariantsAndMaximality) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto spec = testing::mixed_spec(seed, 6, 30);
    const auto [inst, sn] = prepare_consistent(spec);
    const auto dp = compute_dangerous_pairs(inst, sn);
    expect_pairing_invariants(inst, sn, dp);
    EXPECT_FALSE(has_addable_pair(inst, sn, dp)) << "seed " << seed;
  }
}

TEST(DangerousPairs, Deterministic) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto [inst, sn] = prepare_consistent(testing::mixed_spec(seed, 10, 25));
    const auto reparsed = parse_instance(format_instance(inst));
    EXPECT_EQ(compute_dangerous_pairs(inst, sn).pairs(),
              compute_dangerous_pairs(reparsed, compute_supernodes(reparsed)).pairs());
  }
}

TEST(DangerousPairing, RejectsOverlappingPairs) {
  DangerousPairing dp(4);
  dp.add({0, 1, 1, 2});
  EXPECT_THROW(dp.add({1, 0, 0, 3}), std::logic_error);
}

}  // namespace
}  // namespace ccc
